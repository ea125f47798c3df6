#include "skewcfc/certificate.hpp"

#include "skewcfc/matrix_json.hpp"
#include "skewcfc/spec_dsl.hpp"

namespace skewcfc {

namespace {

std::string spelled(const CfcSpec& s)
{
    return s.empty() ? "0" : format_spec(s);
}

} // namespace

Matrix Certificate::composed_witness() const
{
    Matrix x = Matrix::identity(source.size());
    for (const auto& step : steps)
        x = x * step.witness();
    return x;
}

bool Certificate::verify() const
{
    const CfcSpec* at = &source;
    for (const auto& step : steps) {
        if (step.lhs() != *at)
            return false;
        at = &step.rhs();
    }
    if (*at != target)
        return false;
    return congruence(materialize(source), composed_witness()) == materialize(target);
}

nlohmann::json certificate_to_json(const Certificate& cert, const std::optional<Matrix>& solution)
{
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& step : cert.steps) {
        steps.push_back({
            {"law", law_name(step.law())},
            {"paper_ref", step.ref()},
            {"lhs", format_spec(step.lhs())},
            {"rhs", format_spec(step.rhs())},
            {"witness", matrix_to_json(step.witness())},
        });
    }
    nlohmann::json j = {
        {"source", format_spec(cert.source)},
        {"target", format_spec(cert.target)},
        {"steps", std::move(steps)},
    };
    if (solution)
        j["solution"] = matrix_to_json(*solution);
    return j;
}

void print_chain(std::ostream& os, const Certificate& cert)
{
    if (cert.steps.empty()) {
        os << "  " << spelled(cert.source) << " (no steps)\n";
        return;
    }
    for (const auto& step : cert.steps) {
        os << "  " << spelled(step.lhs()) << " ~> " << spelled(step.rhs()) << "   [" << law_name(step.law());
        if (step.ref() != law_name(step.law()))
            os << ' ' << step.ref();
        os << "]\n";
    }
}

} // namespace skewcfc
