#include "skewcfc/matrix_json.hpp"

#include "skewcfc/errors.hpp"

#include <fstream>

namespace skewcfc {

using nlohmann::json;

json matrix_to_json(const Matrix& m)
{
    json entries = json::array();
    for (const auto& e : m.entries())
        entries.push_back(json::array({rational_to_fraction(e.re()), rational_to_fraction(e.im())}));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("matrix JSON needs \"rows\", \"cols\" and \"entries\"", 0);
    auto is_count = [](const json& v) { return v.is_number_integer() && v.get<long long>() >= 0; };
    if (!is_count(j["rows"]) || !is_count(j["cols"]) || !j["entries"].is_array())
        throw ParseError("matrix JSON has wrongly typed fields", 0);
    const auto rows = j["rows"].get<std::size_t>();
    const auto cols = j["cols"].get<std::size_t>();
    const json& entries = j["entries"];
    if (entries.size() != rows * cols)
        throw DimensionMismatch("matrix JSON declares " + std::to_string(rows) + "x" + std::to_string(cols) +
                                " but lists " + std::to_string(entries.size()) + " entries");
    Matrix m(rows, cols);
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const json& e = entries[k];
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw ParseError("entry must be a [re, im] pair of strings", k);
        m(k / cols, k % cols) = GaussianRational(parse_rational(e[0].get<std::string>()),
                                                 parse_rational(e[1].get<std::string>()));
    }
    return m;
}

Matrix read_matrix_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    }
    catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON in '") + path + "': " + e.what(), e.byte);
    }
    return matrix_from_json(j);
}

void write_matrix_file(const std::string& path, const Matrix& m)
{
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write '" + path + "'");
    out << matrix_to_json(m).dump(2) << '\n';
}

} // namespace skewcfc
