#include "skewcfc/cli.hpp"

#include "skewcfc/errors.hpp"
#include "skewcfc/matrix_json.hpp"
#include "skewcfc/planner.hpp"
#include "skewcfc/skew_canon.hpp"
#include "skewcfc/spec_dsl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>

namespace skewcfc {

namespace {

using nlohmann::json;

struct Options {
    bool json = false;
    std::string spec;
    std::optional<std::size_t> m;
    std::optional<std::size_t> rank_b;
    std::string cert_file;
    std::string out_file;
    std::string b_file;
    std::string a_file;
    std::string x_file;
};

// Output context for one invocation: collects the JSON envelope or writes
// human text directly.
class Reporter {
public:
    Reporter(std::string command, bool as_json, std::ostream& out) : command_(std::move(command)), json_(as_json), out_(out) {}

    bool as_json() const { return json_; }
    std::ostream& text() { return out_; }
    json& result() { return result_; }

    void set_spec(const CfcSpec& spec) { spec_ = format_spec(spec); }

    int finish(int code)
    {
        if (json_) {
            json envelope = {{"command", command_}, {"exit_code", code}, {"result", result_}};
            if (spec_)
                envelope["spec"] = *spec_;
            out_ << envelope.dump(2) << '\n';
        }
        return code;
    }

private:
    std::string command_;
    bool json_;
    std::ostream& out_;
    json result_ = json::object();
    std::optional<std::string> spec_;
};

int verdict_exit(VerdictKind kind)
{
    switch (kind) {
    case VerdictKind::Consistent: return kExitOk;
    case VerdictKind::Inconsistent: return kExitInconsistent;
    case VerdictKind::Unknown: return kExitUnknown;
    }
    return kExitInputError;
}

std::size_t target_m(const Options& o)
{
    if (o.m && o.rank_b)
        throw QueryError("give either --m or --rank-b, not both");
    if (o.rank_b) {
        if (*o.rank_b % 2 != 0)
            throw QueryError("--rank-b " + std::to_string(*o.rank_b) +
                             " is odd; a skew-symmetric matrix always has even rank");
        return *o.rank_b / 2;
    }
    if (!o.m)
        throw QueryError("missing --m (or --rank-b)");
    return *o.m;
}

void write_json_file(const std::string& path, const json& j)
{
    std::ofstream f(path);
    if (!f)
        throw QueryError("cannot write " + path);
    f << j.dump(2) << '\n';
}

int cmd_rho(const CfcSpec& spec, Reporter& r)
{
    const RhoValue v = rho(spec);
    if (r.as_json())
        r.result() = {{"rho", v.to_string()}, {"quarters", v.quarters}, {"floor", v.floor()}};
    else
        r.text() << v.to_string() << '\n';
    return kExitOk;
}

int cmd_census(const CfcSpec& spec, Reporter& r)
{
    const BlockCensus c = census(spec);
    const Matrix a = materialize(spec);
    const std::size_t formula = rank_a_plus_at_formula(spec);
    const std::size_t computed = rank(a + a.transpose());
    const std::pair<const char*, std::size_t> rows[] = {
        {"j1", c.j1},         {"j_odd", c.j_odd},     {"j_even", c.j_even},   {"gamma_even", c.gamma_even},
        {"gamma_odd", c.gamma_odd}, {"h2", c.h2},    {"h_plus", c.h_plus},   {"h_minus", c.h_minus},
        {"n", c.n},
    };
    if (r.as_json()) {
        for (const auto& [k, v] : rows)
            r.result()[k] = v;
        r.result()["rank_sym_formula"] = formula;
        r.result()["rank_sym_computed"] = computed;
        r.result()["rho"] = rho(spec).to_string();
    } else {
        for (const auto& [k, v] : rows)
            r.text() << k << ' ' << v << '\n';
        r.text() << "rank(A+A^T) formula " << formula << '\n';
        r.text() << "rank(A+A^T) computed " << computed << '\n';
        r.text() << "rho " << rho(spec).to_string() << '\n';
    }
    return formula == computed ? kExitOk : kExitInconsistent;
}

int cmd_decide(const CfcSpec& spec, const Options& o, Reporter& r)
{
    const Verdict v = decide(spec, target_m(o));
    if (r.as_json()) {
        r.result() = {
            {"verdict", verdict_name(v.kind)},
            {"reason", reason_label(v.reason)},
            {"explanation", reason_text(v.reason)},
            {"m", v.m},
            {"rho", rho(spec).to_string()},
            {"necessity_bound", v.necessity_bound},
            {"certificate", v.certificate ? certificate_to_json(*v.certificate) : json(nullptr)},
        };
    } else {
        r.text() << verdict_name(v.kind) << " (" << reason_label(v.reason) << "): " << reason_text(v.reason) << '\n';
        r.text() << "m " << v.m << ", rho " << rho(spec).to_string() << ", floor(rho) " << v.necessity_bound << '\n';
        if (v.certificate) {
            r.text() << "certificate:\n";
            print_chain(r.text(), *v.certificate);
        }
    }
    return verdict_exit(v.kind);
}

int cmd_solve(const CfcSpec& spec, const Options& o, Reporter& r)
{
    const std::size_t m = target_m(o);
    const Verdict v = decide(spec, m);
    if (v.kind != VerdictKind::Consistent) {
        if (r.as_json())
            r.result() = {{"verdict", verdict_name(v.kind)}, {"reason", reason_label(v.reason)}, {"m", m}};
        else
            r.text() << verdict_name(v.kind) << " (" << reason_label(v.reason) << "): " << reason_text(v.reason) << '\n';
        return verdict_exit(v.kind);
    }
    const Matrix x = v.certificate->composed_witness();
    if (!o.out_file.empty())
        write_matrix_file(o.out_file, x);
    if (!o.cert_file.empty())
        write_json_file(o.cert_file, certificate_to_json(*v.certificate, x));
    if (r.as_json()) {
        r.result() = {{"verdict", "Consistent"}, {"m", m}, {"solution", matrix_to_json(x)},
                      {"certificate", certificate_to_json(*v.certificate)}};
    } else {
        print_chain(r.text(), *v.certificate);
        if (o.out_file.empty())
            r.text() << matrix_to_json(x).dump(2) << '\n';
    }
    return kExitOk;
}

int cmd_solve_b(const CfcSpec& spec, const Options& o, Reporter& r)
{
    const Matrix b = read_matrix_file(o.b_file);
    if (!is_skew(b))
        throw QueryError(o.b_file + " is not skew-symmetric");
    const std::size_t rb = rank(b);
    const Verdict v = decide(spec, rb / 2);
    if (v.kind != VerdictKind::Consistent) {
        if (r.as_json())
            r.result() = {{"verdict", verdict_name(v.kind)}, {"reason", reason_label(v.reason)}, {"rank_b", rb}};
        else
            r.text() << verdict_name(v.kind) << " (" << reason_label(v.reason) << "): rank B = " << rb << ", "
                     << reason_text(v.reason) << '\n';
        return verdict_exit(v.kind);
    }
    const Matrix x = solve_general(spec, b);
    if (!o.out_file.empty())
        write_matrix_file(o.out_file, x);
    if (r.as_json())
        r.result() = {{"verdict", "Consistent"}, {"rank_b", rb}, {"solution", matrix_to_json(x)}};
    else if (o.out_file.empty())
        r.text() << matrix_to_json(x).dump(2) << '\n';
    else
        r.text() << "wrote " << o.out_file << '\n';
    return kExitOk;
}

int cmd_verify(const std::optional<CfcSpec>& spec, const Options& o, Reporter& r)
{
    if (spec.has_value() == !o.a_file.empty())
        throw QueryError("verify needs exactly one of SPEC or --a FILE");
    const Matrix a = spec ? materialize(*spec) : read_matrix_file(o.a_file);
    const Matrix x = read_matrix_file(o.x_file);
    const Matrix b = read_matrix_file(o.b_file);
    const bool ok = verify(a, x, b);
    if (r.as_json())
        r.result() = {{"verified", ok}};
    else
        r.text() << (ok ? "verified: X^T A X = B" : "mismatch: X^T A X != B") << '\n';
    return ok ? kExitOk : kExitInconsistent;
}

int cmd_max_rank(const CfcSpec& spec, Reporter& r)
{
    const MaxSkewRank mr = max_skew_rank(spec);
    if (r.as_json()) {
        r.result() = {{"max_rank", mr.value ? json(*mr.value) : json(nullptr)},
                      {"lower_bound", mr.lower_bound},
                      {"upper_bound", mr.upper_bound}};
    } else if (mr.value) {
        r.text() << *mr.value << '\n';
    } else {
        r.text() << "unknown (between " << mr.lower_bound << " and " << mr.upper_bound << ")\n";
    }
    return mr.value ? kExitOk : kExitUnknown;
}

int report_error(Reporter& r, std::ostream& err, const std::string& kind, const std::string& message,
                 std::optional<std::size_t> position = std::nullopt)
{
    if (r.as_json()) {
        r.result() = {{"error", kind}, {"message", message}};
        if (position)
            r.result()["position"] = *position;
    }
    err << "error: " << message << '\n';
    return r.finish(kExitInputError);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact solver for X^T A X = B with B skew-symmetric and A in canonical congruence form"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "Emit a JSON envelope instead of text");

    const std::string spec_help = "Block sum, e.g. \"J3 + G2*2 + H4(2)\"";
    auto* rho_cmd = app.add_subcommand("rho", "Print rho(A)");
    auto* census_cmd = app.add_subcommand("census", "Block census and rank(A + A^T)");
    auto* decide_cmd = app.add_subcommand("decide", "Decide A ~> H_2(-1)^m");
    auto* solve_cmd = app.add_subcommand("solve", "Solve X^T A X = H_2(-1)^m");
    auto* solve_b_cmd = app.add_subcommand("solve-b", "Solve X^T A X = B for a skew B");
    auto* verify_cmd = app.add_subcommand("verify", "Check X^T A X = B exactly");
    auto* max_cmd = app.add_subcommand("max-rank", "Largest rank of a skew B with A ~> B");

    for (auto* cmd : {rho_cmd, census_cmd, decide_cmd, solve_cmd, solve_b_cmd, max_cmd})
        cmd->add_option("SPEC", o.spec, spec_help)->required();
    verify_cmd->add_option("SPEC", o.spec, spec_help);
    for (auto* cmd : {decide_cmd, solve_cmd}) {
        cmd->add_option("--m", o.m, "Half the rank of the target");
        cmd->add_option("--rank-b", o.rank_b, "Rank of the target (even)");
    }
    solve_cmd->add_option("--cert", o.cert_file, "Write the certificate JSON here");
    for (auto* cmd : {solve_cmd, solve_b_cmd})
        cmd->add_option("--out", o.out_file, "Write the solution matrix JSON here");
    solve_b_cmd->add_option("--b", o.b_file, "Skew-symmetric B (matrix JSON)")->required();
    verify_cmd->add_option("--a", o.a_file, "A as matrix JSON instead of SPEC");
    verify_cmd->add_option("--x", o.x_file, "X (matrix JSON)")->required();
    verify_cmd->add_option("--b", o.b_file, "B (matrix JSON)")->required();

    std::vector<std::string> argv_store{"skewcfc"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store)
        argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    CLI::App* cmd = app.get_subcommands().front();
    Reporter r(cmd->get_name(), o.json, out);
    try {
        std::optional<CfcSpec> spec;
        if (cmd != verify_cmd || cmd->count("SPEC") > 0) {
            spec = parse_spec(o.spec);
            r.set_spec(*spec);
        }
        int code = kExitInputError;
        if (cmd == rho_cmd)
            code = cmd_rho(*spec, r);
        else if (cmd == census_cmd)
            code = cmd_census(*spec, r);
        else if (cmd == decide_cmd)
            code = cmd_decide(*spec, o, r);
        else if (cmd == solve_cmd)
            code = cmd_solve(*spec, o, r);
        else if (cmd == solve_b_cmd)
            code = cmd_solve_b(*spec, o, r);
        else if (cmd == verify_cmd)
            code = cmd_verify(spec, o, r);
        else if (cmd == max_cmd)
            code = cmd_max_rank(*spec, r);
        return r.finish(code);
    } catch (const ParseError& e) {
        return report_error(r, err, "parse", e.what(), e.position());
    } catch (const InvalidBlock& e) {
        return report_error(r, err, "invalid-block", e.what());
    } catch (const DimensionMismatch& e) {
        return report_error(r, err, "shape", e.what());
    } catch (const QueryError& e) {
        return report_error(r, err, "query", e.what());
    } catch (const Error& e) {
        return report_error(r, err, "error", e.what());
    }
}

} // namespace skewcfc
