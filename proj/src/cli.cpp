#include "jack4/cli.hpp"

#include "jack4/basis4.hpp"
#include "jack4/hermite.hpp"
#include "jack4/jack.hpp"
#include "jack4/measure.hpp"
#include "jack4/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace jack4 {

namespace {

using nlohmann::json;

struct Options {
    std::string kappa;
    std::string kappa_prime = "0";
    int nvars = 0;
    std::string alpha;
    std::string gamma;
    std::optional<int> n;
    std::string lambda;
    int s = 0;
    int max_degree = 4;
    std::string format = "json";
    long samples = 1'000'000;
    std::uint64_t seed = 0;
    std::string suite = "all";
};

std::vector<int> parse_label(const std::string& text, const char* flag)
{
    std::vector<int> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        int v = -1;
        const char* first = text.data() + pos;
        const char* last = text.data() + comma;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (first == last || ec != std::errc() || ptr != last || v < 0)
            throw std::invalid_argument(std::string(flag) + ": expected comma-separated nonnegative integers, got '"
                                        + text + "'");
        out.push_back(v);
        if (comma == text.size())
            break;
        pos = comma + 1;
    }
    return out;
}

Composition parse_parts(const std::string& text, const char* flag, std::size_t parts)
{
    if (text.empty())
        throw std::invalid_argument(std::string(flag) + " is required");
    Composition c = parse_label(text, flag);
    if (c.size() != parts)
        throw std::invalid_argument(std::string(flag) + ": expected " + std::to_string(parts) + " parts");
    return c;
}

Partition parse_lambda(const std::string& text)
{
    Partition lambda = parse_parts(text, "--lambda", 3);
    if (!is_partition(lambda))
        throw std::invalid_argument("--lambda must be weakly decreasing");
    return lambda;
}

// Accepts "p/q" or a plain decimal such as "0.5", converted exactly.
Rational parse_decimal(const std::string& text)
{
    const std::size_t dot = text.find('.');
    if (dot == std::string::npos)
        return parse_rational(text);
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed number '" + text + "'");
    const bool negative = !whole.empty() && whole[0] == '-';
    const std::string digits = negative ? whole.substr(1) : whole;
    if (digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed number '" + text + "'");
    const mpz_class num(digits + frac, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational r(num, den);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

ParamContext context(const Options& o, int nvars)
{
    if (o.kappa.empty())
        throw std::invalid_argument("--kappa is required");
    return make_context(parse_rational(o.kappa), parse_rational(o.kappa_prime), nvars);
}

json strings(const std::vector<Rational>& v)
{
    json out = json::array();
    for (const Rational& r : v)
        out.push_back(to_string(r));
    return out;
}

std::string join(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

void write_poly_csv(const SparsePoly& f, std::ostream& out)
{
    const json j = to_json(f);
    const std::string prefix = f.frame() == Frame::X ? "x" : "y";
    const int offset = f.frame() == Frame::Y3 ? 1 : f.frame() == Frame::X ? 1 : 0;
    for (int k = 0; k < f.nvars(); ++k)
        out << prefix << k + offset << ",";
    out << "coef\n";
    for (const json& t : j["terms"]) {
        for (const json& e : t["exp"])
            out << e.get<int>() << ",";
        out << t["coef"].get<std::string>() << "\n";
    }
}

void emit(const Options& o, const json& j, const SparsePoly* poly, std::ostream& out)
{
    if (o.format == "csv" && poly) {
        write_poly_csv(*poly, out);
        return;
    }
    out << j.dump(2) << "\n";
}

void emit_table(const Options& o, const std::vector<std::string>& columns, const json& rows, std::ostream& out)
{
    if (o.format != "csv") {
        out << rows.dump(2) << "\n";
        return;
    }
    for (std::size_t c = 0; c < columns.size(); ++c)
        out << (c ? "," : "") << columns[c];
    out << "\n";
    for (const json& row : rows) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            const json& v = row[columns[c]];
            std::string cell = v.is_string() ? v.get<std::string>() : v.is_null() ? "" : v.dump();
            out << (c ? "," : "") << csv_quote(cell);
        }
        out << "\n";
    }
}

int cmd_nsjp(const Options& o, std::ostream& out)
{
    const Composition alpha = parse_label(o.alpha.empty() ? throw std::invalid_argument("--alpha is required") : o.alpha,
                                          "--alpha");
    const int nvars = o.nvars ? o.nvars : static_cast<int>(alpha.size());
    if (nvars != static_cast<int>(alpha.size()))
        throw std::invalid_argument("--alpha must have --nvars parts");
    const ParamContext ctx = context(o, nvars);
    const auto rec = nsjp(alpha, ctx);
    const json j = {{"alpha", alpha},
                    {"kappa", to_string(ctx.kappa())},
                    {"nvars", nvars},
                    {"poly", to_json(rec->poly)},
                    {"spectral", strings(rec->spectral)},
                    {"norm", to_string(rec->norm)}};
    emit(o, j, &rec->poly, out);
    return 0;
}

int cmd_basis(const Options& o, std::ostream& out)
{
    const ParamContext ctx = context(o, 3);
    if (!o.lambda.empty()) {
        if (o.s != 0 && o.s != 1)
            throw std::invalid_argument("--s must be 0 or 1");
        const InvariantF f = invariant_F(parse_lambda(o.lambda), o.s, ctx);
        const json j = {{"lambda", f.lambda},
                        {"s", f.s},
                        {"kappa", to_string(ctx.kappa())},
                        {"poly", to_json(f.poly)},
                        {"a_lambda", to_string(f.a_lambda)},
                        {"norm_display", to_string(f.norm_display)},
                        {"norm_scaled", to_string(f.norm_scaled)},
                        {"norm_pairing", to_string(f.norm_pairing)}};
        emit(o, j, &f.poly, out);
        return 0;
    }
    const BasisLabel label{parse_parts(o.gamma, "--gamma", 3), o.n.value_or(0)};
    if (label.n < 0)
        throw std::invalid_argument("--n must be nonnegative");
    const SparsePoly p = basis_poly4(label, ctx);
    const json j = {{"gamma", label.gamma},
                    {"n", label.n},
                    {"kappa", to_string(ctx.kappa())},
                    {"kappa_prime", to_string(ctx.kappa_prime())},
                    {"poly", to_json(p)},
                    {"norm", to_string(basis_norm(label, ctx))}};
    emit(o, j, &p, out);
    return 0;
}

int cmd_hermite(const Options& o, std::ostream& out)
{
    const ParamContext ctx = context(o, 3);
    const int n = o.n.value_or(0);
    if (n < 0)
        throw std::invalid_argument("--n must be nonnegative");
    if (!o.lambda.empty()) {
        if (o.s != 0 && o.s != 1)
            throw std::invalid_argument("--s must be 0 or 1");
        const Partition lambda = parse_lambda(o.lambda);
        const SparsePoly f = cs_invariant_eigenfunction(lambda, o.s, n, ctx);
        const json j = {{"lambda", lambda},
                        {"s", o.s},
                        {"n", n},
                        {"kappa", to_string(ctx.kappa())},
                        {"kappa_prime", to_string(ctx.kappa_prime())},
                        {"poly", to_json(f)},
                        {"energy", to_string(cs_invariant_energy(lambda, o.s, n, ctx))}};
        emit(o, j, &f, out);
        return 0;
    }
    const HermiteRecord rec = hermite_basis({parse_parts(o.gamma, "--gamma", 3), n}, ctx);
    const json j = {{"gamma", rec.label.gamma},
                    {"n", n},
                    {"kappa", to_string(ctx.kappa())},
                    {"kappa_prime", to_string(ctx.kappa_prime())},
                    {"poly", to_json(rec.poly)},
                    {"energy", to_string(rec.energy)}};
    emit(o, j, &rec.poly, out);
    return 0;
}

int cmd_norm_table(const Options& o, std::ostream& out)
{
    const ParamContext ctx = context(o, 3);
    json rows = json::array();
    for (int d = 0; d <= o.max_degree; ++d)
        for (const Composition& a : compositions(3, d))
            rows.push_back({{"kind", "nsjp"},
                            {"label", join(a)},
                            {"n", nullptr},
                            {"degree", d},
                            {"norm", to_string(nsjp_norm(a, ctx))},
                            {"eval_ones", to_string(nsjp_eval_ones(a, ctx))}});
    for (int d = 0; d <= o.max_degree; ++d)
        for (const BasisLabel& l : basis_labels(d))
            rows.push_back({{"kind", "basis"},
                            {"label", join(l.gamma)},
                            {"n", l.n},
                            {"degree", d},
                            {"norm", to_string(basis_norm(l, ctx))},
                            {"eval_ones", nullptr}});
    emit_table(o, {"kind", "label", "n", "degree", "norm", "eval_ones"}, rows, out);
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const ParamContext ctx = context(o, 3);
    std::vector<std::string> suites;
    if (o.suite == "all")
        suites = suite_names();
    else
        suites.push_back(o.suite);
    json reports = json::array();
    bool ok = true;
    for (const std::string& name : suites) {
        const SuiteReport r = run_suite(name, ctx, o.max_degree);
        ok = ok && r.ok();
        reports.push_back(r.to_json());
    }
    if (o.format == "csv") {
        emit_table(o, {"suite", "kappa", "kappa_prime", "max_degree", "checked", "failures", "first_counterexample"},
                   reports, out);
    } else {
        out << json{{"ok", ok}, {"reports", reports}}.dump(2) << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_spectrum(const Options& o, std::ostream& out)
{
    const ParamContext ctx = context(o, 3);
    std::vector<BasisLabel> labels;
    for (int d = 0; d <= o.max_degree; ++d)
        for (BasisLabel& l : basis_labels(d))
            labels.push_back(std::move(l));
    struct Row {
        Rational energy;
        bool eigen;
    };
    const auto rows_out = sweep<Row>(
        labels.size(),
        [&](std::size_t k) {
            const HermiteRecord rec = hermite_basis(labels[k], ctx);
            return Row{rec.energy, conjugated_hamiltonian(rec.poly, ctx) == rec.poly * rec.energy};
        },
        Exec::Parallel);
    json rows = json::array();
    bool ok = true;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        ok = ok && rows_out[k].eigen;
        rows.push_back({{"gamma", join(labels[k].gamma)},
                        {"n", labels[k].n},
                        {"degree", labels[k].degree()},
                        {"energy", to_string(rows_out[k].energy)},
                        {"verified", rows_out[k].eigen}});
    }
    emit_table(o, {"gamma", "n", "degree", "energy", "verified"}, rows, out);
    return ok ? 0 : 1;
}

int cmd_mc_check(const Options& o, std::ostream& out)
{
    const Rational kappa = parse_decimal(o.kappa.empty() ? "1" : o.kappa);
    const Rational kappa_prime = parse_decimal(o.kappa_prime);
    const ParamContext ctx = make_context(kappa, kappa_prime, 3);
    if (o.samples <= 0)
        throw std::invalid_argument("--samples must be positive");
    McConfig cfg;
    cfg.samples = o.samples;
    cfg.seed = o.seed;
    cfg.kappa = kappa.get_d();
    cfg.kappa_prime = kappa_prime.get_d();

    std::string integrand = "1";
    SparsePoly f = SparsePoly::constant(4, Frame::Y4, 1);
    std::optional<std::string> exact = "1";
    if (!o.gamma.empty()) {
        const BasisLabel label{parse_parts(o.gamma, "--gamma", 3), o.n.value_or(0)};
        f = exp_neg_half_laplacian(LaplacianKind::H, basis_poly4(label, ctx), ctx);
        integrand = "(exp(-Delta_h/2) p[" + join(label.gamma) + "] y0^" + std::to_string(label.n) + ")^2";
        exact = to_string(basis_norm(label, ctx));
    }
    const json j = mc_report(integrand, cfg, mc_inner_product(f, f, cfg), exact);
    if (o.format == "csv") {
        emit_table(o, {"integrand", "kappa", "kappa_prime", "samples", "seed", "estimate", "stderr", "exact"},
                   json::array({j}), out);
    } else {
        out << j.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact nonsymmetric Jack and Hermite computations for the three- and four-variable models", "jack4"};
    app.require_subcommand(1);
    Options o;

    auto params = [&](CLI::App* cmd, bool kappa_prime) {
        cmd->add_option("--kappa", o.kappa, "coupling kappa as p/q");
        if (kappa_prime)
            cmd->add_option("--kappa-prime", o.kappa_prime, "coupling kappa' as p/q")->capture_default_str();
        cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    };

    CLI::App* nsjp_cmd = app.add_subcommand("nsjp", "nonsymmetric Jack polynomial zeta_alpha");
    params(nsjp_cmd, false);
    nsjp_cmd->add_option("--alpha", o.alpha, "composition, e.g. 1,0,0")->required();
    nsjp_cmd->add_option("--nvars", o.nvars, "number of variables (default: parts of --alpha)");

    CLI::App* basis_cmd = app.add_subcommand("basis", "basis element p_gamma y0^n, or an invariant F^s_lambda");
    params(basis_cmd, true);
    CLI::App* hermite_cmd = app.add_subcommand("hermite", "Hermite image exp(-Delta_h/2)(p_gamma y0^n) and its energy");
    params(hermite_cmd, true);
    for (CLI::App* cmd : {basis_cmd, hermite_cmd}) {
        auto* gamma = cmd->add_option("--gamma", o.gamma, "three-part composition");
        auto* lambda = cmd->add_option("--lambda", o.lambda, "three-part partition (invariant F^s_lambda)");
        gamma->excludes(lambda);
        cmd->add_option("--n", o.n, "power of y0");
        cmd->add_option("--s", o.s, "0 or 1, with --lambda");
    }

    CLI::App* table_cmd = app.add_subcommand("norm-table", "closed-form norms up to a degree");
    params(table_cmd, true);
    table_cmd->add_option("--max-degree", o.max_degree)->capture_default_str();

    CLI::App* verify_cmd = app.add_subcommand("verify", "exact verification sweep");
    params(verify_cmd, true);
    verify_cmd->add_option("--max-degree", o.max_degree)->capture_default_str();
    std::vector<std::string> choices = suite_names();
    choices.insert(choices.begin(), "all");
    verify_cmd->add_option("--suite", o.suite)->check(CLI::IsMember(choices))->capture_default_str();

    CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "energies of the Hermite basis, each verified");
    params(spectrum_cmd, true);
    spectrum_cmd->add_option("--max-degree", o.max_degree)->capture_default_str();

    CLI::App* mc_cmd = app.add_subcommand("mc-check", "Monte Carlo check of the weighted Gaussian measure");
    o.kappa_prime = "0";
    mc_cmd->add_option("--kappa", o.kappa, "kappa (p/q or decimal, default 1)");
    mc_cmd->add_option("--kappa-prime", o.kappa_prime, "kappa' (p/q or decimal)");
    mc_cmd->add_option("--samples", o.samples)->capture_default_str();
    mc_cmd->add_option("--seed", o.seed)->capture_default_str();
    mc_cmd->add_option("--gamma", o.gamma, "integrate the squared Hermite image of p_gamma y0^n");
    mc_cmd->add_option("--n", o.n, "power of y0");
    mc_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (*nsjp_cmd)
            return cmd_nsjp(o, out);
        if (*basis_cmd)
            return cmd_basis(o, out);
        if (*hermite_cmd)
            return cmd_hermite(o, out);
        if (*table_cmd)
            return cmd_norm_table(o, out);
        if (*verify_cmd)
            return cmd_verify(o, out);
        if (*spectrum_cmd)
            return cmd_spectrum(o, out);
        return cmd_mc_check(o, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace jack4
