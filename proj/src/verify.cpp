#include "jack4/verify.hpp"

#include "jack4/basis4.hpp"
#include "jack4/combin.hpp"
#include "jack4/hermite.hpp"
#include "jack4/jack.hpp"
#include "jack4/ops.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace jack4 {

nlohmann::json SuiteReport::to_json() const
{
    nlohmann::json j = {{"suite", suite},       {"kappa", kappa},       {"kappa_prime", kappa_prime},
                        {"max_degree", max_degree}, {"checked", checked}, {"failures", failures},
                        {"ok", ok()}};
    j["first_counterexample"] = first_counterexample.empty() ? nlohmann::json(nullptr) : nlohmann::json(first_counterexample);
    j["details"] = details;
    return j;
}

namespace {

std::string label(const Composition& a)
{
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i)
        s += (i ? "," : "") + std::to_string(a[i]);
    return s + ")";
}

std::string label(const BasisLabel& l)
{
    return "gamma=" + label(l.gamma) + ",n=" + std::to_string(l.n);
}

class Tally {
public:
    explicit Tally(SuiteReport& r) : report_(r) {}

    void check(bool ok, const std::function<std::string()>& describe)
    {
        ++report_.checked;
        if (!ok && report_.failures++ == 0)
            report_.first_counterexample = describe();
    }

private:
    SuiteReport& report_;
};

std::vector<Composition> compositions_up_to(int parts, int max_degree)
{
    std::vector<Composition> out;
    for (int d = 0; d <= max_degree; ++d)
        for (Composition& c : compositions(parts, d))
            out.push_back(std::move(c));
    return out;
}

std::vector<BasisLabel> labels_up_to(int max_degree)
{
    std::vector<BasisLabel> out;
    for (int d = 0; d <= max_degree; ++d)
        for (BasisLabel& l : basis_labels(d))
            out.push_back(std::move(l));
    return out;
}

ParamContext three(const ParamContext& ctx)
{
    return ctx.nvars() == 3 ? ctx : ctx.with_nvars(3);
}

void suite_eigen(SuiteReport& r, const ParamContext& ctx, int d, Exec exec)
{
    Tally t(r);
    const auto labels = compositions_up_to(3, d);
    struct Outcome {
        bool eigen[3];
        bool monic;
        bool triangular;
    };
    const auto outcomes = sweep<Outcome>(
        labels.size(),
        [&](std::size_t k) {
            const auto rec = nsjp(labels[k], ctx);
            Outcome o{};
            for (int i = 1; i <= 3; ++i)
                o.eigen[i - 1] = cherednik_A(i, rec->poly, ctx) == rec->poly * rec->spectral[i - 1];
            o.monic = rec->poly.coefficient(to_monomial(labels[k])) == 1;
            o.triangular = true;
            for (const auto& [m, c] : rec->poly.terms()) {
                const Composition beta = to_composition(m, 3);
                if (beta != labels[k] && !dominates(labels[k], beta))
                    o.triangular = false;
            }
            return o;
        },
        exec);
    for (std::size_t k = 0; k < labels.size(); ++k) {
        for (int i = 0; i < 3; ++i)
            t.check(outcomes[k].eigen[i], [&] { return "U_" + std::to_string(i + 1) + " zeta" + label(labels[k]); });
        t.check(outcomes[k].monic, [&] { return "zeta" + label(labels[k]) + " not x-monic"; });
        t.check(outcomes[k].triangular, [&] { return "zeta" + label(labels[k]) + " support not below the label"; });
    }
    r.details["labels"] = labels.size();
}

void suite_prop1(SuiteReport& r, const ParamContext& ctx, int d, Exec exec)
{
    Tally t(r);
    const auto labels = compositions_up_to(3, d);
    std::vector<SparsePoly> polys;
    for (const auto& a : labels)
        polys.push_back(nsjp(a, ctx)->poly);
    GramPairing gram(PairingKind::Kappa, Frame::X, 3, ctx, exec);
    const RationalMatrix m = gram.pair_all(polys, polys);
    for (std::size_t a = 0; a < labels.size(); ++a)
        for (std::size_t b = 0; b < labels.size(); ++b) {
            const Rational expected = a == b ? nsjp_norm(labels[a], ctx) : Rational(0);
            t.check(m(static_cast<int>(a), static_cast<int>(b)) == expected, [&] {
                return "<zeta" + label(labels[a]) + ", zeta" + label(labels[b]) + "> = "
                       + to_string(m(static_cast<int>(a), static_cast<int>(b))) + ", expected " + to_string(expected);
            });
        }
    r.details["labels"] = labels.size();
}

void suite_eval_ones(SuiteReport& r, const ParamContext& ctx, int d)
{
    Tally t(r);
    const Rational ones[3] = {1, 1, 1};
    for (const auto& a : compositions_up_to(3, d)) {
        const Rational value = evaluate(nsjp(a, ctx)->poly, ones);
        const Rational formula = nsjp_eval_ones(a, ctx);
        t.check(value == formula, [&] {
            return "zeta" + label(a) + "(1,1,1) = " + to_string(value) + ", formula " + to_string(formula);
        });
    }
}

void suite_hooks(SuiteReport& r, const ParamContext& ctx, int d)
{
    Tally t(r);
    const Rational k1 = ctx.kappa() + 1;
    for (const auto& a : compositions_up_to(3, d)) {
        const Partition plus = sort_to_partition(a).partition;
        t.check(hook_product(a, k1, ctx) == e_epsilon(a, 1, ctx) * hook_product(plus, k1, ctx),
                [&] { return "h(a,k+1) = E_1(a) h(a+,k+1) fails at " + label(a); });
        t.check(hook_product(plus, 1, ctx) == hook_product(a, 1, ctx) * e_epsilon(a, -1, ctx),
                [&] { return "h(a+,1) = h(a,1) E_-1(a) fails at " + label(a); });
    }
}

void suite_jack(SuiteReport& r, const ParamContext& ctx, int d, Exec exec)
{
    Tally t(r);
    GramPairing gram(PairingKind::Kappa, Frame::X, 3, ctx, exec);
    const Permutation generators[] = {{{2, 1, 3}}, {{1, 3, 2}}};
    for (int deg = 0; deg <= d; ++deg)
        for (const Partition& lambda : partitions(3, deg)) {
            const SparsePoly j = symmetric_jack(lambda, ctx);
            for (const auto& w : generators)
                t.check(apply_permutation(w, j) == j, [&] { return "j" + label(lambda) + " not symmetric"; });
            t.check(j.coefficient(to_monomial(lambda)) == 1, [&] { return "j" + label(lambda) + " leading term"; });
            const Rational paired = gram.pair(j, j);
            const Rational formula = jack_norm(lambda, ctx);
            t.check(paired == formula, [&] {
                return "<j" + label(lambda) + ", j> = " + to_string(paired) + ", formula " + to_string(formula);
            });
            if (lambda == Partition{1, 0, 0})
                t.check(paired == 3, [&] { return "<j(1,0,0), j(1,0,0)> = " + to_string(paired) + ", expected 3"; });
        }
}

void suite_prop2(SuiteReport& r, const ParamContext& ctx, int d, Exec exec)
{
    Tally t(r);
    const auto labels = labels_up_to(d);
    const auto polys = sweep<SparsePoly>(
        labels.size(), [&](std::size_t k) { return basis_poly4(labels[k], ctx); }, exec);
    GramPairing gram(PairingKind::Extended, Frame::Y4, 4, ctx, exec);
    const RationalMatrix m = gram.pair_all(polys, polys);
    long off_diagonal = 0;
    for (std::size_t a = 0; a < labels.size(); ++a)
        for (std::size_t b = 0; b < labels.size(); ++b) {
            const Rational expected = a == b ? basis_norm(labels[a], ctx) : Rational(0);
            off_diagonal += a != b;
            t.check(m(static_cast<int>(a), static_cast<int>(b)) == expected, [&] {
                return "<" + label(labels[a]) + " | " + label(labels[b]) + "> = "
                       + to_string(m(static_cast<int>(a), static_cast<int>(b))) + ", expected " + to_string(expected);
            });
        }

    // U^B_{w(i)} p_gamma = 2 xi_i(alpha) p_gamma (i <= k) or (2 xi_i(alpha) - 1) p_gamma (i > k).
    long eigen_checks = 0;
    for (int deg = 0; deg <= d; ++deg)
        for (const Composition& gamma : compositions(3, deg)) {
            const LabelDecomposition dec = decompose_label(gamma);
            const SparsePoly p = basis_poly(gamma, ctx);
            const auto xi = spectral_vector(dec.alpha, ctx);
            for (int i = 1; i <= 3; ++i) {
                const Rational eig = 2 * xi[i - 1] - (i <= dec.k ? 0 : 1);
                ++eigen_checks;
                t.check(cherednik_B(dec.w(i), p, ctx) == p * eig, [&] {
                    return "U^B_" + std::to_string(dec.w(i)) + " p" + label(gamma) + " != " + to_string(eig) + " p";
                });
            }
        }
    r.details["labels"] = labels.size();
    r.details["off_diagonal_pairs"] = off_diagonal;
    r.details["eigenvalue_checks"] = eigen_checks;
}

void suite_laguerre(SuiteReport& r, const ParamContext& ctx, int d)
{
    Tally t(r);
    for (int n = 0; n <= std::max(4, d); ++n) {
        Rational scale = n % 2 ? -1 : 1;  // (-2)^n n!
        for (int k = 1; k <= n; ++k)
            scale *= 2 * k;
        const SparsePoly even = exp_neg_half_laplacian(LaplacianKind::D0, SparsePoly::monomial(1, Frame::Y0, Monomial{static_cast<std::uint8_t>(2 * n)}), ctx);
        const SparsePoly even_rhs = laguerre_half_square(n, ctx.kappa_prime() - Rational(1, 2)) * scale;
        t.check(even == even_rhs, [&] { return "even identity fails at n = " + std::to_string(n); });
        const SparsePoly odd = exp_neg_half_laplacian(LaplacianKind::D0, SparsePoly::monomial(1, Frame::Y0, Monomial{static_cast<std::uint8_t>(2 * n + 1)}), ctx);
        const SparsePoly odd_rhs = multiply_monomial(laguerre_half_square(n, ctx.kappa_prime() + Rational(1, 2)), Monomial{1}) * scale;
        t.check(odd == odd_rhs, [&] { return "odd identity fails at n = " + std::to_string(n); });
        r.details["max_n"] = n;
    }
}

void suite_spectrum(SuiteReport& r, const ParamContext& ctx, int d, Exec exec)
{
    Tally t(r);
    const auto labels = labels_up_to(d);
    struct Outcome {
        bool eigen;
        bool factorizes;
        Rational energy;
    };
    const auto outcomes = sweep<Outcome>(
        labels.size(),
        [&](std::size_t k) {
            const HermiteRecord rec = hermite_basis(labels[k], ctx);
            const SparsePoly spatial = exp_neg_half_laplacian(LaplacianKind::B, basis_poly(labels[k].gamma, ctx), ctx);
            const SparsePoly radial = exp_neg_half_laplacian(
                LaplacianKind::D0, SparsePoly::monomial(1, Frame::Y0, Monomial{static_cast<std::uint8_t>(labels[k].n)}), ctx);
            return Outcome{conjugated_hamiltonian(rec.poly, ctx) == rec.poly * rec.energy,
                           rec.poly == embed_y3(spatial) * embed_y0(radial), rec.energy};
        },
        exec);
    std::map<int, Rational> level;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        t.check(outcomes[k].eigen, [&] { return "conjugated hamiltonian eigen equation fails for " + label(labels[k]); });
        t.check(outcomes[k].factorizes, [&] { return "exp(-Delta_h/2) does not factor for " + label(labels[k]); });
        t.check(outcomes[k].energy == energy_level(labels[k].degree(), ctx),
                [&] { return "energy of " + label(labels[k]); });
        auto [it, fresh] = level.try_emplace(labels[k].degree(), outcomes[k].energy);
        t.check(fresh || it->second == outcomes[k].energy, [&] { return "degeneracy broken at " + label(labels[k]); });
    }

    long invariant_checks = 0;
    for (int s = 0; s <= 1; ++s)
        for (int n = 0; 3 * s + 2 * n <= d; ++n)
            for (int lam = 0; 2 * lam + 3 * s + 2 * n <= d; ++lam)
                for (const Partition& lambda : partitions(3, lam)) {
                    const SparsePoly f = cs_invariant_eigenfunction(lambda, s, n, ctx);
                    const Rational e = cs_invariant_energy(lambda, s, n, ctx);
                    ++invariant_checks;
                    t.check(conjugated_hamiltonian(f, ctx) == f * e, [&] {
                        return "invariant eigenfunction lambda=" + label(lambda) + " s=" + std::to_string(s)
                               + " n=" + std::to_string(n);
                    });
                }
    nlohmann::json energies = nlohmann::json::object();
    for (const auto& [deg, e] : level)
        energies[std::to_string(deg)] = to_string(e);
    r.details["labels"] = labels.size();
    r.details["energies"] = energies;
    r.details["invariant_checks"] = invariant_checks;
}

void suite_identities(SuiteReport& r, const ParamContext& ctx, int d)
{
    const IdentityReport report = operator_identities_check(ctx, d);
    nlohmann::json rows = nlohmann::json::array();
    for (const IdentityResult& res : report.results) {
        rows.push_back({{"identity", res.name}, {"checked", res.checked}, {"violations", res.violations}});
        r.checked += res.checked;
        if (res.violations > 0 && r.failures == 0)
            r.first_counterexample = res.name + ": " + res.first_counterexample;
        r.failures += res.violations;
    }
    r.details["identities"] = rows;
}

void suite_f1_norm(SuiteReport& r, const ParamContext& ctx, int d, Exec exec)
{
    Tally t(r);
    std::vector<std::pair<Partition, int>> cases;
    for (int deg = 0; deg <= d; ++deg)
        for (const Partition& lambda : partitions(3, deg))
            for (int s = 0; s <= 1; ++s)
                cases.emplace_back(lambda, s);
    const auto results = sweep<InvariantF>(
        cases.size(), [&](std::size_t k) { return invariant_F(cases[k].first, cases[k].second, ctx); }, exec);
    nlohmann::json rows = nlohmann::json::array();
    for (const InvariantF& f : results) {
        const bool display = f.norm_pairing == f.norm_display;
        const bool scaled = f.norm_pairing == f.norm_scaled;
        std::string verdict = display && scaled ? "both" : display ? "display" : scaled ? "scaled" : "neither";
        rows.push_back({{"lambda", f.lambda},
                        {"s", f.s},
                        {"pairing", to_string(f.norm_pairing)},
                        {"display", to_string(f.norm_display)},
                        {"scaled", to_string(f.norm_scaled)},
                        {"matches", verdict}});
        t.check(display || scaled, [&] {
            return "F^" + std::to_string(f.s) + label(f.lambda) + ": pairing " + to_string(f.norm_pairing)
                   + " matches neither formula";
        });
    }
    r.details["cases"] = rows;
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"eigen",    "prop1",      "eval-ones", "hooks",    "jack",
                                                   "prop2",    "laguerre",   "spectrum",  "identities", "f1-norm"};
    return names;
}

SuiteReport run_suite(const std::string& name, const ParamContext& ctx_in, int max_degree, Exec exec)
{
    if (max_degree < 0)
        throw std::invalid_argument("run_suite: max degree must be nonnegative");
    const ParamContext ctx = three(ctx_in);
    SuiteReport r;
    r.suite = name;
    r.kappa = to_string(ctx.kappa());
    r.kappa_prime = to_string(ctx.kappa_prime());
    r.max_degree = max_degree;
    if (name == "eigen")
        suite_eigen(r, ctx, max_degree, exec);
    else if (name == "prop1")
        suite_prop1(r, ctx, max_degree, exec);
    else if (name == "eval-ones")
        suite_eval_ones(r, ctx, max_degree);
    else if (name == "hooks")
        suite_hooks(r, ctx, max_degree);
    else if (name == "jack")
        suite_jack(r, ctx, max_degree, exec);
    else if (name == "prop2")
        suite_prop2(r, ctx, max_degree, exec);
    else if (name == "laguerre")
        suite_laguerre(r, ctx, max_degree);
    else if (name == "spectrum")
        suite_spectrum(r, ctx, max_degree, exec);
    else if (name == "identities")
        suite_identities(r, ctx, max_degree);
    else if (name == "f1-norm")
        suite_f1_norm(r, ctx, max_degree, exec);
    else
        throw std::invalid_argument("unknown suite '" + name + "'");
    return r;
}

}  // namespace jack4
