#include "jack4/hermite.hpp"

#include "jack4/jack.hpp"
#include "jack4/kernels.hpp"
#include "jack4/ops.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace jack4 {

SparsePoly apply_laplacian(LaplacianKind kind, const SparsePoly& f, const ParamContext& ctx)
{
    switch (kind) {
    case LaplacianKind::B:
        return laplacian(OperatorKind::LaplacianB, f, ctx);
    case LaplacianKind::D0:
        return d0_squared(f, ctx);
    case LaplacianKind::H:
        if (f.frame() != Frame::Y4)
            throw std::invalid_argument("apply_laplacian: Delta_h acts on the y4 frame");
        return laplacian(OperatorKind::LaplacianH, f, ctx);
    }
    throw std::invalid_argument("apply_laplacian: unknown kind");
}

SparsePoly exp_half_laplacian(LaplacianKind kind, const SparsePoly& f, const ParamContext& ctx, int sign)
{
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("exp_half_laplacian: sign must be +1 or -1");
    SparsePoly sum = f;
    SparsePoly term = f;
    const Rational step(sign, 2);
    for (int k = 1; !term.is_zero(); ++k) {
        term = apply_laplacian(kind, term, ctx) * (step / k);
        sum += term;
    }
    return sum;
}

SparsePoly laguerre(int n, const Rational& a)
{
    if (n < 0)
        throw std::invalid_argument("laguerre: negative degree");
    std::vector<Rational> rising(n + 1);  // (a+1)_i
    rising[0] = 1;
    for (int i = 1; i <= n; ++i)
        rising[i] = rising[i - 1] * (a + i);
    for (int i = 0; i <= n; ++i)
        if (sgn(rising[i]) == 0)
            throw std::domain_error("laguerre: (a+1)_" + std::to_string(i) + " vanishes for a = " + to_string(a));
    Rational n_fact = 1;
    for (int k = 2; k <= n; ++k)
        n_fact *= k;
    const Rational lead = rising[n] / n_fact;
    SparsePoly p(1, Frame::Y0);
    Rational minus_n_rising = 1;  // (-n)_i
    Rational i_fact = 1;
    for (int i = 0; i <= n; ++i) {
        if (i > 0) {
            minus_n_rising *= -n + i - 1;
            i_fact *= i;
        }
        p.add_term(Monomial{static_cast<std::uint8_t>(i)}, lead * minus_n_rising / (rising[i] * i_fact));
    }
    return p;
}

SparsePoly laguerre_half_square(int n, const Rational& a)
{
    const SparsePoly l = laguerre(n, a);
    SparsePoly p(1, Frame::Y0);
    for (const auto& [m, c] : l.terms()) {
        Rational scale = c;
        for (int e = 0; e < m[0]; ++e)
            scale /= 2;
        p.add_term(Monomial{static_cast<std::uint8_t>(2 * m[0])}, scale);
    }
    return p;
}

Rational energy_level(int total_degree, const ParamContext& ctx)
{
    return ctx.kappa() * 6 + ctx.kappa_prime() + 2 + total_degree;
}

HermiteRecord hermite_basis(const BasisLabel& label, const ParamContext& ctx)
{
    return {label, exp_neg_half_laplacian(LaplacianKind::H, basis_poly4(label, ctx), ctx),
            energy_level(label.degree(), ctx)};
}

SparsePoly conjugated_hamiltonian(const SparsePoly& f, const ParamContext& ctx)
{
    if (f.frame() != Frame::Y4)
        throw std::invalid_argument("conjugated_hamiltonian: expected frame y4, got " + frame_name(f.frame(), f.nvars()));
    return euler(f) - laplacian(OperatorKind::LaplacianB, f, ctx) - d0_squared(f, ctx)
           + f * (ctx.kappa() * 6 + ctx.kappa_prime() + 2);
}

SparsePoly cs_invariant_eigenfunction(const Partition& lambda, int s, int n, const ParamContext& ctx)
{
    if (n < 0)
        throw std::invalid_argument("cs_invariant_eigenfunction: negative n");
    const InvariantF inv = invariant_F(lambda, s, ctx);
    const SparsePoly spatial = exp_neg_half_laplacian(LaplacianKind::B, inv.poly, ctx);
    return embed_y3(spatial) * embed_y0(laguerre_half_square(n, ctx.kappa_prime() - Rational(1, 2)));
}

Rational cs_invariant_energy(const Partition& lambda, int s, int n, const ParamContext& ctx)
{
    return energy_level(2 * weight(lambda) + 3 * s + 2 * n, ctx);
}

SparsePoly d0_y0_minus_sigma(const SparsePoly& f, const ParamContext& ctx)
{
    return dunkl_D0(multiply_monomial(f, Monomial{1}), ctx) - sign_change(0, f) * ctx.kappa_prime();
}

bool IdentityReport::ok() const
{
    return std::all_of(results.begin(), results.end(), [](const IdentityResult& r) { return r.violations == 0; });
}

namespace {

std::vector<SparsePoly> monomials_up_to(int nvars, Frame frame, int max_degree)
{
    std::vector<SparsePoly> out;
    for (int d = 0; d <= max_degree; ++d)
        for (const Monomial& m : monomial_basis(nvars, d))
            out.push_back(SparsePoly::monomial(nvars, frame, m));
    return out;
}

IdentityResult check_all(const std::string& name, const std::vector<SparsePoly>& inputs,
                         const std::function<SparsePoly(const SparsePoly&)>& lhs,
                         const std::function<SparsePoly(const SparsePoly&)>& rhs)
{
    IdentityResult r{name, 0, 0, {}};
    const auto diffs = sweep<SparsePoly>(
        inputs.size(), [&](std::size_t k) { return lhs(inputs[k]) - rhs(inputs[k]); }, Exec::Parallel);
    for (std::size_t k = 0; k < inputs.size(); ++k) {
        ++r.checked;
        if (!diffs[k].is_zero()) {
            if (r.violations++ == 0)
                r.first_counterexample = to_string(inputs[k]) + ": difference " + to_string(diffs[k]);
        }
    }
    return r;
}

}  // namespace

IdentityReport operator_identities_check(const ParamContext& ctx, int max_degree)
{
    IdentityReport report;
    const Rational kp = ctx.kappa_prime();

    const auto y3 = monomials_up_to(3, Frame::Y3, max_degree);
    report.results.push_back(check_all(
        "cherednik-B conjugation", y3,
        [&](const SparsePoly& f) {
            const SparsePoly g = exp_half_laplacian(LaplacianKind::B, f, ctx, 1);
            SparsePoly u(3, Frame::Y3);
            for (int i = 1; i <= 3; ++i)
                u += cherednik_B(i, g, ctx);
            return exp_half_laplacian(LaplacianKind::B, u, ctx, -1);
        },
        [&](const SparsePoly& f) {
            return euler(f) - laplacian(OperatorKind::LaplacianB, f, ctx) + f * (ctx.kappa() * 6 + 3);
        }));

    const auto y0 = monomials_up_to(1, Frame::Y0, max_degree);
    report.results.push_back(check_all(
        "D0 conjugation", y0,
        [&](const SparsePoly& f) {
            const SparsePoly g = exp_half_laplacian(LaplacianKind::D0, f, ctx, 1);
            return exp_half_laplacian(LaplacianKind::D0, d0_y0_minus_sigma(g, ctx), ctx, -1);
        },
        [&](const SparsePoly& f) { return euler(f) - d0_squared(f, ctx) + f * (kp + 1); }));

    const auto y4 = monomials_up_to(4, Frame::Y4, max_degree);
    // D0^2 against d^2/dy0^2 + (2k'/y0) d/dy0 - k'(1 - sigma0)/y0^2, collected
    // per monomial: y0^n -> [n(n-1) + 2k'n - k'(1 - (-1)^n)] y0^{n-2}. For
    // n < 2 the bracket must vanish for the singular terms to cancel.
    {
        IdentityResult r{"D0 squared display", 0, 0, {}};
        for (const SparsePoly& f : y4) {
            ++r.checked;
            const auto& [m, c] = *f.terms().begin();
            const int n = m[0];
            const Rational bracket = Rational(n * (n - 1)) + kp * (2 * n) - kp * (n % 2 ? 2 : 0);
            SparsePoly display(4, Frame::Y4);
            bool singular = false;
            if (n >= 2) {
                Monomial lowered = m;
                lowered[0] = static_cast<std::uint8_t>(n - 2);
                display.add_term(lowered, c * bracket);
            } else {
                singular = sgn(bracket) != 0;
            }
            const SparsePoly diff = d0_squared(f, ctx) - display;
            if (singular || !diff.is_zero()) {
                if (r.violations++ == 0)
                    r.first_counterexample = to_string(f) + ": difference " + to_string(diff);
            }
        }
        report.results.push_back(r);
    }

    report.results.push_back(check_all(
        "D0 y0 - k' sigma0 eigenvalue", y0, [&](const SparsePoly& f) { return d0_y0_minus_sigma(f, ctx); },
        [&](const SparsePoly& f) { return f * (kp + 1 + f.degree()); }));

    report.results.push_back(check_all(
        "hamiltonian conjugation", y4, [&](const SparsePoly& f) { return conjugated_hamiltonian(f, ctx); },
        [&](const SparsePoly& f) {
            const SparsePoly g = exp_half_laplacian(LaplacianKind::H, f, ctx, 1);
            SparsePoly inner = d0_y0_minus_sigma(g, ctx) - g * 2;
            for (int i = 1; i <= 3; ++i)
                inner += cherednik_B(i, g, ctx);
            return exp_half_laplacian(LaplacianKind::H, inner, ctx, -1);
        }));

    const auto x4 = monomials_up_to(4, Frame::X, max_degree);
    report.results.push_back(check_all(
        "laplacian split", x4,
        [&](const SparsePoly& f) { return to_y(laplacian(OperatorKind::LaplacianH, f, ctx)); },
        [&](const SparsePoly& f) { return laplacian(OperatorKind::LaplacianH, to_y(f), ctx); }));
    return report;
}

}  // namespace jack4
