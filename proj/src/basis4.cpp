#include "jack4/basis4.hpp"

#include "jack4/jack.hpp"
#include "jack4/ops.hpp"

#include <array>
#include <stdexcept>

namespace jack4 {

const Permutation& subset_permutation(unsigned mask)
{
    // (w(1), w(2), w(3)) per subset E; bit i-1 set when i is in E.
    static const std::array<Permutation, 8> table = {{
        {{1, 2, 3}},  // {}
        {{1, 2, 3}},  // {1}
        {{2, 1, 3}},  // {2}
        {{1, 2, 3}},  // {1,2}
        {{3, 1, 2}},  // {3}
        {{1, 3, 2}},  // {1,3}
        {{2, 3, 1}},  // {2,3}
        {{1, 2, 3}},  // {1,2,3}
    }};
    if (mask >= table.size())
        throw std::out_of_range("subset_permutation: mask outside {1,2,3}");
    return table[mask];
}

LabelDecomposition decompose_label(const Composition& gamma)
{
    if (gamma.size() != 3)
        throw std::invalid_argument("decompose_label: gamma must have 3 parts");
    LabelDecomposition d;
    d.gamma = gamma;
    unsigned mask = 0;
    for (int i = 1; i <= 3; ++i) {
        if (gamma[i - 1] < 0)
            throw std::invalid_argument("decompose_label: negative part");
        if (gamma[i - 1] % 2) {
            d.E.push_back(i);
            mask |= 1u << (i - 1);
        }
    }
    d.k = static_cast<int>(d.E.size());
    d.w = subset_permutation(mask);
    d.beta.resize(3);
    for (int i = 1; i <= 3; ++i)
        d.beta[i - 1] = gamma[d.w(i) - 1];
    d.alpha.resize(3);
    for (int i = 0; i < 3; ++i)
        d.alpha[i] = d.beta[i] / 2;
    return d;
}

SparsePoly basis_poly(const Composition& gamma, const ParamContext& ctx)
{
    const LabelDecomposition d = decompose_label(gamma);
    const ParamContext ctx3 = ctx.nvars() == 3 ? ctx : ctx.with_nvars(3);
    Monomial y_ek{};
    for (int i = 0; i < d.k; ++i)
        y_ek[i] = 1;
    SparsePoly p = multiply_monomial(substitute_squares(nsjp(d.alpha, ctx3)->poly), y_ek);
    return apply_permutation(d.w, p);
}

SparsePoly basis_poly4(const BasisLabel& label, const ParamContext& ctx)
{
    if (label.n < 0)
        throw std::invalid_argument("basis_poly4: negative y0 exponent");
    return multiply_monomial(embed_y3(basis_poly(label.gamma, ctx)), Monomial{static_cast<std::uint8_t>(label.n)});
}

Rational basis_norm3(const Composition& gamma, const ParamContext& ctx)
{
    const LabelDecomposition d = decompose_label(gamma);
    const ParamContext ctx3 = ctx.nvars() == 3 ? ctx : ctx.with_nvars(3);
    Composition diff(3);
    for (int i = 0; i < 3; ++i)
        diff[i] = d.beta[i] - d.alpha[i];
    Rational two_pow = 1;
    for (int e = 0; e < weight(d.beta); ++e)
        two_pow *= 2;
    return two_pow * gen_pochhammer(sort_to_partition(d.alpha).partition, ctx3.kappa() * 3 + 1, ctx3)
           * gen_pochhammer(sort_to_partition(diff).partition, ctx3.kappa() * 2 + Rational(1, 2), ctx3)
           * hook_product(d.alpha, 1, ctx3) / hook_product(d.alpha, ctx3.kappa() + 1, ctx3);
}

Rational y0_power_norm(int n, const ParamContext& ctx)
{
    if (n < 0)
        throw std::invalid_argument("y0_power_norm: negative exponent");
    const int m = n / 2;
    Rational r = 1;
    for (int e = 0; e < n; ++e)
        r *= 2;  // 2^{2m} or 2^{2m+1}
    for (int k = 2; k <= m; ++k)
        r *= k;
    return r * pochhammer(ctx.kappa_prime() + Rational(1, 2), n % 2 ? m + 1 : m);
}

Rational basis_norm(const BasisLabel& label, const ParamContext& ctx)
{
    return basis_norm3(label.gamma, ctx) * y0_power_norm(label.n, ctx);
}

CheckedNorm basis_norm_checked(const BasisLabel& label, const ParamContext& ctx)
{
    const SparsePoly p = basis_poly4(label, ctx);
    return {basis_norm(label, ctx), pairing_extended(p, p, ctx)};
}

std::vector<BasisLabel> basis_labels(int degree)
{
    std::vector<BasisLabel> out;
    for (int n = 0; n <= degree; ++n)
        for (Composition& g : compositions(3, degree - n))
            out.push_back({std::move(g), n});
    return out;
}

Rational a_lambda(const Partition& lambda, const ParamContext& ctx)
{
    return jack_norm(lambda, ctx.nvars() == 3 ? ctx : ctx.with_nvars(3));
}

InvariantF invariant_F(const Partition& lambda, int s, const ParamContext& ctx)
{
    if (lambda.size() != 3 || !is_partition(lambda))
        throw std::invalid_argument("invariant_F: lambda must be a partition with 3 parts");
    if (s != 0 && s != 1)
        throw std::invalid_argument("invariant_F: s must be 0 or 1");
    const ParamContext ctx3 = ctx.nvars() == 3 ? ctx : ctx.with_nvars(3);

    InvariantF f{lambda, s, substitute_squares(symmetric_jack(lambda, ctx3)), 0, 0, 0, 0};
    if (s == 1)
        f.poly = multiply_monomial(f.poly, Monomial{1, 1, 1});
    f.a_lambda = a_lambda(lambda, ctx3);

    Partition shifted = lambda;
    for (int& part : shifted)
        part += s;
    Rational two_pow = 1;
    for (int e = 0; e < 2 * weight(lambda); ++e)
        two_pow *= 2;
    f.norm_display = two_pow * gen_pochhammer(shifted, ctx3.kappa() * 2 + Rational(1, 2), ctx3) * f.a_lambda;
    f.norm_scaled = s == 1 ? f.norm_display * 8 : f.norm_display;
    f.norm_pairing = pairing_kappa(f.poly, f.poly, ctx3);
    return f;
}

}  // namespace jack4
