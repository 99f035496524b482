#include "jack4/hermite.hpp"

#include "jack4/ops.hpp"
#include "helpers.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

using namespace jack4;
using jack4::testing::constant;
using jack4::testing::ctx3;
using jack4::testing::random_poly;
using jack4::testing::term;
using jack4::testing::var;

namespace {

const std::vector<std::pair<Rational, Rational>>& params()
{
    static const std::vector<std::pair<Rational, Rational>> ps = {
        {rational(1, 2), rational(1, 2)}, {rational(1, 2), 2}, {1, rational(1, 2)}, {1, 2}};
    return ps;
}

}  // namespace

TEST(Hermite, ExpSeriesExamples)
{
    for (const auto& [k, kp] : params()) {
        const auto ctx = ctx3(k, kp);
        const SparsePoly lin = var(Frame::Y4, 4, 2) * Rational(3) + var(Frame::Y4, 4, 0);
        EXPECT_EQ(exp_neg_half_laplacian(LaplacianKind::H, lin, ctx), lin);
        const SparsePoly y0sq = term(Frame::Y0, {2});
        EXPECT_EQ(exp_neg_half_laplacian(LaplacianKind::D0, y0sq, ctx), y0sq - constant(Frame::Y0, 1, 1 + 2 * kp));
        const SparsePoly y1sq = term(Frame::Y3, {2, 0, 0});
        EXPECT_EQ(exp_neg_half_laplacian(LaplacianKind::B, y1sq, ctx), y1sq - constant(Frame::Y3, 3, 1 + 4 * k));
    }
}

TEST(Hermite, ExpSeriesInverts)
{
    std::mt19937_64 rng(51);
    const auto ctx = ctx3(rational(1, 2), 2);
    for (int trial = 0; trial < 10; ++trial) {
        const SparsePoly f = random_poly(rng, Frame::Y4, 4, 5, 5);
        for (auto kind : {LaplacianKind::B, LaplacianKind::D0, LaplacianKind::H})
            EXPECT_EQ(exp_half_laplacian(kind, exp_neg_half_laplacian(kind, f, ctx), ctx, 1), f);
    }
}

TEST(Hermite, LaguerreExamples)
{
    const Rational a = rational(3, 2);
    EXPECT_EQ(laguerre(0, a), constant(Frame::Y0, 1, 1));
    EXPECT_EQ(laguerre(1, a), constant(Frame::Y0, 1, a + 1) - var(Frame::Y0, 1, 0));
    // L_2^a(t) = (a+1)(a+2)/2 - (a+2) t + t^2/2
    EXPECT_EQ(laguerre(2, a), constant(Frame::Y0, 1, (a + 1) * (a + 2) / 2) - var(Frame::Y0, 1, 0) * Rational(a + 2)
                                  + term(Frame::Y0, {2}, rational(1, 2)));
    EXPECT_THROW(laguerre(2, -2), std::domain_error);
    EXPECT_THROW(laguerre(-1, a), std::invalid_argument);
}

TEST(Hermite, LaguerreIdentity)
{
    for (const auto& [k, kp] : params()) {
        const auto ctx = ctx3(k, kp);
        Rational scale = 1;
        for (int n = 0; n <= 4; ++n) {
            if (n > 0)
                scale *= -2 * n;
            const SparsePoly even = exp_neg_half_laplacian(LaplacianKind::D0, term(Frame::Y0, {2 * n}), ctx);
            EXPECT_EQ(even, laguerre_half_square(n, kp - rational(1, 2)) * scale);
            const SparsePoly odd = exp_neg_half_laplacian(LaplacianKind::D0, term(Frame::Y0, {2 * n + 1}), ctx);
            EXPECT_EQ(odd, multiply_monomial(laguerre_half_square(n, kp + rational(1, 2)), Monomial{1}) * scale);
        }
    }
}

TEST(Hermite, HermiteBasisExamples)
{
    for (const auto& [k, kp] : params()) {
        const auto ctx = ctx3(k, kp);
        auto rec = hermite_basis({{0, 0, 0}, 0}, ctx);
        EXPECT_EQ(rec.poly, constant(Frame::Y4, 4, 1));
        EXPECT_EQ(rec.energy, Rational(6 * k + kp + 2));
        rec = hermite_basis({{1, 1, 1}, 0}, ctx);
        EXPECT_EQ(rec.poly, term(Frame::Y4, {0, 1, 1, 1}));
        EXPECT_EQ(rec.energy, Rational(6 * k + kp + 5));
        EXPECT_EQ(conjugated_hamiltonian(rec.poly, ctx), rec.poly * rec.energy);
        rec = hermite_basis({{0, 0, 0}, 2}, ctx);
        EXPECT_EQ(rec.poly, term(Frame::Y4, {2, 0, 0, 0}) - constant(Frame::Y4, 4, 1 + 2 * kp));
        EXPECT_EQ(rec.energy, Rational(6 * k + kp + 4));
        EXPECT_EQ(conjugated_hamiltonian(rec.poly, ctx), rec.poly * rec.energy);
        EXPECT_EQ(conjugated_hamiltonian(constant(Frame::Y4, 4, 1), ctx), constant(Frame::Y4, 4, 6 * k + kp + 2));
    }
}

TEST(Hermite, SpectrumAndDegeneracy)
{
    for (const auto& [k, kp] : params()) {
        const auto ctx = ctx3(k, kp);
        for (int deg = 0; deg <= 5; ++deg)
            for (const auto& l : basis_labels(deg)) {
                const auto rec = hermite_basis(l, ctx);
                EXPECT_EQ(rec.energy, energy_level(deg, ctx));
                EXPECT_EQ(conjugated_hamiltonian(rec.poly, ctx), rec.poly * rec.energy);
            }
    }
}

TEST(Hermite, InvariantEigenfunctions)
{
    for (const auto& [k, kp] : params()) {
        const auto ctx = ctx3(k, kp);
        EXPECT_EQ(cs_invariant_eigenfunction({0, 0, 0}, 0, 0, ctx), constant(Frame::Y4, 4, 1));
        EXPECT_EQ(cs_invariant_eigenfunction({0, 0, 0}, 0, 1, ctx),
                  constant(Frame::Y4, 4, kp + rational(1, 2)) - term(Frame::Y4, {2, 0, 0, 0}, rational(1, 2)));
        EXPECT_EQ(cs_invariant_eigenfunction({0, 0, 0}, 1, 0, ctx), term(Frame::Y4, {0, 1, 1, 1}));
        for (int s = 0; s <= 1; ++s)
            for (int n = 0; n <= 2; ++n)
                for (int deg = 0; deg <= 2; ++deg)
                    for (const auto& lambda : partitions(3, deg)) {
                        const SparsePoly f = cs_invariant_eigenfunction(lambda, s, n, ctx);
                        const Rational e = cs_invariant_energy(lambda, s, n, ctx);
                        EXPECT_EQ(e, Rational(2 * deg + 3 * s + 2 * n + 6 * k + kp + 2));
                        EXPECT_EQ(conjugated_hamiltonian(f, ctx), f * e);
                    }
    }
}

TEST(Hermite, D0SigmaEigenvalue)
{
    for (const auto& kp : {rational(0), rational(1, 2), rational(2)}) {
        const auto ctx = ctx3(1, kp);
        EXPECT_EQ(d0_y0_minus_sigma(constant(Frame::Y0, 1, 1), ctx), constant(Frame::Y0, 1, 1 + kp));
        EXPECT_EQ(d0_y0_minus_sigma(var(Frame::Y0, 1, 0), ctx), var(Frame::Y0, 1, 0) * Rational(2 + kp));
        for (int n = 0; n <= 6; ++n)
            EXPECT_EQ(d0_y0_minus_sigma(term(Frame::Y0, {n}), ctx), term(Frame::Y0, {n}, n + 1 + kp));
    }
}

TEST(Hermite, OperatorIdentities)
{
    for (const auto& [k, kp] : params()) {
        const auto report = operator_identities_check(ctx3(k, kp), 4);
        EXPECT_EQ(report.results.size(), 6u);
        for (const auto& r : report.results) {
            EXPECT_GT(r.checked, 0) << r.name;
            EXPECT_EQ(r.violations, 0) << r.name << ": " << r.first_counterexample;
        }
        EXPECT_TRUE(report.ok());
    }
}
