#include "jack4/basis4.hpp"

#include "jack4/jack.hpp"
#include "jack4/kernels.hpp"
#include "jack4/ops.hpp"
#include "helpers.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace jack4;
using jack4::testing::constant;
using jack4::testing::ctx3;
using jack4::testing::random_poly;
using jack4::testing::term;
using jack4::testing::var;

TEST(Basis4, SubsetTable)
{
    EXPECT_EQ(subset_permutation(0b000), Permutation::identity(3));
    EXPECT_EQ(subset_permutation(0b001), Permutation::identity(3));
    EXPECT_EQ(subset_permutation(0b011), Permutation::identity(3));
    EXPECT_EQ(subset_permutation(0b111), Permutation::identity(3));
    EXPECT_EQ(subset_permutation(0b010), (Permutation{{2, 1, 3}}));
    EXPECT_EQ(subset_permutation(0b100), (Permutation{{3, 1, 2}}));
    EXPECT_EQ(subset_permutation(0b101), (Permutation{{1, 3, 2}}));
    EXPECT_EQ(subset_permutation(0b110), (Permutation{{2, 3, 1}}));
    // w maps {1..k} onto E increasingly and the rest onto the complement increasingly
    for (unsigned mask = 0; mask < 8; ++mask) {
        const Permutation& w = subset_permutation(mask);
        const int k = __builtin_popcount(mask);
        for (int i = 1; i <= 3; ++i)
            EXPECT_EQ(((mask >> (w(i) - 1)) & 1u) != 0, i <= k);
        for (int i = 1; i < 3; ++i)
            if (i != k)
                EXPECT_LT(w(i), w(i + 1));
    }
}

TEST(Basis4, DecomposeExamples)
{
    auto d = decompose_label({1, 1, 1});
    EXPECT_EQ(d.E, (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(d.w, Permutation::identity(3));
    EXPECT_EQ(d.alpha, (Composition{0, 0, 0}));
    d = decompose_label({0, 1, 0});
    EXPECT_EQ(d.E, (std::vector<int>{2}));
    EXPECT_EQ(d.w, (Permutation{{2, 1, 3}}));
    EXPECT_EQ(d.beta, (Composition{1, 0, 0}));
    EXPECT_EQ(d.alpha, (Composition{0, 0, 0}));
    d = decompose_label({3, 0, 1});
    EXPECT_EQ(d.E, (std::vector<int>{1, 3}));
    EXPECT_EQ(d.k, 2);
    EXPECT_EQ(d.w, (Permutation{{1, 3, 2}}));
    EXPECT_EQ(d.beta, (Composition{3, 1, 0}));
    EXPECT_EQ(d.alpha, (Composition{1, 0, 0}));
}

TEST(Basis4, DecompositionReconstructsGamma)
{
    for (int deg = 0; deg <= 7; ++deg)
        for (const auto& g : compositions(3, deg)) {
            const auto d = decompose_label(g);
            EXPECT_EQ(act(d.w, d.beta), g);
            for (int i = 1; i <= 3; ++i) {
                EXPECT_EQ(d.beta[i - 1] % 2 == 1, i <= d.k);
                EXPECT_EQ(d.alpha[i - 1], d.beta[i - 1] / 2);
            }
        }
}

TEST(Basis4, BasisPolyExamples)
{
    for (const auto& k : jack4::testing::kappa_samples()) {
        const auto ctx = ctx3(k);
        EXPECT_EQ(basis_poly({0, 0, 0}, ctx), constant(Frame::Y3, 3, 1));
        EXPECT_EQ(basis_poly({1, 1, 1}, ctx), term(Frame::Y3, {1, 1, 1}));
        const SparsePoly p200 = term(Frame::Y3, {2, 0, 0}) + (term(Frame::Y3, {0, 2, 0}) + term(Frame::Y3, {0, 0, 2})) * Rational(k / (k + 1));
        EXPECT_EQ(basis_poly({2, 0, 0}, ctx), p200);
        EXPECT_EQ(basis_poly4({{0, 0, 0}, 1}, ctx), var(Frame::Y4, 4, 0));
        EXPECT_EQ(basis_poly4({{1, 0, 0}, 2}, ctx), term(Frame::Y4, {2, 1, 0, 0}));
        EXPECT_EQ(basis_poly4({{2, 0, 0}, 0}, ctx), embed_y3(p200));
    }
}

TEST(Basis4, NormExamples)
{
    for (const auto& k : {rational(1, 2), rational(1)})
        for (const auto& kp : {rational(1, 2), rational(2)}) {
            const auto ctx = ctx3(k, kp);
            EXPECT_EQ(basis_norm({{0, 0, 0}, 0}, ctx), 1);
            EXPECT_EQ(basis_norm({{1, 0, 0}, 0}, ctx), Rational(4 * k + 1));
            EXPECT_EQ(basis_norm({{0, 0, 0}, 1}, ctx), Rational(2 * kp + 1));
            EXPECT_EQ(basis_norm3({1, 1, 1}, ctx), Rational((2 * k + 1) * (4 * k + 1)));
            EXPECT_EQ(y0_power_norm(2, ctx), Rational(2 * (2 * kp + 1)));
            for (int deg = 0; deg <= 4; ++deg)
                for (const auto& l : basis_labels(deg)) {
                    const auto checked = basis_norm_checked(l, ctx);
                    EXPECT_TRUE(checked.agree()) << to_string(checked.formula) << " vs " << to_string(checked.pairing);
                }
        }
}

TEST(Basis4, LabelsEnumerateDegree)
{
    for (int deg = 0; deg <= 6; ++deg) {
        const auto labels = basis_labels(deg);
        EXPECT_EQ(static_cast<int>(labels.size()), (deg + 1) * (deg + 2) * (deg + 3) / 6);
        for (const auto& l : labels)
            EXPECT_EQ(l.degree(), deg);
    }
}

TEST(Basis4, BEigenvalues)
{
    for (const auto& k : {rational(1, 2), rational(5, 7)}) {
        const auto ctx = ctx3(k);
        for (int deg = 0; deg <= 6; ++deg)
            for (const auto& g : compositions(3, deg)) {
                const auto d = decompose_label(g);
                const auto xi = spectral_vector(d.alpha, ctx);
                const SparsePoly p = basis_poly(g, ctx);
                for (int i = 1; i <= 3; ++i)
                    EXPECT_EQ(cherednik_B(d.w(i), p, ctx), p * Rational(2 * xi[i - 1] - (i <= d.k ? 0 : 1)));
            }
    }
}

TEST(Basis4, ParitySeparation)
{
    std::mt19937_64 rng(41);
    const auto ctx = ctx3(rational(1, 2));
    GramPairing gram(PairingKind::Kappa, Frame::Y3, 3, ctx);
    for (unsigned e = 0; e < 8; ++e)
        for (unsigned f = 0; f < 8; ++f) {
            if (e == f)
                continue;
            Monomial me{}, mf{};
            for (int i = 0; i < 3; ++i) {
                me[i] = (e >> i) & 1u;
                mf[i] = (f >> i) & 1u;
            }
            const SparsePoly a = multiply_monomial(substitute_squares(random_poly(rng, Frame::X, 3, 2, 3)), me);
            const SparsePoly b = multiply_monomial(substitute_squares(random_poly(rng, Frame::X, 3, 2, 3)), mf);
            EXPECT_EQ(gram.pair(a, b), 0);
        }
}

TEST(Basis4, Invariants)
{
    const auto ctx = ctx3(rational(1, 2));
    auto f = invariant_F({0, 0, 0}, 0, ctx);
    EXPECT_EQ(f.poly, constant(Frame::Y3, 3, 1));
    EXPECT_EQ(f.a_lambda, 1);
    EXPECT_EQ(f.norm_pairing, 1);
    for (const auto& k : jack4::testing::kappa_samples()) {
        const auto c = ctx3(k);
        f = invariant_F({1, 0, 0}, 0, c);
        EXPECT_EQ(f.poly, term(Frame::Y3, {2, 0, 0}) + term(Frame::Y3, {0, 2, 0}) + term(Frame::Y3, {0, 0, 2}));
        EXPECT_EQ(f.a_lambda, 3);
        EXPECT_EQ(f.norm_display, Rational(3 * (8 * k + 2)));
        EXPECT_EQ(f.norm_pairing, f.norm_display);
        f = invariant_F({0, 0, 0}, 1, c);
        EXPECT_EQ(f.poly, term(Frame::Y3, {1, 1, 1}));
        EXPECT_EQ(f.norm_display, Rational((2 * k + rational(1, 2)) * (k + rational(1, 2)) * rational(1, 2)));
        EXPECT_EQ(f.norm_pairing, Rational((2 * k + 1) * (4 * k + 1)));
        EXPECT_EQ(f.norm_pairing, f.norm_scaled);
    }
}

TEST(Basis4, InvariantsFixedByS4)
{
    const auto ctx = ctx3(rational(5, 7));
    for (int deg = 0; deg <= 2; ++deg)
        for (const auto& lambda : partitions(3, deg))
            for (int s = 0; s <= 1; ++s) {
                const SparsePoly x = to_x(embed_y3(invariant_F(lambda, s, ctx).poly));
                for (int a = 0; a < 3; ++a)
                    EXPECT_EQ(swap_variables(x, a, a + 1), x);
            }
}

TEST(Basis4, ALambdaIsJackNorm)
{
    const auto ctx = ctx3(rational(1, 2));
    for (int deg = 0; deg <= 4; ++deg)
        for (const auto& lambda : partitions(3, deg))
            EXPECT_EQ(a_lambda(lambda, ctx), jack_norm(lambda, ctx));
}
