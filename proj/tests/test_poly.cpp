#include "jack4/poly.hpp"

#include "jack4/combin.hpp"
#include "helpers.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

using namespace jack4;
using jack4::testing::constant;
using jack4::testing::random_poly;
using jack4::testing::random_rational;
using jack4::testing::term;
using jack4::testing::var;

TEST(Poly, ArithmeticExamples)
{
    const SparsePoly x1 = var(Frame::X, 3, 0);
    const SparsePoly x2 = var(Frame::X, 3, 1);
    const SparsePoly zero(3, Frame::X);
    EXPECT_EQ(x1 + zero, x1);
    EXPECT_EQ((x1 - x2) * (x1 + x2), term(Frame::X, {2, 0, 0}) - term(Frame::X, {0, 2, 0}));
    EXPECT_EQ(rational(1, 2) * (x1 * Rational(2)), x1);
    EXPECT_TRUE((x1 - x1).is_zero());
    EXPECT_EQ((x1 - x1).degree(), -1);
}

TEST(Poly, FrameMismatchIsAnError)
{
    const SparsePoly x = var(Frame::X, 3, 0);
    const SparsePoly y = var(Frame::Y3, 3, 0);
    EXPECT_THROW(x + y, std::invalid_argument);
    EXPECT_THROW(x * y, std::invalid_argument);
    EXPECT_THROW(x - var(Frame::X, 4, 0), std::invalid_argument);
    EXPECT_THROW(SparsePoly(2, Frame::Y3), std::invalid_argument);
}

TEST(Poly, EvaluateExamples)
{
    const Rational pt[] = {2, 3};
    EXPECT_EQ(evaluate(constant(Frame::X, 2, 5), pt), 5);
    EXPECT_EQ(evaluate(term(Frame::X, {1, 1}), pt), 6);
    const Rational ones[] = {1, 1, 1};
    EXPECT_EQ(evaluate(var(Frame::X, 3, 2), ones), 1);
    EXPECT_THROW(evaluate(term(Frame::X, {1, 1, 0}), pt), std::invalid_argument);
}

TEST(Poly, EvaluateIsRingHomomorphism)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const SparsePoly f = random_poly(rng, Frame::X, 3, 4, 5);
        const SparsePoly g = random_poly(rng, Frame::X, 3, 4, 5);
        const Rational c = random_rational(rng);
        const Rational pt[] = {random_rational(rng), random_rational(rng), random_rational(rng)};
        const Rational a = evaluate(f, pt);
        const Rational b = evaluate(g, pt);
        EXPECT_EQ(evaluate(f + g, pt), Rational(a + b));
        EXPECT_EQ(evaluate(f - g, pt), Rational(a - b));
        EXPECT_EQ(evaluate(f * g, pt), Rational(a * b));
        EXPECT_EQ(evaluate(f * c, pt), Rational(a * c));
    }
}

TEST(Poly, PermutationExamples)
{
    const SparsePoly f = term(Frame::X, {3, 1, 0});
    EXPECT_EQ(apply_permutation(Permutation::identity(3), f), f);
    EXPECT_EQ(apply_permutation(Permutation{{2, 1, 3}}, var(Frame::X, 3, 0)), var(Frame::X, 3, 1));
    EXPECT_EQ(apply_permutation(Permutation{{2, 3, 1}}, f), term(Frame::X, {0, 3, 1}));
    EXPECT_EQ(swap_variables(f, 0, 2), term(Frame::X, {0, 1, 3}));
}

TEST(Poly, PermutationIsGroupAction)
{
    for (int n : {3, 4}) {
        std::vector<int> imgs(n);
        for (int i = 0; i < n; ++i)
            imgs[i] = i + 1;
        std::vector<Permutation> group;
        do
            group.push_back(Permutation{imgs});
        while (std::next_permutation(imgs.begin(), imgs.end()));
        std::vector<Permutation> generators;
        for (int i = 1; i < n; ++i) {
            Permutation s = Permutation::identity(n);
            std::swap(s.images[i - 1], s.images[i]);
            generators.push_back(s);
        }
        for (int d = 0; d <= 3; ++d)
            for (const auto& e : compositions(n, d)) {
                const SparsePoly m = term(Frame::X, e);
                for (const auto& u : generators)
                    for (const auto& v : group)
                        EXPECT_EQ(apply_permutation(u.compose(v), m), apply_permutation(u, apply_permutation(v, m)));
                for (const auto& u : group)
                    EXPECT_EQ(apply_permutation(u, m), term(Frame::X, act(u, e)));
            }
    }
}

TEST(Poly, SignChangeExamples)
{
    EXPECT_EQ(sign_change(1, term(Frame::Y3, {1, 1, 0})), -term(Frame::Y3, {1, 1, 0}));
    EXPECT_EQ(sign_change(0, term(Frame::Y4, {2, 0, 0, 0})), term(Frame::Y4, {2, 0, 0, 0}));
    EXPECT_EQ(sign_change(0, term(Frame::Y4, {1, 0, 3, 0})), -term(Frame::Y4, {1, 0, 3, 0}));
    const SparsePoly x1 = var(Frame::X, 4, 0);
    SparsePoly sum(4, Frame::X);
    for (int k = 0; k < 4; ++k)
        sum += var(Frame::X, 4, k);
    EXPECT_EQ(sign_change(0, x1), x1 - sum * rational(1, 2));
    EXPECT_THROW(sign_change(4, term(Frame::Y3, {1, 0, 0})), std::invalid_argument);
    EXPECT_THROW(sign_change(1, x1), std::invalid_argument);
}

TEST(Poly, SignChangeAgreesAcrossFrames)
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        const SparsePoly f = random_poly(rng, Frame::X, 4, 4, 4);
        EXPECT_EQ(to_y(sign_change(0, f)), sign_change(0, to_y(f)));
    }
}

TEST(Poly, CoordinateVectorsAreOrthonormal)
{
    const auto& v = coord_vectors();
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            Rational dot = 0;
            for (int k = 0; k < 4; ++k)
                dot += v[a][k] * v[b][k];
            EXPECT_EQ(dot, a == b ? 1 : 0);
        }
}

TEST(Poly, ChangeOfFrameExamples)
{
    SparsePoly sum(4, Frame::X);
    SparsePoly norm_sq(4, Frame::X);
    for (int k = 0; k < 4; ++k) {
        sum += var(Frame::X, 4, k);
        norm_sq += var(Frame::X, 4, k) * var(Frame::X, 4, k);
    }
    EXPECT_EQ(to_y(sum), var(Frame::Y4, 4, 0) * Rational(2));
    SparsePoly y_sq(4, Frame::Y4);
    for (int k = 0; k < 4; ++k)
        y_sq += var(Frame::Y4, 4, k) * var(Frame::Y4, 4, k);
    EXPECT_EQ(to_y(norm_sq), y_sq);
    EXPECT_THROW(to_y(var(Frame::Y4, 4, 0)), std::invalid_argument);
}

TEST(Poly, ChangeOfFrameRoundTrip)
{
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        const SparsePoly f = random_poly(rng, Frame::X, 4, 5, 6);
        const SparsePoly g = random_poly(rng, Frame::Y4, 4, 5, 6);
        EXPECT_EQ(to_x(to_y(f)), f);
        EXPECT_EQ(to_y(to_x(g)), g);
        EXPECT_EQ(to_y(f * f), to_y(f) * to_y(f));
    }
}

TEST(Poly, SubstituteSquares)
{
    EXPECT_EQ(substitute_squares(constant(Frame::X, 3, 1)), constant(Frame::Y3, 3, 1));
    EXPECT_EQ(substitute_squares(term(Frame::X, {1, 1, 0})), term(Frame::Y3, {2, 2, 0}));
    const Rational k = rational(5, 7);
    const SparsePoly z = var(Frame::X, 3, 0) + (var(Frame::X, 3, 1) + var(Frame::X, 3, 2)) * Rational(k / (k + 1));
    EXPECT_EQ(substitute_squares(z),
              term(Frame::Y3, {2, 0, 0}) + (term(Frame::Y3, {0, 2, 0}) + term(Frame::Y3, {0, 0, 2})) * Rational(k / (k + 1)));
}

TEST(Poly, Embeddings)
{
    EXPECT_EQ(embed_y3(term(Frame::Y3, {1, 0, 2})), term(Frame::Y4, {0, 1, 0, 2}));
    EXPECT_EQ(embed_y0(term(Frame::Y0, {3})), term(Frame::Y4, {3, 0, 0, 0}));
    EXPECT_EQ(multiply_monomial(term(Frame::Y3, {1, 0, 0}, 2), to_monomial({0, 1, 1})), term(Frame::Y3, {1, 1, 1}, 2));
}

TEST(Poly, JsonRoundTrip)
{
    std::mt19937_64 rng(2);
    for (Frame frame : {Frame::X, Frame::Y4, Frame::Y3, Frame::Y0}) {
        const int n = frame == Frame::Y4 ? 4 : frame == Frame::Y3 ? 3 : frame == Frame::Y0 ? 1 : 5;
        for (int trial = 0; trial < 20; ++trial) {
            const SparsePoly f = random_poly(rng, frame, n, 4, 6);
            const nlohmann::json j = to_json(f);
            EXPECT_EQ(poly_from_json(j), f);
            EXPECT_EQ(to_json(poly_from_json(j)).dump(), j.dump());
        }
    }
}

TEST(Poly, JsonSchema)
{
    const SparsePoly f = term(Frame::Y4, {0, 2, 0, 0}) - term(Frame::Y4, {1, 0, 0, 0}, rational(1, 2));
    const nlohmann::json j = to_json(f);
    EXPECT_EQ(j["nvars"], 4);
    EXPECT_EQ(j["frame"], "y4");
    ASSERT_EQ(j["terms"].size(), 2u);
    EXPECT_EQ(j["terms"][0]["exp"], (std::vector<int>{0, 2, 0, 0}));
    EXPECT_EQ(j["terms"][0]["coef"], "1");
    EXPECT_EQ(j["terms"][1]["coef"], "-1/2");
    EXPECT_THROW(poly_from_json(nlohmann::json::parse(R"({"nvars":3,"frame":"y4","terms":[]})")), std::invalid_argument);
    EXPECT_THROW(poly_from_json(nlohmann::json::parse(R"({"nvars":3,"frame":"x3","terms":[{"exp":[1,0],"coef":"1"}]})")),
                 std::invalid_argument);
}

TEST(Poly, TermsFollowDescendingCanonicalOrder)
{
    std::mt19937_64 rng(8);
    const SparsePoly f = random_poly(rng, Frame::X, 3, 5, 20);
    std::vector<Composition> exps;
    for (const auto& [m, c] : f.terms())
        exps.push_back(to_composition(m, 3));
    for (std::size_t i = 1; i < exps.size(); ++i)
        EXPECT_TRUE(canonical_less(exps[i], exps[i - 1]));
}

TEST(Poly, DegreeAndHomogeneousParts)
{
    const SparsePoly f = term(Frame::X, {2, 1, 0}) + term(Frame::X, {0, 1, 0}) + constant(Frame::X, 3, 4);
    EXPECT_EQ(f.degree(), 3);
    EXPECT_FALSE(f.is_homogeneous());
    EXPECT_EQ(f.homogeneous_part(1), term(Frame::X, {0, 1, 0}));
    EXPECT_EQ(f.constant_term(), 4);
    EXPECT_TRUE(f.homogeneous_part(3).is_homogeneous());
}
