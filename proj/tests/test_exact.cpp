#include "jack4/exact.hpp"

#include "helpers.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

using namespace jack4;

TEST(Rational, Normalizes)
{
    EXPECT_EQ(to_string(rational(2, 4)), "1/2");
    EXPECT_EQ(to_string(rational(-3, -6)), "1/2");
    EXPECT_EQ(to_string(rational(0, 7)), "0");
    EXPECT_EQ(rational(0, 7), 0);
    EXPECT_EQ(to_string(rational(6, -4)), "-3/2");
    EXPECT_THROW(rational(1, 0), std::invalid_argument);
}

TEST(Rational, ParseAcceptsCanonicalForms)
{
    EXPECT_EQ(parse_rational("5/7"), rational(5, 7));
    EXPECT_EQ(parse_rational("-2"), -2);
    EXPECT_EQ(parse_rational("4/6"), rational(2, 3));
    EXPECT_EQ(parse_rational("0"), 0);
}

TEST(Rational, ParseRejectsMalformed)
{
    for (const char* bad : {"", "1/0", "0.5", "1/", "/2", " 1", "1 ", "a", "1/2/3", "+-1", "1e3"})
        EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(Rational, TextRoundTrip)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const Rational r = jack4::testing::random_rational(rng, 1000);
        EXPECT_EQ(parse_rational(to_string(r)), r);
    }
}

TEST(Rational, FieldAxioms)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
        const Rational a = jack4::testing::random_rational(rng, 50);
        const Rational b = jack4::testing::random_rational(rng, 50);
        const Rational c = jack4::testing::random_rational(rng, 50);
        EXPECT_EQ(Rational(a + b), Rational(b + a));
        EXPECT_EQ(Rational(a * b), Rational(b * a));
        EXPECT_EQ(Rational((a + b) + c), Rational(a + (b + c)));
        EXPECT_EQ(Rational((a * b) * c), Rational(a * (b * c)));
        EXPECT_EQ(Rational(a * (b + c)), Rational(a * b + a * c));
        EXPECT_EQ(Rational(a + (-a)), 0);
        if (a != 0)
            EXPECT_EQ(Rational(a * (1 / a)), 1);
    }
}

TEST(ParamContext, Validates)
{
    EXPECT_NO_THROW(make_context(1, 0, 3));
    EXPECT_NO_THROW(make_context(rational(1, 2), 2, 4));
    EXPECT_THROW(make_context(rational(-1, 3), 0, 3), std::invalid_argument);
    EXPECT_THROW(make_context(1, rational(-1, 2), 3), std::invalid_argument);
    EXPECT_THROW(make_context(1, 0, 1), std::invalid_argument);
    EXPECT_THROW(make_context(1, 0, kMaxVars + 1), std::invalid_argument);
}

TEST(ParamContext, KeyDistinguishesParameters)
{
    const ParamContext a = make_context(rational(1, 2), 2, 3);
    EXPECT_EQ(a.kappa(), rational(1, 2));
    EXPECT_EQ(a.kappa_prime(), 2);
    EXPECT_EQ(a.nvars(), 3);
    EXPECT_EQ(a.with_nvars(4).nvars(), 4);
    EXPECT_NE(a.key(), a.with_nvars(4).key());
    EXPECT_NE(a.key(), make_context(rational(1, 2), 1, 3).key());
    EXPECT_EQ(a.key(), make_context(rational(2, 4), 2, 3).key());
}
