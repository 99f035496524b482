#include "jack4/verify.hpp"

#include "helpers.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using namespace jack4;
using jack4::testing::ctx3;

TEST(Verify, EverySuitePassesAtLowDegree)
{
    const auto ctx = ctx3(rational(1, 2), 2);
    for (const auto& name : suite_names()) {
        const SuiteReport r = run_suite(name, ctx, 3);
        EXPECT_TRUE(r.ok()) << name << ": " << r.first_counterexample;
        EXPECT_GT(r.checked, 0) << name;
        EXPECT_EQ(r.suite, name);
        EXPECT_EQ(r.kappa, "1/2");
        EXPECT_EQ(r.kappa_prime, "2");
    }
}

TEST(Verify, SerialAndParallelAgree)
{
    const auto ctx = ctx3(rational(5, 7), rational(1, 2));
    for (const char* name : {"eigen", "prop1", "prop2", "spectrum", "f1-norm"}) {
        const SuiteReport a = run_suite(name, ctx, 3, Exec::Serial);
        const SuiteReport b = run_suite(name, ctx, 3, Exec::Parallel);
        EXPECT_EQ(a.to_json().dump(), b.to_json().dump()) << name;
    }
}

TEST(Verify, F1NormRecordsScaledVariant)
{
    const SuiteReport r = run_suite("f1-norm", ctx3(1), 2);
    ASSERT_TRUE(r.ok());
    for (const auto& row : r.details["cases"])
        if (row["s"] == 1)
            EXPECT_EQ(row["matches"], "scaled");
}

TEST(Verify, ReportJson)
{
    const SuiteReport r = run_suite("hooks", ctx3(1), 2);
    const auto j = r.to_json();
    EXPECT_EQ(j["suite"], "hooks");
    EXPECT_EQ(j["failures"], 0);
    EXPECT_TRUE(j["first_counterexample"].is_null());
    EXPECT_TRUE(j["ok"].get<bool>());
}

TEST(Verify, Errors)
{
    EXPECT_THROW(run_suite("nope", ctx3(1), 2), std::invalid_argument);
    EXPECT_THROW(run_suite("hooks", ctx3(1), -1), std::invalid_argument);
}
