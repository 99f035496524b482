#include "jack4/kernels.hpp"

#include "jack4/combin.hpp"
#include "helpers.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

using namespace jack4;
using jack4::testing::ctx3;
using jack4::testing::random_poly;
using jack4::testing::term;

TEST(Kernels, SweepPreservesOrder)
{
    for (Exec exec : {Exec::Serial, Exec::Parallel}) {
        const auto out = sweep<long>(1000, [](std::size_t i) { return static_cast<long>(i * i); }, exec);
        ASSERT_EQ(out.size(), 1000u);
        for (std::size_t i = 0; i < out.size(); ++i)
            EXPECT_EQ(out[i], static_cast<long>(i * i));
    }
}

TEST(Kernels, SweepRethrows)
{
    for (Exec exec : {Exec::Serial, Exec::Parallel})
        EXPECT_THROW(sweep<int>(
                         64,
                         [](std::size_t i) {
                             if (i == 17)
                                 throw std::domain_error("boom");
                             return 0;
                         },
                         exec),
                     std::domain_error);
}

TEST(Kernels, MonomialBasisIsOrdered)
{
    const auto b = monomial_basis(3, 4);
    EXPECT_EQ(b.size(), 15u);
    for (std::size_t i = 1; i < b.size(); ++i)
        EXPECT_TRUE(MonomialOrder{}(b[i - 1], b[i]));
}

TEST(Kernels, GramMatchesDirectPairingKappa)
{
    const auto ctx = ctx3(rational(5, 7));
    GramPairing serial(PairingKind::Kappa, Frame::X, 3, ctx, Exec::Serial);
    GramPairing parallel(PairingKind::Kappa, Frame::X, 3, ctx, Exec::Parallel);
    for (int d = 0; d <= 4; ++d) {
        const auto& basis = serial.monomials(d);
        const RationalMatrix& g = serial.gram(d);
        EXPECT_EQ(g, parallel.gram(d));
        for (std::size_t a = 0; a < basis.size(); ++a)
            for (std::size_t b = 0; b < basis.size(); ++b) {
                const SparsePoly f = SparsePoly::monomial(3, Frame::X, basis[a]);
                const SparsePoly h = SparsePoly::monomial(3, Frame::X, basis[b]);
                EXPECT_EQ(g(static_cast<int>(a), static_cast<int>(b)), pairing_kappa(f, h, ctx));
            }
    }
}

TEST(Kernels, GramMatchesDirectPairingExtended)
{
    const auto ctx = make_context(rational(1, 2), 2, 3);
    GramPairing serial(PairingKind::Extended, Frame::Y4, 4, ctx, Exec::Serial);
    GramPairing parallel(PairingKind::Extended, Frame::Y4, 4, ctx, Exec::Parallel);
    for (int d = 0; d <= 3; ++d) {
        const auto& basis = serial.monomials(d);
        EXPECT_EQ(serial.gram(d), parallel.gram(d));
        for (std::size_t a = 0; a < basis.size(); ++a)
            for (std::size_t b = 0; b < basis.size(); ++b) {
                const SparsePoly f = SparsePoly::monomial(4, Frame::Y4, basis[a]);
                const SparsePoly h = SparsePoly::monomial(4, Frame::Y4, basis[b]);
                EXPECT_EQ(serial.gram(d)(static_cast<int>(a), static_cast<int>(b)), pairing_extended(f, h, ctx));
            }
    }
}

TEST(Kernels, PairAllSerialEqualsParallel)
{
    std::mt19937_64 rng(31);
    const auto ctx = ctx3(rational(1, 2));
    std::vector<SparsePoly> fs;
    for (int i = 0; i < 12; ++i)
        fs.push_back(random_poly(rng, Frame::X, 3, 5, 6));
    GramPairing serial(PairingKind::Kappa, Frame::X, 3, ctx, Exec::Serial);
    GramPairing parallel(PairingKind::Kappa, Frame::X, 3, ctx, Exec::Parallel);
    const RationalMatrix a = serial.pair_all(fs, fs);
    EXPECT_EQ(a, parallel.pair_all(fs, fs));
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j)
            EXPECT_EQ(a(i, j), pairing_kappa(fs[i], fs[j], ctx));
}

TEST(Kernels, RejectsForeignFrames)
{
    const auto ctx = ctx3(1);
    EXPECT_THROW(GramPairing(PairingKind::Extended, Frame::Y3, 3, ctx), std::invalid_argument);
    GramPairing gram(PairingKind::Kappa, Frame::X, 3, ctx);
    EXPECT_THROW(gram.pair(term(Frame::Y3, {1, 0, 0}), term(Frame::Y3, {1, 0, 0})), std::invalid_argument);
}
