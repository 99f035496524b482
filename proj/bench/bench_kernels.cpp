#include "jack4/basis4.hpp"
#include "jack4/hermite.hpp"
#include "jack4/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace jack4;

namespace {

const ParamContext& ctx()
{
    static const ParamContext c = make_context(rational(1, 2), 2, 3);
    return c;
}

Exec exec_of(const benchmark::State& state)
{
    return state.range(0) == 0 ? Exec::Serial : Exec::Parallel;
}

// Gram matrix of the extended pairing on Y4 monomials, all levels up to the degree.
void BM_GramExtended(benchmark::State& state)
{
    const int degree = static_cast<int>(state.range(1));
    for (auto _ : state) {
        GramPairing gram(PairingKind::Extended, Frame::Y4, 4, ctx(), exec_of(state));
        benchmark::DoNotOptimize(gram.gram(degree));
    }
}

// Pairing matrix of the four-variable basis up to the degree.
void BM_BasisPairAll(benchmark::State& state)
{
    const int degree = static_cast<int>(state.range(1));
    std::vector<SparsePoly> polys;
    for (int d = 0; d <= degree; ++d)
        for (const auto& l : basis_labels(d))
            polys.push_back(basis_poly4(l, ctx()));
    GramPairing gram(PairingKind::Extended, Frame::Y4, 4, ctx(), exec_of(state));
    gram.gram(degree);
    for (auto _ : state)
        benchmark::DoNotOptimize(gram.pair_all(polys, polys));
}

// Hermite images and Hamiltonian checks over all labels up to the degree.
void BM_SpectrumSweep(benchmark::State& state)
{
    const int degree = static_cast<int>(state.range(1));
    std::vector<BasisLabel> labels;
    for (int d = 0; d <= degree; ++d)
        for (auto& l : basis_labels(d))
            labels.push_back(l);
    for (auto _ : state) {
        auto ok = sweep<bool>(
            labels.size(),
            [&](std::size_t k) {
                const HermiteRecord rec = hermite_basis(labels[k], ctx());
                return conjugated_hamiltonian(rec.poly, ctx()) == rec.poly * rec.energy;
            },
            exec_of(state));
        benchmark::DoNotOptimize(ok);
    }
}

}  // namespace

BENCHMARK(BM_GramExtended)->ArgsProduct({{0, 1}, {6, 8}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BasisPairAll)->ArgsProduct({{0, 1}, {6, 8}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpectrumSweep)->ArgsProduct({{0, 1}, {6, 8}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
