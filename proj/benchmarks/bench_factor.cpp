#include <benchmark/benchmark.h>

#include "gdet/det_factor.hpp"

using namespace gdet;

namespace {

Group group_for(int64_t order) {
    switch (order) {
        case 4: return Group({4});
        case 6: return Group({6});
        case 8: return Group({8});
        default: return Group({static_cast<int>(order)});
    }
}

void BM_LeibnizDeterminant(benchmark::State& state) {
    const Group g = group_for(state.range(0));
    const GroupMatrix m = group_matrix(g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(leibniz_determinant(m, 12));
    }
}
BENCHMARK(BM_LeibnizDeterminant)->Arg(4)->Arg(6)->Arg(8);

void BM_DedekindProduct(benchmark::State& state) {
    const Group g = group_for(state.range(0));
    const FactorEngine engine(g, 0);  // skip the oracle, time the product alone
    for (auto _ : state) {
        benchmark::DoNotOptimize(engine.dedekind());
    }
}
BENCHMARK(BM_DedekindProduct)->Arg(4)->Arg(6)->Arg(8);

void BM_SubgroupExtension(benchmark::State& state) {
    const Group g({8});
    const FactorEngine engine(g, 0);
    const Subgroup h = Subgroup::closure(g, {Element({static_cast<int>(state.range(0))})});
    for (auto _ : state) {
        benchmark::DoNotOptimize(engine.extended(h));
    }
}
BENCHMARK(BM_SubgroupExtension)->Arg(4)->Arg(2)->Arg(1);

void BM_CyclotomicProduct(benchmark::State& state) {
    const int level = static_cast<int>(state.range(0));
    CycNumber a = CycNumber::root_of_unity(level, level, 1) +
                  CycNumber::from_rational(level, Rational(3, 7));
    CycNumber b = CycNumber::root_of_unity(level, level, level - 1) -
                  CycNumber::from_rational(level, Rational(2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_CyclotomicProduct)->Arg(8)->Arg(12)->Arg(60);

void BM_ScalarInverse(benchmark::State& state) {
    const Group g({static_cast<int>(state.range(0))});
    const FactorEngine engine(g, 0);
    std::vector<CycNumber> assignment;
    for (long i = 0; i < g.order(); ++i)
        assignment.push_back(CycNumber::from_rational(g.exponent(), Rational(i + 2, 3)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(engine.inverse(assignment));
    }
}
BENCHMARK(BM_ScalarInverse)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
