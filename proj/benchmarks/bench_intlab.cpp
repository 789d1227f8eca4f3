#include <benchmark/benchmark.h>

#include <intlab/eval.hpp>
#include <intlab/modal.hpp>
#include <intlab/modelio.hpp>
#include <intlab/verify.hpp>

#include <random>

using namespace intlab;

namespace {

FiniteFrame four_world() {
    return FiniteFrame::from_edges(
        SortId("w"), {"w1", "w2", "w3", "w4"},
        {{"w1", "w2"}, {"w1", "w4"}, {"w2", "w3"}, {"w3", "w2"}, {"w4", "w4"}});
}

FiniteFrame random_frame(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::string> worlds;
    for (std::size_t i = 1; i <= n; ++i) worlds.push_back("w" + std::to_string(i));
    std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
    for (auto& row : adj) {
        for (auto& x : row) x = static_cast<int>(rng() % 2);
    }
    return FiniteFrame(SortId("w"), worlds, adj);
}

IntensionalModel two_sort() { return load_model(std::string(INTLAB_MODELS_DIR) + "/twosort.json"); }

void BM_FourWorldBox(benchmark::State& state) {
    const FiniteFrame f = four_world();
    const Vec v = proposition_vec(f, {1, 1, 0, 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(box_finite(f, v));
    }
}
BENCHMARK(BM_FourWorldBox);

void BM_AccumulateN(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const FiniteFrame f = random_frame(n, 7);
    std::vector<int> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<int>(i % 2);
    const Vec v = proposition_vec(f, bits);
    for (auto _ : state) {
        benchmark::DoNotOptimize(accumulate(f, v));
    }
}
BENCHMARK(BM_AccumulateN)->Arg(16)->Arg(64)->Arg(128);

void BM_CantorTruthMeasure(benchmark::State& state) {
    const ContinuousFrame f(SortId("time"), Rational(-1), Rational(1));
    const MeasurableProp p = MeasurableProp(IntervalSet::interval(0, 10))
                                 .with_exception(NullSet::cantor(3, 5), Polarity::Remove);
    for (auto _ : state) {
        benchmark::DoNotOptimize(truth_measure_at(f, p, 4));
    }
}
BENCHMARK(BM_CantorTruthMeasure);

void BM_CantorMembership(benchmark::State& state) {
    const Rational x(1234567, 3999999);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cantor_contains_unit(x));
    }
}
BENCHMARK(BM_CantorMembership);

void BM_ParseTypecheck(benchmark::State& state) {
    const IntensionalModel m = two_sort();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            typecheck(parse_expr("box[w] (happy(ann) implies dia[i] (p or q))"), m));
    }
}
BENCHMARK(BM_ParseTypecheck);

void BM_CheckHom(benchmark::State& state) {
    const IntensionalModel m = two_sort();
    const TypedExpr e = typecheck(parse_expr("box[w] dia[i] (phi and happy(x))"), m);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_hom(e, m));
    }
}
BENCHMARK(BM_CheckHom);

void BM_OpMatrix3(benchmark::State& state) {
    const TruthTable tt = TruthTable::from_fn(
        3, [](const std::vector<int>& b) { return (b[0] & b[1]) ^ b[2]; });
    for (auto _ : state) {
        benchmark::DoNotOptimize(op_matrix(tt));
    }
}
BENCHMARK(BM_OpMatrix3);

}  // namespace

BENCHMARK_MAIN();
