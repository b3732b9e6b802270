// Serial reference vs OpenMP search, and generic sumset engine vs bitmask kernel.
//   ./signedsum_bench --benchmark_filter=Rho

#include <benchmark/benchmark.h>

#include "mask_kernel.hpp"
#include "signedsum/search.hpp"
#include "signedsum/sumset.hpp"

using namespace signedsum;

namespace {

RhoQuery signed_query(std::int64_t n, std::size_t m, int h) {
    RhoQuery q;
    q.group = GroupSpec::cyclic(n);
    q.m = m;
    q.kind = SumsetKind::Signed;
    q.H = MultiplicitySet::single(h);
    q.prune = false;
    return q;
}

void BM_RhoSerial(benchmark::State& state) {
    auto q = signed_query(state.range(0), static_cast<std::size_t>(state.range(1)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(rho(q).value);
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(binomial_saturating(q.group.order(), q.m)));
}

void BM_RhoParallel(benchmark::State& state) {
    auto q = signed_query(state.range(0), static_cast<std::size_t>(state.range(1)), 3);
    const int workers = static_cast<int>(state.range(2));
    for (auto _ : state) benchmark::DoNotOptimize(rho_parallel(q, workers).value);
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(binomial_saturating(q.group.order(), q.m)));
}

BENCHMARK(BM_RhoSerial)->Args({17, 4})->Args({23, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RhoParallel)
    ->ArgsProduct({{17}, {4}, {1, 2, 4}})
    ->ArgsProduct({{23}, {5}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

GroupSubset sample_set(const GroupSpec& g, int size) {
    std::vector<Code> codes;
    for (int i = 0; i < size; ++i) codes.push_back((3 * i * i + i) % static_cast<Code>(g.order()));
    return GroupSubset(g, codes);
}

void BM_SumsetGeneric(benchmark::State& state) {
    auto g = GroupSpec::cyclic(state.range(0));
    auto a = sample_set(g, 6);
    auto H = MultiplicitySet::single(static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(union_fold(a, H, SumsetKind::RestrictedSigned).size());
}

void BM_SumsetMask(benchmark::State& state) {
    auto g = GroupSpec::cyclic(state.range(0));
    detail::MaskKernel kernel(g);
    auto a = kernel.from_subset(sample_set(g, 6));
    auto H = MultiplicitySet::single(static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(kernel.sumset(a, H, SumsetKind::RestrictedSigned));
}

BENCHMARK(BM_SumsetGeneric)->ArgsProduct({{31, 61}, {2, 4}});
BENCHMARK(BM_SumsetMask)->ArgsProduct({{31, 61}, {2, 4}});

}  // namespace

BENCHMARK_MAIN();
