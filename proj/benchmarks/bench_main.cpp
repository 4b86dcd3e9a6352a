#include <benchmark/benchmark.h>

#include "ordtop/csc.hpp"
#include "ordtop/gallery.hpp"
#include "ordtop/kb.hpp"
#include "ordtop/topology.hpp"

using namespace ordtop;

namespace {

std::vector<Interval> bridge_cover() {
  return {Interval{ExtPoint::neg_inf(), ExtPoint::point(2)},
          Interval{ExtPoint::point(1), ExtPoint::point(3)},
          Interval{ExtPoint::point(2), ExtPoint::pos_inf()}};
}

void BM_FindFiniteSubcover(benchmark::State& state) {
  const OrderedSpace os = ordered_space(gallery("finite(4)"));
  const CoverStream cover = cover_from_intervals(bridge_cover());
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_finite_subcover(os, cover, 3));
  }
}
BENCHMARK(BM_FindFiniteSubcover);

void BM_GapFinderStaged(benchmark::State& state) {
  const OrderPresentation ord = gallery("omega_plus_omega_star");
  const LinkageTreeParams params = make_linkage_params(ord, cover_from_gap(ord, *ord.gap));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gap_finder(params, state.range(0)));
  }
}
BENCHMARK(BM_GapFinderStaged)->Arg(16)->Arg(32)->Arg(64);

void BM_KbNeighborSweep(benchmark::State& state) {
  const TreePresentation tree = tree_from_list(
      {{}, {0}, {1}, {2}, {0, 0}, {0, 1}, {1, 0}, {2, 2}, {0, 0, 1}, {1, 0, 3}});
  const std::vector<FinSeq> nodes = *tree.finite_extent;
  for (auto _ : state) {
    for (const FinSeq& node : nodes) {
      benchmark::DoNotOptimize(kb_predecessor(tree, node));
      benchmark::DoNotOptimize(kb_successor(tree, node, 16));
    }
  }
}
BENCHMARK(BM_KbNeighborSweep);

void BM_HonestFlatten(benchmark::State& state) {
  const OrderedSpace os = ordered_space(gallery("finite(4)"));
  const Nat whole = interval_index({ExtPoint::neg_inf(), ExtPoint::pos_inf()});
  const HonestSequence h2 = [whole](Nat m, Nat n) -> std::vector<Nat> {
    if ((m + n) % 3 == 0) return {whole, whole + m + n};
    return {};
  };
  for (auto _ : state) {
    const FlattenedCover flat = honest_flatten(h2);
    Nat sum = 0;
    for (Nat p = 0; p < 64; ++p) sum += flat.g(p);
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_HonestFlatten);

void BM_ExtractPath(benchmark::State& state) {
  const TreePresentation tree = builtin_tree("zeros_with_noise");
  const UpperSetOracle upper = subtree_upper_set(tree, {});
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_path(tree, upper, state.range(0)));
  }
}
BENCHMARK(BM_ExtractPath)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
