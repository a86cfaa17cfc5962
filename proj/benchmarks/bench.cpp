#include <benchmark/benchmark.h>

#include <random>

#include "hyperrel/digraphs.hpp"
#include "hyperrel/dynamics.hpp"
#include "hyperrel/graphs.hpp"

using namespace hyperrel;

namespace {

BooleanRelation random_relation(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BooleanRelation r(n);
  for (Node i = 0; i < n; ++i) {
    for (Node j = 0; j < n; ++j) {
      if (rng() % 3 == 0) r.insert(i, j);
    }
  }
  return r;
}

void BM_PowerTrace(benchmark::State& state) {
  const auto r = random_relation(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(PowerTrace(r).period());
}
BENCHMARK(BM_PowerTrace)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_HitSets(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const PowerTrace trace(SimpleGraph::cycle(n).relation());
  for (auto _ : state) {
    for (Node x = 0; x < n; ++x) {
      for (Node y = 0; y < n; ++y) benchmark::DoNotOptimize(hit_set(trace, x, NodeSet::single(y)));
    }
  }
}
BENCHMARK(BM_HitSets)->Arg(5)->Arg(9)->Arg(17);

void BM_SCollection(benchmark::State& state) {
  const auto g = SimpleGraph::path(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(s_collection(g.relation()).count());
}
BENCHMARK(BM_SCollection)->Arg(4)->Arg(6)->Arg(8);

void BM_StrongSweep(benchmark::State& state) {
  const auto tournaments = enumerate_tournaments(4, false);
  const auto topologies = enumerate_topologies(4);
  const auto f = FamilySpec::all_nonempty();
  for (auto _ : state) {
    std::size_t yes = 0;
    for (const auto& t : tournaments) {
      const RelationTuple tuple(t.relation());
      for (const auto& topo : topologies) yes += is_strongly_hypercyclic(tuple, topo, f).yes();
    }
    benchmark::DoNotOptimize(yes);
  }
}
BENCHMARK(BM_StrongSweep)->Unit(benchmark::kMillisecond);

void BM_DisjointStrong(benchmark::State& state) {
  const auto c = build_pende_counterexample(static_cast<std::size_t>(state.range(0)), 2);
  std::vector<BooleanRelation> rels;
  for (const auto& d : c.tournaments) rels.push_back(d.relation());
  const RelationTuple tuple(rels);
  const auto f = FamilySpec::all_nonempty();
  for (auto _ : state) benchmark::DoNotOptimize(is_strongly_hypercyclic(tuple, c.topology, f).status);
}
BENCHMARK(BM_DisjointStrong)->Arg(5)->Arg(7);

void BM_CanonicalTournament(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto t = tournament_from_code(n, 0x5a5a5aULL & ((std::uint64_t{1} << (n * (n - 1) / 2)) - 1));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_tournament_code(t));
}
BENCHMARK(BM_CanonicalTournament)->Arg(5)->Arg(6)->Arg(7);

void BM_TournamentClasses(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tournament_classes(static_cast<std::size_t>(state.range(0))).size());
}
BENCHMARK(BM_TournamentClasses)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
