#include "ginv/catalog.hpp"
#include "ginv/chartab.hpp"
#include "ginv/group_ops.hpp"
#include "ginv/invariants.hpp"
#include "ginv/tqft.hpp"

#include <benchmark/benchmark.h>

using namespace ginv;

static void bm_bsgs_build(benchmark::State &state) {
  GroupSpec spec = parse_group_spec("family:S(6)");
  for (auto _ : state)
    benchmark::DoNotOptimize(make_group(spec).order());
}
BENCHMARK(bm_bsgs_build);

static void bm_conjugacy_classes(benchmark::State &state) {
  PermGroup g = make_group(parse_group_spec("family:S(6)"));
  for (auto _ : state)
    benchmark::DoNotOptimize(conjugacy_classes(g).size());
}
BENCHMARK(bm_conjugacy_classes);

static void bm_character_degrees(benchmark::State &state) {
  PermGroup g = make_group(parse_group_spec("family:S(6)"));
  for (auto _ : state)
    benchmark::DoNotOptimize(character_degrees(g).class_count());
}
BENCHMARK(bm_character_degrees);

static void bm_genus_invariant(benchmark::State &state) {
  DegreeMultiset d =
      character_degrees(make_group(parse_group_spec("family:S(6)")));
  for (auto _ : state)
    benchmark::DoNotOptimize(invariant_q(d, 4));
}
BENCHMARK(bm_genus_invariant);

static void bm_tqft_genus_word(benchmark::State &state) {
  DegreeMultiset d =
      character_degrees(make_group(parse_group_spec("family:S(5)")));
  CobordismWord w = genus_word(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(evaluate_closed(w, d));
}
BENCHMARK(bm_tqft_genus_word);

BENCHMARK_MAIN();
