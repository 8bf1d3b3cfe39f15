#include <benchmark/benchmark.h>

#include <map>

#include "pomlog/automaton.hpp"
#include "pomlog/concstate.hpp"
#include "pomlog/decomposition.hpp"
#include "pomlog/fo_checker.hpp"
#include "pomlog/harness.hpp"
#include "pomlog/semantics.hpp"
#include "pomlog/translate.hpp"

using namespace pomlog;

namespace {

const std::vector<Pomset>& models(std::size_t events) {
  static std::map<std::size_t, std::vector<Pomset>> cache;
  auto& m = cache[events];
  if (m.empty())
    m = enumerate_pomsets(
        {.max_events = events, .k = 2, .alphabet = {"a", "b"}, .autoconcurrency_free = true});
  return m;
}

void BM_EnumerateSequences(benchmark::State& state) {
  const EnumSpec spec{.max_events = static_cast<std::size_t>(state.range(0)), .k = 2};
  for (auto _ : state) {
    std::size_t n = 0;
    for_each_sparse_sequence(spec, [&](const StSequence&, int) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_EnumerateSequences)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_SparseDecompose(benchmark::State& state) {
  const auto& ms = models(5);
  for (auto _ : state)
    for (const auto& p : ms)
      if (!p.empty()) benchmark::DoNotOptimize(sparse_decompose(p));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ms.size()));
}
BENCHMARK(BM_SparseDecompose)->Unit(benchmark::kMillisecond);

void BM_GlueRoundTrip(benchmark::State& state) {
  const auto& ms = models(5);
  std::vector<StSequence> words;
  for (const auto& p : ms)
    if (!p.empty()) words.push_back(sparse_decompose(p));
  for (auto _ : state)
    for (const auto& w : words) benchmark::DoNotOptimize(glue_sequence(w));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words.size()));
}
BENCHMARK(BM_GlueRoundTrip)->Unit(benchmark::kMillisecond);

void BM_SptlConcstate(benchmark::State& state) {
  const auto& ms = models(5);
  const FormulaPtr f = parse(Logic::Sptl, "([a] U [b]) U ([b] U [a])");
  for (auto _ : state)
    for (const auto& p : ms) benchmark::DoNotOptimize(eval_sptl_concstate(p, initial(p), *f));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ms.size()));
}
BENCHMARK(BM_SptlConcstate)->Unit(benchmark::kMillisecond);

void BM_SptlSequence(benchmark::State& state) {
  const auto& ms = models(5);
  std::vector<ConclistSequence> seqs;
  for (const auto& p : ms)
    if (!p.empty()) seqs.push_back(conclist_decompose(p));
  const FormulaPtr f = parse(Logic::Sptl, "([a] U [b]) U ([b] U [a])");
  for (auto _ : state)
    for (const auto& s : seqs) benchmark::DoNotOptimize(eval_sptl_seq(s, *f));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(seqs.size()));
}
BENCHMARK(BM_SptlSequence)->Unit(benchmark::kMillisecond);

void BM_SptlToFo(benchmark::State& state) {
  const FormulaPtr f = parse(Logic::Sptl, "G (F (X []))");
  for (auto _ : state) benchmark::DoNotOptimize(translate_sptl_to_fo_pomset(f, 2));
}
BENCHMARK(BM_SptlToFo)->Unit(benchmark::kMillisecond);

void BM_FoCheckerOnTranslation(benchmark::State& state) {
  const auto& ms = models(4);
  FoChecker checker(translate_sptl_to_fo_pomset(parse(Logic::Sptl, "X X [a]"), 2));
  for (auto _ : state)
    for (const auto& p : ms) benchmark::DoNotOptimize(checker.eval(p));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ms.size()));
}
BENCHMARK(BM_FoCheckerOnTranslation)->Unit(benchmark::kMillisecond);

void BM_SameEventDfa(benchmark::State& state) {
  const Alphabet sigma{"a", "b"};
  for (auto _ : state) {
    const auto s = build_same_event_dfa(1, 2, Label("a"), 2, sigma);
    benchmark::DoNotOptimize(check_counter_free(s.dfa));
  }
}
BENCHMARK(BM_SameEventDfa)->Unit(benchmark::kMillisecond);

void BM_SameEventQuery(benchmark::State& state) {
  const Alphabet sigma{"a", "b"};
  const SameEventAutomata automata(2, sigma);
  const auto w = parse_st_sequence("[a*,*b*].[*a*,*b].[*a*,a*].[*a,*a*].[b*,*a*].[*b,*a*]");
  const auto idx = automata.index(w);
  for (auto _ : state) benchmark::DoNotOptimize(automata.related(idx, {0, 1}, {5, 2}));
}
BENCHMARK(BM_SameEventQuery);

}  // namespace

BENCHMARK_MAIN();
