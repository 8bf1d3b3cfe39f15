#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pomlog/decomposition.hpp"
#include "pomlog/formula.hpp"

namespace pomlog {

struct EnumSpec {
  std::size_t max_events = 3;
  std::size_t k = 2;
  Alphabet alphabet{"a", "b"};
  bool autoconcurrency_free = false;
  /// Visit one sequence per renaming of labels: the one whose labels first
  /// occur in alphabet order.
  bool label_orbits = false;
  /// Longest word visited; 0 for no bound beyond max_events.
  std::size_t max_letters = 0;
  std::uint64_t seed = 0;
};

/// Every sparse ST-sequence over □_k whose glue has at most max_events
/// events: the empty word, single non-empty identity letters, and coherent
/// alternating words without identities. Each is visited once, with its
/// event count. Prefixes with autoconcurrency are pruned when requested.
void for_each_sparse_sequence(const EnumSpec& spec,
                              const std::function<void(const StSequence&, int)>& visit);

/// One pomset per isomorphism class, in sequence enumeration order.
std::vector<Pomset> enumerate_pomsets(const EnumSpec& spec);

/// Random walk over coherent alternating letters; deterministic per seed.
Pomset random_pomset(const EnumSpec& spec);

/// Number of worker threads: POMLOG_THREADS when set and positive, else the
/// hardware concurrency.
unsigned worker_threads();

struct TaggedFormula {
  Logic logic;
  FormulaPtr formula;
};

struct EquivReport {
  Logic logic_a, logic_b;
  std::string formula_a, formula_b;
  std::size_t models_checked = 0;
  bool equivalent = true;
  /// First disagreement in enumeration order.
  std::optional<Pomset> counterexample;
  bool verdict_a = false, verdict_b = false;
};

/// Truth of a closed formula on a pomset. Word logics read the sparse
/// ST decomposition (the empty word for the empty pomset); SPTL and CPTL
/// start from the initial concstate. Throws IncompatibleLogics for EPTL,
/// which has no pomset-level semantics, and FreeVariables.
bool eval_on_pomset(const TaggedFormula& f, const Pomset& p);

/// Evaluates both formulas on every enumerated pomset.
EquivReport check_equivalence(const TaggedFormula& a, const TaggedFormula& b, const EnumSpec& spec,
                              unsigned threads = 0);

/// {"logic_a", "logic_b", "formula_a", "formula_b", "models_checked",
///  "verdict": "equivalent" | "counterexample", "model"?, "verdicts"?}
std::string to_json(const EquivReport& r, int indent = 2);

}  // namespace pomlog
