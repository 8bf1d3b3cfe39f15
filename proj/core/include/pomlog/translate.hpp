#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pomlog/automaton.hpp"
#include "pomlog/formula.hpp"
#include "pomlog/semantics.hpp"

namespace pomlog {

// ------------------------------------------------------------ same event

/// The automata A_{i,j,a} for every slot pair and label, built once.
class SameEventAutomata {
 public:
  SameEventAutomata(std::size_t k, const Alphabet& sigma,
                    SameEventVariant variant = SameEventVariant::Tracked);

  std::size_t k() const noexcept { return k_; }
  /// Letter indices of w; AlphabetError when a letter is not in □_k.
  std::vector<std::size_t> index(const StSequence& w) const;
  /// (x,i) ∼ (y,j) on an indexed word: the automaton for the earlier
  /// position reads the segment between the two positions, both included.
  /// Slots missing from their letter give false; no coherence check.
  bool related(const std::vector<std::size_t>& word, TrackPair a, TrackPair b) const;
  /// Hook for eval_fo_st and FoChecker over a fixed word.
  SameEventFn hook(const StSequence& w) const;

 private:
  std::size_t k_;
  std::vector<Label> labels_;
  std::vector<StLetter> letters_;
  std::vector<SameEventDfa> dfas_;  // [(i-1)*k + (j-1)][label]
  std::vector<std::size_t> sizes_;  // letter sizes by index
  const SameEventDfa& dfa(int i, int j, std::size_t label) const;
};

/// (x,i) ∼ (y,j) via the automata, positions 0-based and slots 1-based.
/// Σ is read off w. Throws NotCoherent, SlotOutOfRange.
bool same_event(const StSequence& w, std::size_t x, int i, std::size_t y, int j);

// ----------------------------------------------------------- FO to FO-ST

/// Coh_k: every pair of consecutive letters is coherent.
FormulaPtr build_coherence_formula(std::size_t k, const Alphabet& sigma);

/// Coh_k ∧ f̂ for a closed FO-pomset formula; the result is an FO-ST-ext
/// formula whose sim atoms stand for the same-event relation. Throws
/// FreeVariables.
FormulaPtr translate_fo_pomset_to_fo_st(const FormulaPtr& f, std::size_t k, const Alphabet& sigma);

// ---------------------------------------------------------- LTL to SPTL

FormulaPtr translate_ltl_st_to_sptl(const FormulaPtr& f);

// ------------------------------------------------------------ SPTL to FO

/// First stage: an MSO-pomset formula whose only set quantifiers are
/// bounded (E^k over ⇝-chains), true on a pomset of dimension ≤ k iff f
/// holds at its initial concstate.
FormulaPtr translate_sptl_to_bounded(const FormulaPtr& f, std::size_t k);
/// Second stage: replaces each bounded set by k first-order variables.
FormulaPtr eliminate_bounded_sets(const FormulaPtr& f);
/// Both stages; the result is a closed FO-pomset formula.
FormulaPtr translate_sptl_to_fo_pomset(const FormulaPtr& f, std::size_t k);

/// FO-pomset formula with free set variables Tm, U, Tm2, U2 (bounded-set
/// syntax) stating that (↓Tm2, U2) lies on the run from (↓Tm, U). Exposed
/// for testing.
FormulaPtr on_run_formula(const std::string& tm, const std::string& u, const std::string& tm2,
                          const std::string& u2);

}  // namespace pomlog
