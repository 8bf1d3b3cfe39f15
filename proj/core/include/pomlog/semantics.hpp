#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "pomlog/concstate.hpp"
#include "pomlog/decomposition.hpp"
#include "pomlog/formula.hpp"

namespace pomlog {

/// Interpretation of free variables: events and event sets for pomset
/// logics, positions for word logics.
struct Valuation {
  std::map<std::string, EventId> first_order;
  std::map<std::string, EventSet> second_order;
  std::map<std::string, std::size_t> st_first_order;
};

/// Slot `slot` (1-based) of the letter at `position` (0-based).
struct TrackPair {
  std::size_t position;
  int slot;
  friend bool operator==(const TrackPair&, const TrackPair&) = default;
};

/// Same-event oracle used by the extended FO-ST atom.
using SameEventFn = std::function<bool(TrackPair, TrackPair)>;

/// ⟨w⟩ together with the event each letter slot stands for.
struct TrackedGlue {
  Pomset pomset;
  std::vector<std::vector<EventId>> slots;  // [position][slot - 1]
};
/// Glues letter by letter and records identities. Throws NotCoherent.
TrackedGlue glue_and_track(const StSequence& w);
/// One more letter glued onto g. Throws NotCoherent.
TrackedGlue extend_tracked(const TrackedGlue& g, const StLetter& letter);
/// (x,i) ∼ (y,j) read off glue_and_track. Throws SlotOutOfRange.
bool same_event_by_glue(const TrackedGlue& g, TrackPair a, TrackPair b);

// --------------------------------------------------------- first order

/// Throws UnboundVar.
bool eval_fo_pomset(const Pomset& p, const Valuation& v, const Formula& f);
/// Set quantifiers range over all subsets; bounded ones over ⇝-chains
/// of at most the bound. Throws UnboundVar.
bool eval_mso_pomset(const Pomset& p, const Valuation& v, const Formula& f);
/// Positions range over w. Without `same_event` the SameEvent atom is
/// answered by glue_and_track. Throws UnboundVar, SlotOutOfRange.
bool eval_fo_st(const StSequence& w, const Valuation& v, const Formula& f,
                const SameEventFn& same_event = {});

// ------------------------------------------------------------ temporal

/// Finite-word LTL with letter atoms; the empty word satisfies nothing.
bool eval_ltl_st(const StSequence& w, const Formula& f);
bool eval_sptl_seq(const ConclistSequence& s, const Formula& f);
/// Throws HostMismatch when c belongs to another pomset.
bool eval_sptl_concstate(const Pomset& p, const Concstate& c, const Formula& f);

enum class UntilReading {
  /// Intermediate concstates range over every concstate of the pomset.
  Literal,
  /// Intermediate concstates range over the run from the current state.
  Run,
};
/// SPTL over concstates with Until replaced by its alternate
/// characterization (ψ now, or φ now and a later state with X ψ such that
/// every state in between has X(φ ∨ ψ)).
bool eval_sptl_until_alt(const Pomset& p, const Concstate& c, const Formula& f,
                         UntilReading reading = UntilReading::Run);

/// Throws NoSuchEvent when e is out of range.
bool eval_eptl(const Pomset& p, EventId e, const Formula& f);
bool eval_cptl(const Pomset& p, const Concstate& c, const Formula& f);

// ------------------------------------------------------------- batches

/// Truth of many formulas over one finite sequence of positions; values are
/// memoized per subformula node, so formulas sharing subterms share work.
/// Position n stands for the empty suffix and satisfies nothing.
class SequenceEvaluator {
 public:
  /// Conclist sequence for SPTL.
  explicit SequenceEvaluator(const ConclistSequence& s);
  /// ST sequence for LTL-ST.
  explicit SequenceEvaluator(const StSequence& w);

  std::size_t length() const noexcept { return n_; }
  bool eval(const Formula& f) { return n_ > 0 && values(f)[0]; }
  /// Truth at every position 0..n (the last entry is always false).
  const std::vector<char>& values(const Formula& f);

 private:
  bool atom(const Formula& f, std::size_t i) const;

  std::size_t n_;
  const ConclistSequence* conclists_ = nullptr;
  const StSequence* letters_ = nullptr;
  std::unordered_map<const Formula*, std::vector<char>> memo_;
};

/// SPTL over the run of concstates from a start state, built with next().
/// Values are memoized per (subformula, concstate of the run).
class RunEvaluator {
 public:
  RunEvaluator(const Pomset& p, const Concstate& from);

  const std::vector<Concstate>& run() const noexcept { return run_; }
  bool eval(const Formula& f) { return values(f)[0]; }
  /// Truth at every state of the run, plus a trailing false for "past the
  /// final state".
  const std::vector<char>& values(const Formula& f);

 private:
  const Pomset* host_;
  std::vector<Concstate> run_;
  std::unordered_map<const Formula*, std::vector<char>> memo_;
};

}  // namespace pomlog
