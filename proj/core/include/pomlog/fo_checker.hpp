#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "pomlog/formula.hpp"
#include "pomlog/semantics.hpp"

namespace pomlog {

/// First-order model checker compiled once and run on many models. Works
/// over pomsets (FO-pomset atoms) and over ST-sequences (FO-ST atoms,
/// including sim). Quantifier nodes are memoized per model on the values of
/// their free variables, which keeps large generated formulas tractable.
/// Agrees with eval_fo_pomset and eval_fo_st.
class FoChecker {
 public:
  explicit FoChecker(const FormulaPtr& f);

  /// Throws UnboundVar.
  bool eval(const Pomset& p, const Valuation& v = {});
  /// Without `same_event` sim atoms use glue_and_track. Throws UnboundVar.
  bool eval(const StSequence& w, const Valuation& v = {}, const SameEventFn& same_event = {});

  std::size_t node_count() const noexcept { return nodes_.size(); }

 private:
  struct Node {
    Kind kind;
    int lhs = -1, rhs = -1;
    int x = -1, y = -1;  // variable slots
    int i = 0, j = 0;    // sim slots
    Label label;
    int letter = -1;  // index into letters_
    std::vector<int> free;
    bool memo = false;
  };

  int compile(const Formula& f, std::map<const Formula*, int>& seen);
  void bind(const Valuation& v, bool words);
  bool ev(int n);
  bool atom(const Node& node) const;
  int value(int slot) const;

  FormulaPtr formula_;
  std::vector<Node> nodes_;
  int root_ = -1;
  std::vector<std::string> slot_names_;
  std::map<std::string, int> slot_of_;
  std::vector<StLetter> letters_;

  // Per-model state.
  const Pomset* pomset_ = nullptr;
  const StSequence* word_ = nullptr;
  const SameEventFn* same_ = nullptr;
  std::vector<int> word_letter_;  // letter index per position, -1 if absent
  std::unique_ptr<TrackedGlue> tracked_;
  int domain_ = 0;
  std::vector<int> val_;
  std::vector<std::unordered_map<std::uint64_t, bool>> memo_;
};

}  // namespace pomlog
