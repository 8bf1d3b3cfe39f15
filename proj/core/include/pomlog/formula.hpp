#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pomlog/decomposition.hpp"

namespace pomlog {

enum class Logic : std::uint8_t {
  FoPomset,
  MsoPomset,
  FoSt,
  FoStExt,
  LtlSt,
  Sptl,
  Eptl,
  Cptl,
};

/// "fo-pomset", "mso-pomset", "fo-st", "fo-st-ext", "ltl-st", "sptl", "eptl", "cptl".
std::string_view to_string(Logic logic);
/// Throws SyntaxError on an unknown tag.
Logic logic_from_string(std::string_view tag);
bool is_first_order(Logic logic);   // quantified logics
bool is_pomset_logic(Logic logic);  // models are pomsets (with a concstate or event)

enum class Kind : std::uint8_t {
  True,
  False,
  Not,
  And,
  Or,
  Implies,
  Exists,
  Forall,
  ExistsSet,
  ForallSet,
  ExistsBounded,  // set of at most `bound` pairwise ⇝-ordered events
  LabelAtom,      // a(x); EPTL a when var is empty
  StartAtom,      // S(x); EPTL S
  TermAtom,       // T(x); EPTL T
  Prec,           // x < y over pomsets
  EvOrd,          // x ~ y
  Eq,
  In,          // x in X
  LetterAtom,  // P(x) in FO-ST; bare P in LTL-ST
  Less,        // x < y over words
  SameEvent,   // sim(x,i,y,j)
  ConclistAtom,
  Next,
  Until,
  Eventually,
  Globally,
  NextStart,   // X+
  NextTerm,    // X-
  ExistsNext,  // EX
  EvOrdNext,   // On
  EvOrdPrev,   // Op
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable formula node shared by every logic. Which payload fields are
/// meaningful depends on `kind`.
struct Formula {
  Kind kind = Kind::True;
  std::string var;   // bound or first variable; set variable for set quantifiers
  std::string var2;  // second variable; set variable of In
  int slot1 = 0;     // SameEvent slots; bound of ExistsBounded
  int slot2 = 0;
  Label label;
  StLetter letter;
  Conclist conclist;
  FormulaPtr lhs;  // sole child of unary nodes
  FormulaPtr rhs;

  bool is_atom() const { return !lhs; }
};

/// Structural equality.
bool operator==(const Formula& a, const Formula& b);

namespace mk {

FormulaPtr truth();
FormulaPtr falsity();
FormulaPtr neg(FormulaPtr f);
FormulaPtr conj(FormulaPtr a, FormulaPtr b);
FormulaPtr disj(FormulaPtr a, FormulaPtr b);
FormulaPtr implies(FormulaPtr a, FormulaPtr b);
/// Left-nested conjunction/disjunction; empty lists give true/false.
FormulaPtr conj_all(const std::vector<FormulaPtr>& fs);
FormulaPtr disj_all(const std::vector<FormulaPtr>& fs);

FormulaPtr exists(std::string var, FormulaPtr body);
FormulaPtr forall(std::string var, FormulaPtr body);
FormulaPtr exists_set(std::string var, FormulaPtr body);
FormulaPtr forall_set(std::string var, FormulaPtr body);
FormulaPtr exists_bounded(std::string var, int bound, FormulaPtr body);

FormulaPtr label(Label a, std::string var);
FormulaPtr start(std::string var);
FormulaPtr term(std::string var);
FormulaPtr prec(std::string x, std::string y);
FormulaPtr evord(std::string x, std::string y);
FormulaPtr eq(std::string x, std::string y);
FormulaPtr in(std::string x, std::string set);

FormulaPtr letter(StLetter p, std::string var);
FormulaPtr less(std::string x, std::string y);
FormulaPtr sim(std::string x, int i, std::string y, int j);

FormulaPtr ltl_letter(StLetter p);
FormulaPtr conclist(Conclist u);
FormulaPtr next(FormulaPtr f);
FormulaPtr until(FormulaPtr a, FormulaPtr b);
FormulaPtr eventually(FormulaPtr f);
FormulaPtr globally(FormulaPtr f);
FormulaPtr next_start(FormulaPtr f);
FormulaPtr next_term(FormulaPtr f);

FormulaPtr event_label(Label a);
FormulaPtr event_start();
FormulaPtr event_term();
FormulaPtr exists_next(FormulaPtr f);
FormulaPtr evord_next(FormulaPtr f);
FormulaPtr evord_prev(FormulaPtr f);

}  // namespace mk

struct ParseOptions {
  /// Variables allowed to occur free.
  std::vector<std::string> free_vars;
  std::vector<std::string> free_set_vars;
  /// When set, atoms must lie in □_k or Conc_k and slots in 1..k.
  std::optional<std::size_t> k;
  /// When set, every label must belong to it.
  std::optional<Alphabet> alphabet;
};

/// Throws SyntaxError, ScopeError, AlphabetError.
FormulaPtr parse(Logic logic, std::string_view text, const ParseOptions& options = {});

/// Canonical text; parse(print(f)) is structurally equal to f.
std::string print(const Formula& f);
inline std::string print(const FormulaPtr& f) { return print(*f); }

std::set<std::string> free_vars(const Formula& f);
/// Operator nesting depth; atoms have depth 0.
int depth(const Formula& f);
std::size_t node_count(const Formula& f);

/// Rewrites sugar (Or, Implies, Forall, ForallSet, Eq, Eventually, Globally)
/// into the core connectives of `logic`. Eq becomes four negated order atoms
/// over pomsets and two over words.
FormulaPtr desugar(Logic logic, const FormulaPtr& f);

/// Kinds allowed in `logic` (sugar included).
bool allowed_in(Logic logic, Kind kind);

// ------------------------------------------------------------- enumeration

struct FormulaEnumOptions {
  Alphabet alphabet{"a"};
  std::size_t k = 1;
  std::vector<std::string> vars{"x"};
  std::vector<std::string> set_vars{"X"};
  /// Include Id_∅ among letter atoms.
  bool empty_letter = true;
};

/// Syntactically distinct formulas over the core connectives of a logic,
/// by exact depth. Levels below the requested one are materialized; the top
/// level can be streamed by index.
class FormulaEnumerator {
 public:
  FormulaEnumerator(Logic logic, FormulaEnumOptions options);

  Logic logic() const noexcept { return logic_; }
  const std::vector<FormulaPtr>& atoms() const noexcept { return atoms_; }
  /// Number of formulas of exactly this depth, saturating at UINT64_MAX.
  std::uint64_t count_exact(int depth);
  std::uint64_t count_upto(int depth);
  /// Materialized level of exactly this depth.
  const std::vector<FormulaPtr>& level(int depth);
  /// The index-th formula of exactly this depth, in level order.
  FormulaPtr at(int depth, std::uint64_t index);

 private:
  struct Op {
    Kind kind;
    std::string var;
  };
  FormulaPtr make(const Op& op, FormulaPtr a, FormulaPtr b) const;
  const std::vector<FormulaPtr>& cumulative(int depth);

  Logic logic_;
  FormulaEnumOptions options_;
  std::vector<FormulaPtr> atoms_;
  std::vector<Op> unary_;
  std::vector<Op> binary_;
  std::vector<std::vector<FormulaPtr>> levels_;
  std::vector<std::vector<FormulaPtr>> cumulative_;
};

/// Every formula of depth ≤ max_depth, shallow first.
std::vector<FormulaPtr> enumerate_formulas(Logic logic, int max_depth,
                                           const FormulaEnumOptions& options = {});

}  // namespace pomlog
