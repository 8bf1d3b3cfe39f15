#include "pomlog/translate.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <tuple>

#include "pomlog/error.hpp"

namespace pomlog {

using namespace mk;

// ------------------------------------------------------------ same event

SameEventAutomata::SameEventAutomata(std::size_t k, const Alphabet& sigma, SameEventVariant variant)
    : k_(k), labels_(sigma.labels()), letters_(box_letters(k, sigma, true)) {
  for (const auto& l : letters_) sizes_.push_back(l.size());
  const int kk = static_cast<int>(k);
  for (int i = 1; i <= kk; ++i)
    for (int j = 1; j <= kk; ++j)
      for (Label a : labels_) dfas_.push_back(build_same_event_dfa(i, j, a, k, sigma, variant));
}

const SameEventDfa& SameEventAutomata::dfa(int i, int j, std::size_t label) const {
  const std::size_t pair = static_cast<std::size_t>(i - 1) * k_ + static_cast<std::size_t>(j - 1);
  return dfas_[pair * labels_.size() + label];
}

std::vector<std::size_t> SameEventAutomata::index(const StSequence& w) const {
  std::vector<std::size_t> out;
  out.reserve(w.size());
  if (dfas_.empty()) {
    if (!w.empty()) throw AlphabetError("empty alphabet");
    return out;
  }
  for (const auto& l : w.letters) out.push_back(dfas_.front().letter(l));
  return out;
}

bool SameEventAutomata::related(const std::vector<std::size_t>& word, TrackPair a,
                                TrackPair b) const {
  if (a.position >= word.size() || b.position >= word.size()) return false;
  if (a.slot < 1 || b.slot < 1) return false;
  if (static_cast<std::size_t>(a.slot) > sizes_[word[a.position]] ||
      static_cast<std::size_t>(b.slot) > sizes_[word[b.position]])
    return false;
  if (b.position < a.position) std::swap(a, b);
  for (std::size_t l = 0; l < labels_.size(); ++l) {
    const Dfa& d = dfa(a.slot, b.slot, l).dfa;
    std::size_t q = d.initial;
    for (std::size_t n = a.position; n <= b.position; ++n) q = d.step(q, word[n]);
    if (d.accepting[q]) return true;
  }
  return false;
}

SameEventFn SameEventAutomata::hook(const StSequence& w) const {
  auto word = std::make_shared<std::vector<std::size_t>>(index(w));
  return [this, word](TrackPair a, TrackPair b) { return related(*word, a, b); };
}

bool same_event(const StSequence& w, std::size_t x, int i, std::size_t y, int j) {
  for (auto [pos, slot] : {std::pair{x, i}, std::pair{y, j}}) {
    if (pos >= w.size()) throw SlotOutOfRange("position " + std::to_string(pos) + " out of range");
    if (slot < 1 || static_cast<std::size_t>(slot) > w.letters[pos].size())
      throw SlotOutOfRange("slot " + std::to_string(slot) + " missing at position " +
                           std::to_string(pos));
  }
  for (std::size_t n = 1; n < w.size(); ++n)
    if (w.letters[n - 1].term_interface() != w.letters[n].start_interface()) throw NotCoherent(n);
  std::vector<Label> labels;
  std::size_t k = 1;
  for (const auto& l : w.letters) {
    k = std::max(k, l.size());
    for (const auto& it : l.items) labels.push_back(it.label);
  }
  const SameEventAutomata automata(k, Alphabet(labels));
  return automata.related(automata.index(w), {x, i}, {y, j});
}

// ----------------------------------------------------------- FO to FO-ST

namespace {

void collect_vars(const Formula& f, std::set<std::string>& out) {
  if (!f.var.empty()) out.insert(f.var);
  if (!f.var2.empty()) out.insert(f.var2);
  if (f.lhs) collect_vars(*f.lhs, out);
  if (f.rhs) collect_vars(*f.rhs, out);
}

class FreshNames {
 public:
  explicit FreshNames(std::set<std::string> taken = {}) : taken_(std::move(taken)) {}
  std::string operator()(const std::string& prefix) {
    for (;;) {
      std::string name = prefix + std::to_string(++counter_);
      if (taken_.insert(name).second) return name;
    }
  }

 private:
  std::set<std::string> taken_;
  int counter_ = 0;
};

class FoToSt {
 public:
  FoToSt(std::size_t k, const Alphabet& sigma, std::set<std::string> taken)
      : k_(static_cast<int>(k)), letters_(box_letters(k, sigma, false)), fresh_(std::move(taken)) {}

  FormulaPtr run(const FormulaPtr& f) { return tr(*f); }

 private:
  using Slots = std::map<std::string, int>;

  FormulaPtr letters_where(const std::string& x, const std::function<bool(const StLetter&)>& keep) {
    std::vector<FormulaPtr> out;
    for (const auto& p : letters_)
      if (keep(p)) out.push_back(letter(p, x));
    return disj_all(out);
  }
  FormulaPtr has_slot(const std::string& x, int i) {
    return letters_where(
        x, [&](const StLetter& p) { return p.size() >= static_cast<std::size_t>(i); });
  }
  FormulaPtr slot_flag(const std::string& x, int i, bool start) {
    return letters_where(x, [&](const StLetter& p) {
      if (p.size() < static_cast<std::size_t>(i)) return false;
      const auto& item = p.items[static_cast<std::size_t>(i - 1)];
      return start ? item.in_start : item.in_term;
    });
  }

  int slot(const Slots& s, const std::string& x) const {
    auto it = s.find(x);
    if (it == s.end()) throw UnboundVar(x);
    return it->second;
  }

  FormulaPtr tr(const Formula& f, const Slots& s = {}) {
    switch (f.kind) {
      case Kind::True:
        return truth();
      case Kind::False:
        return falsity();
      case Kind::Not:
        return neg(tr(*f.lhs, s));
      case Kind::And:
        return conj(tr(*f.lhs, s), tr(*f.rhs, s));
      case Kind::Exists: {
        std::vector<FormulaPtr> cases;
        for (int i = 1; i <= k_; ++i) {
          Slots inner = s;
          inner[f.var] = i;
          cases.push_back(exists(f.var, conj(has_slot(f.var, i), tr(*f.lhs, inner))));
        }
        return disj_all(cases);
      }
      case Kind::LabelAtom: {
        const int i = slot(s, f.var);
        return letters_where(f.var, [&](const StLetter& p) {
          return p.size() >= static_cast<std::size_t>(i) &&
                 p.items[static_cast<std::size_t>(i - 1)].label == f.label;
        });
      }
      case Kind::StartAtom:
      case Kind::TermAtom: {
        const int i = slot(s, f.var);
        const bool start = f.kind == Kind::StartAtom;
        const std::string y = fresh_("v");
        std::vector<FormulaPtr> parts;
        for (int j = 1; j <= k_; ++j)
          parts.push_back(implies(sim(f.var, i, y, j), slot_flag(y, j, start)));
        return forall(y, conj_all(parts));
      }
      case Kind::Prec: {
        const int i = slot(s, f.var), j = slot(s, f.var2);
        std::vector<FormulaPtr> parts;
        for (int i2 = 1; i2 <= k_; ++i2)
          for (int j2 = 1; j2 <= k_; ++j2) {
            const std::string x2 = fresh_("v"), y2 = fresh_("v");
            parts.push_back(
                forall(x2, forall(y2, implies(conj(sim(f.var, i, x2, i2), sim(f.var2, j, y2, j2)),
                                              less(x2, y2)))));
          }
        return conj_all(parts);
      }
      case Kind::EvOrd: {
        const int i = slot(s, f.var), j = slot(s, f.var2);
        std::vector<FormulaPtr> parts;
        for (int i2 = 1; i2 <= k_; ++i2)
          for (int j2 = i2 + 1; j2 <= k_; ++j2) {
            const std::string z = fresh_("v");
            parts.push_back(exists(z, conj(sim(f.var, i, z, i2), sim(f.var2, j, z, j2))));
          }
        return disj_all(parts);
      }
      default:
        throw IncompatibleLogics("unexpected connective in FO-pomset formula");
    }
  }

  int k_;
  std::vector<StLetter> letters_;
  FreshNames fresh_;
};

}  // namespace

FormulaPtr build_coherence_formula(std::size_t k, const Alphabet& sigma) {
  const auto letters = box_letters(k, sigma, true);
  std::vector<FormulaPtr> pairs;
  for (const auto& p1 : letters)
    for (const auto& p2 : letters)
      if (p1.term_interface() == p2.start_interface())
        pairs.push_back(conj(letter(p1, "x"), letter(p2, "y")));
  const FormulaPtr successor =
      conj(less("x", "y"), neg(exists("z", conj(less("x", "z"), less("z", "y")))));
  return forall("x", forall("y", implies(successor, disj_all(pairs))));
}

FormulaPtr translate_fo_pomset_to_fo_st(const FormulaPtr& f, std::size_t k, const Alphabet& sigma) {
  if (!free_vars(*f).empty()) throw FreeVariables("formula has free variables");
  const FormulaPtr core = desugar(Logic::FoPomset, f);
  std::set<std::string> taken;
  collect_vars(*core, taken);
  FoToSt t(k, sigma, taken);
  return conj(build_coherence_formula(k, sigma), t.run(core));
}

// ---------------------------------------------------------- LTL to SPTL

namespace {

FormulaPtr ltl_to_sptl(const Formula& f) {
  switch (f.kind) {
    case Kind::True:
      return truth();
    case Kind::False:
      return falsity();
    case Kind::LetterAtom:
      return conj(conclist(f.letter.start_interface()), next(conclist(f.letter.term_interface())));
    case Kind::Not:
      return neg(ltl_to_sptl(*f.lhs));
    case Kind::And:
      return conj(ltl_to_sptl(*f.lhs), ltl_to_sptl(*f.rhs));
    case Kind::Next:
      return next(conj(ltl_to_sptl(*f.lhs), next(truth())));
    case Kind::Until:
      return until(ltl_to_sptl(*f.lhs), conj(ltl_to_sptl(*f.rhs), next(truth())));
    default:
      throw IncompatibleLogics("unexpected connective in LTL-ST formula");
  }
}

}  // namespace

FormulaPtr translate_ltl_st_to_sptl(const FormulaPtr& f) {
  return ltl_to_sptl(*desugar(Logic::LtlSt, f));
}

// ------------------------------------------------------------ SPTL to FO
//
// A concstate (T, U) is described by two bounded sets: Tm, the ⇝-chain of
// maximal terminated events, and U. T is the down-closure of Tm. Later
// states are written as set expressions over the quantified sets.

namespace {

struct SetExpr;
using SetPtr = std::shared_ptr<const SetExpr>;
struct SetExpr {
  enum class Op { Var, Union, Minus } op = Op::Var;
  std::string name;
  SetPtr l, r;
};

SetPtr set_var(std::string name) {
  return std::make_shared<SetExpr>(SetExpr{SetExpr::Op::Var, std::move(name), nullptr, nullptr});
}
SetPtr set_union(SetPtr a, SetPtr b) {
  return std::make_shared<SetExpr>(SetExpr{SetExpr::Op::Union, {}, std::move(a), std::move(b)});
}
SetPtr set_minus(SetPtr a, SetPtr b) {
  return std::make_shared<SetExpr>(SetExpr{SetExpr::Op::Minus, {}, std::move(a), std::move(b)});
}

FormulaPtr mem(const SetPtr& e, const std::string& x) {
  switch (e->op) {
    case SetExpr::Op::Var:
      return in(x, e->name);
    case SetExpr::Op::Union:
      return disj(mem(e->l, x), mem(e->r, x));
    default:
      return conj(mem(e->l, x), neg(mem(e->r, x)));
  }
}

FormulaPtr iff(FormulaPtr a, FormulaPtr b) { return conj(implies(a, b), implies(b, a)); }

struct Context {
  SetPtr tm;
  SetPtr u;
};

class SptlToBounded {
 public:
  explicit SptlToBounded(int k) : k_(k) {}

  FormulaPtr run(const FormulaPtr& f) {
    const std::string t0 = fresh_("Tm"), u0 = fresh_("U"), x = fresh_("z");
    const Context c{set_var(t0), set_var(u0)};
    const FormulaPtr body =
        conj_all({forall(x, neg(in(x, t0))), forall(x, iff(in(x, u0), start(x))), tr(*f, c)});
    return exists_bounded(t0, k_, exists_bounded(u0, k_, body));
  }

  // x ∈ T, with T the down-closure of Tm.
  FormulaPtr in_t(const Context& c, const std::string& x) {
    const std::string y = fresh_("z");
    return exists(y, conj(mem(c.tm, y), disj(eq(x, y), prec(x, y))));
  }
  FormulaPtr in_a(const Context& c, const std::string& x) { return disj(in_t(c, x), mem(c.u, x)); }

  FormulaPtr concstate(const Context& c) {
    const std::string x = fresh_("z"), y = fresh_("z");
    return conj_all({
        forall(x, implies(mem(c.u, x), neg(in_t(c, x)))),
        forall(x, forall(y, implies(conj(prec(x, y), in_a(c, y)), in_a(c, x)))),
        forall(x, implies(mem(c.tm, x), neg(term(x)))),
    });
  }

  // c2 is reached from c by zero or more maximal steps. Every state after c
  // is determined by one event z of the residual: either the state right
  // after the start wave in which z starts, or right after the terminate
  // wave in which z terminates.
  FormulaPtr on_run(const Context& c, const Context& c2) {
    const std::string x = fresh_("z"), y = fresh_("z"), z = fresh_("z");
    const FormulaPtr same =
        forall(x, conj(iff(in_t(c2, x), in_t(c, x)), iff(mem(c2.u, x), mem(c.u, x))));
    const FormulaPtr t_after_start = disj(in_t(c, x), prec(x, z));
    const FormulaPtr a_after_start = forall(y, implies(prec(y, x), disj(in_t(c, y), prec(y, z))));
    const FormulaPtr start_type = exists(
        z, conj(neg(in_t(c, z)),
                forall(x, conj(iff(in_t(c2, x), t_after_start), iff(in_a(c2, x), a_after_start)))));
    const FormulaPtr t_after_term =
        disj(in_t(c, x), conj(neg(term(x)), forall(y, implies(prec(z, y), prec(x, y)))));
    const FormulaPtr term_type =
        exists(z, conj_all({neg(in_t(c, z)), neg(term(z)),
                            forall(x, conj(iff(in_a(c2, x), neg(prec(z, x))),
                                           iff(in_t(c2, x), t_after_term)))}));
    return disj_all({same, start_type, term_type});
  }

  // c ⪯ c2.
  FormulaPtr precedes(const Context& c, const Context& c2) {
    const std::string x = fresh_("z");
    return forall(x, conj(implies(in_t(c, x), in_t(c2, x)), implies(in_a(c, x), in_a(c2, x))));
  }

  FormulaPtr tr(const Formula& f, const Context& c) {
    switch (f.kind) {
      case Kind::True:
        return truth();
      case Kind::False:
        return falsity();
      case Kind::Not:
        return neg(tr(*f.lhs, c));
      case Kind::And:
        return conj(tr(*f.lhs, c), tr(*f.rhs, c));
      case Kind::Or:
        return disj(tr(*f.lhs, c), tr(*f.rhs, c));
      case Kind::Implies:
        return implies(tr(*f.lhs, c), tr(*f.rhs, c));
      case Kind::ConclistAtom:
        return conclist_equals(c.u, f.conclist);
      case Kind::Next:
        return next_step(*f.lhs, c);
      case Kind::Eventually:
        return until_step(*truth(), *f.lhs, c);
      case Kind::Globally:
        return neg(until_step(*truth(), *neg(f.lhs), c));
      case Kind::Until:
        return until_step(*f.lhs, *f.rhs, c);
      default:
        throw IncompatibleLogics("unexpected connective in SPTL formula");
    }
  }

 private:
  FormulaPtr conclist_equals(const SetPtr& u, const Conclist& want) {
    const std::string y = fresh_("z");
    if (want.empty()) return forall(y, neg(mem(u, y)));
    std::vector<std::string> xs;
    for (std::size_t i = 0; i < want.size(); ++i) xs.push_back(fresh_("z"));
    std::vector<FormulaPtr> parts, cover;
    for (std::size_t i = 0; i < want.size(); ++i) {
      parts.push_back(mem(u, xs[i]));
      parts.push_back(label(want.items[i], xs[i]));
      if (i + 1 < want.size()) parts.push_back(evord(xs[i], xs[i + 1]));
      cover.push_back(eq(y, xs[i]));
    }
    parts.push_back(forall(y, implies(mem(u, y), disj_all(cover))));
    FormulaPtr out = conj_all(parts);
    for (auto it = xs.rbegin(); it != xs.rend(); ++it) out = exists(*it, out);
    return out;
  }

  FormulaPtr defines(const std::string& set, const std::string& x, FormulaPtr def) {
    return forall(x, iff(in(x, set), std::move(def)));
  }
  FormulaPtr nonempty(const std::string& set) {
    const std::string x = fresh_("z");
    return exists(x, in(x, set));
  }

  FormulaPtr next_step(const Formula& body, const Context& c) {
    // Terminate case: the events that may terminate now.
    const std::string xt = fresh_("X"), x = fresh_("z"), y = fresh_("z");
    const FormulaPtr terminable =
        conj_all({mem(c.u, x), neg(term(x)),
                  forall(y, implies(conj(neg(prec(x, y)), neg(prec(y, x))), in_a(c, y)))});
    const Context after_term{set_union(c.tm, set_var(xt)), set_minus(c.u, set_var(xt))};
    const FormulaPtr case_term = exists_bounded(
        xt, k_, conj_all({defines(xt, x, terminable), nonempty(xt), tr(body, after_term)}));
    // Start case: the events whose predecessors have all terminated.
    const std::string xs = fresh_("X"), x2 = fresh_("z"), y2 = fresh_("z");
    const FormulaPtr startable = conj_all(
        {neg(mem(c.u, x2)), neg(in_t(c, x2)), forall(y2, implies(prec(y2, x2), in_t(c, y2)))});
    const Context after_start{c.tm, set_union(c.u, set_var(xs))};
    const FormulaPtr case_start = exists_bounded(
        xs, k_, conj_all({defines(xs, x2, startable), nonempty(xs), tr(body, after_start)}));
    return disj(case_term, case_start);
  }

  FormulaPtr until_step(const Formula& lhs, const Formula& rhs, const Context& c) {
    const FormulaPtr now = tr(rhs, c);
    // Some later state c1 on the run satisfies X rhs, and every state c2 on
    // the run up to c1 satisfies X(lhs ∨ rhs).
    const std::string t1 = fresh_("Tm"), u1 = fresh_("U");
    const Context c1{set_var(t1), set_var(u1)};
    const std::string t2 = fresh_("Tm"), u2 = fresh_("U");
    const Context c2{set_var(t2), set_var(u2)};
    const FormulaPtr either_ptr =
        disj(std::make_shared<const Formula>(lhs), std::make_shared<const Formula>(rhs));
    const Formula& either = *either_ptr;
    const FormulaPtr bad_before =
        exists_bounded(t2, k_,
                       exists_bounded(u2, k_,
                                      conj_all({concstate(c2), on_run(c, c2), precedes(c2, c1),
                                                neg(next_step(either, c2))})));
    const FormulaPtr later = exists_bounded(
        t1, k_,
        exists_bounded(
            u1, k_, conj_all({concstate(c1), on_run(c, c1), next_step(rhs, c1), neg(bad_before)})));
    return disj(now, conj(tr(lhs, c), later));
  }

  int k_;
  FreshNames fresh_;
};

// Second stage. Each bounded set becomes either the empty set or k
// first-order variables, repetitions allowed, pairwise equal or ⇝-ordered.
class Eliminator {
 public:
  FormulaPtr run(const FormulaPtr& f) { return el(f); }

 private:
  static void flatten_and(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
    if (f->kind == Kind::And) {
      flatten_and(f->lhs, out);
      flatten_and(f->rhs, out);
    } else {
      out.push_back(f);
    }
  }
  // Sets named by a disjunction of "x in X" atoms; false for anything else.
  static bool membership_sets(const Formula& f, const std::string& x,
                              std::vector<std::string>& out) {
    if (f.kind == Kind::In) {
      if (f.var != x) return false;
      out.push_back(f.var2);
      return true;
    }
    if (f.kind == Kind::Or)
      return membership_sets(*f.lhs, x, out) && membership_sets(*f.rhs, x, out);
    return false;
  }

  FormulaPtr subst(const FormulaPtr& f, const std::string& from, const std::string& to) {
    if (!f) return f;
    if ((f->kind == Kind::Exists || f->kind == Kind::Forall) && f->var == from) return f;
    const auto key = std::make_tuple(f.get(), from, to);
    if (auto it = subst_memo_.find(key); it != subst_memo_.end()) return it->second.second;
    auto lhs = subst(f->lhs, from, to), rhs = subst(f->rhs, from, to);
    const bool renames = f->is_atom() && (f->var == from || f->var2 == from);
    FormulaPtr out = f;
    if (renames || lhs != f->lhs || rhs != f->rhs) {
      auto g = std::make_shared<Formula>(*f);
      if (renames) {
        if (g->var == from) g->var = to;
        if (g->kind != Kind::In && g->var2 == from) g->var2 = to;
      }
      g->lhs = std::move(lhs);
      g->rhs = std::move(rhs);
      out = g;
    }
    subst_memo_.emplace(key, std::make_pair(f, out));
    return out;
  }

  // Set variables occurring free below f, sorted.
  const std::vector<std::string>& free_sets(const FormulaPtr& f) {
    if (auto it = free_memo_.find(f.get()); it != free_memo_.end()) return it->second.second;
    std::set<std::string> out;
    if (f->kind == Kind::In) out.insert(f->var2);
    for (const auto* child : {&f->lhs, &f->rhs})
      if (*child)
        for (const auto& s : free_sets(*child)) out.insert(s);
    if (f->kind == Kind::ExistsBounded || f->kind == Kind::ExistsSet || f->kind == Kind::ForallSet)
      out.erase(f->var);
    return free_memo_
        .emplace(f.get(), std::make_pair(f, std::vector<std::string>(out.begin(), out.end())))
        .first->second.second;
  }

  // The result depends only on whether each free set is empty, so shared
  // subtrees stay shared across unrelated bounded scopes.
  FormulaPtr el(const FormulaPtr& f) {
    if (f->is_atom() && f->kind != Kind::In) return f;
    std::string shape;
    for (const auto& s : free_sets(f)) shape += values(s).empty() ? '0' : '1';
    const auto key = std::make_pair(f.get(), shape);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second.second;
    FormulaPtr out = el_uncached(f);
    memo_.emplace(key, std::make_pair(f, out));
    return out;
  }

  const std::vector<std::string>& values(const std::string& set) const {
    auto it = env_.find(set);
    if (it == env_.end()) throw UnboundVar(set);
    return it->second;
  }

  FormulaPtr el_uncached(const FormulaPtr& fp) {
    const Formula& f = *fp;
    switch (f.kind) {
      case Kind::In: {
        FormulaPtr out = falsity();
        for (const auto& v : values(f.var2))
          out = is_false(out) ? eq(f.var, v) : disj(out, eq(f.var, v));
        return out;
      }
      case Kind::ExistsBounded:
        return bounded(f);
      case Kind::Exists: {
        // One-point rule: ∃y. (y ∈ X ∨ ...) ∧ φ becomes a disjunction of φ
        // over the variables standing for X.
        std::vector<FormulaPtr> parts;
        flatten_and(f.lhs, parts);
        for (std::size_t n = 0; n < parts.size(); ++n) {
          std::vector<std::string> sets;
          if (!membership_sets(*parts[n], f.var, sets)) continue;
          std::vector<std::string> vals;
          for (const auto& s : sets)
            for (const auto& v : values(s))
              if (std::find(vals.begin(), vals.end(), v) == vals.end()) vals.push_back(v);
          std::vector<FormulaPtr> rest;
          for (std::size_t m = 0; m < parts.size(); ++m)
            if (m != n) rest.push_back(parts[m]);
          const FormulaPtr body = conj_all(rest);
          FormulaPtr out = falsity();
          for (const auto& v : vals) {
            out = make(Kind::Or, out, el(subst(body, f.var, v)));
          }
          return out;
        }
        break;
      }
      default:
        break;
    }
    auto lhs = el(f.lhs);
    auto rhs = f.rhs ? el(f.rhs) : nullptr;
    if (auto folded = fold(f.kind, lhs, rhs)) return folded;
    if (lhs == f.lhs && rhs == f.rhs) return fp;
    auto g = std::make_shared<Formula>(f);
    g->lhs = std::move(lhs);
    g->rhs = std::move(rhs);
    return g;
  }

  static bool is_false(const FormulaPtr& f) { return f->kind == Kind::False; }

  // Folded node construction.
  static FormulaPtr make(Kind kind, const FormulaPtr& a, const FormulaPtr& b) {
    if (auto folded = fold(kind, a, b)) return folded;
    switch (kind) {
      case Kind::Not:
        return neg(a);
      case Kind::And:
        return conj(a, b);
      default:
        return disj(a, b);
    }
  }

  // Constant folding; ∃x. true is left alone since the pomset may be empty.
  static FormulaPtr fold(Kind kind, const FormulaPtr& a, const FormulaPtr& b) {
    const auto is = [](const FormulaPtr& f, Kind k) { return f && f->kind == k; };
    switch (kind) {
      case Kind::Not:
        if (is(a, Kind::True)) return falsity();
        if (is(a, Kind::False)) return truth();
        if (is(a, Kind::Not)) return a->lhs;
        break;
      case Kind::And:
        if (is(a, Kind::False) || is(b, Kind::False)) return falsity();
        if (is(a, Kind::True)) return b;
        if (is(b, Kind::True)) return a;
        break;
      case Kind::Or:
        if (is(a, Kind::True) || is(b, Kind::True)) return truth();
        if (is(a, Kind::False)) return b;
        if (is(b, Kind::False)) return a;
        break;
      case Kind::Implies:
        if (is(a, Kind::False) || is(b, Kind::True)) return truth();
        if (is(a, Kind::True)) return b;
        if (is(b, Kind::False)) return make(Kind::Not, a, nullptr);
        break;
      case Kind::Exists:
        if (is(a, Kind::False)) return falsity();
        break;
      case Kind::Forall:
        if (is(a, Kind::True)) return truth();
        break;
      default:
        break;
    }
    return nullptr;
  }

  FormulaPtr bounded(const Formula& f) {
    const std::string& set = f.var;
    const auto outer = env_.find(set) == env_.end() ? std::optional<std::vector<std::string>>{}
                                                    : std::optional{env_[set]};
    std::vector<std::string> vars;
    for (int i = 1; i <= f.slot1; ++i) vars.push_back(set + "_" + std::to_string(i));

    env_[set] = {};
    const FormulaPtr empty_case = el(f.lhs);

    env_[set] = vars;
    std::vector<FormulaPtr> guard;
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (std::size_t j = i + 1; j < vars.size(); ++j)
        guard.push_back(
            disj_all({eq(vars[i], vars[j]), evord(vars[i], vars[j]), evord(vars[j], vars[i])}));
    FormulaPtr chain = el(f.lhs);
    for (auto it = guard.rbegin(); it != guard.rend(); ++it) chain = make(Kind::And, *it, chain);
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      chain = is_false(chain) ? chain : exists(*it, chain);

    if (outer)
      env_[set] = *outer;
    else
      env_.erase(set);
    if (vars.empty()) return empty_case;
    return make(Kind::Or, empty_case, chain);
  }

  std::map<std::string, std::vector<std::string>> env_;
  // Keys hold raw pointers; the values keep the keyed nodes alive.
  std::map<std::pair<const Formula*, std::string>, std::pair<FormulaPtr, FormulaPtr>> memo_;
  std::map<const Formula*, std::pair<FormulaPtr, std::vector<std::string>>> free_memo_;
  std::map<std::tuple<const Formula*, std::string, std::string>, std::pair<FormulaPtr, FormulaPtr>>
      subst_memo_;
};

}  // namespace

FormulaPtr translate_sptl_to_bounded(const FormulaPtr& f, std::size_t k) {
  if (k == 0) throw IncompatibleLogics("k must be positive");
  SptlToBounded t(static_cast<int>(k));
  return t.run(f);
}

FormulaPtr eliminate_bounded_sets(const FormulaPtr& f) { return Eliminator().run(f); }

FormulaPtr translate_sptl_to_fo_pomset(const FormulaPtr& f, std::size_t k) {
  return eliminate_bounded_sets(translate_sptl_to_bounded(f, k));
}

FormulaPtr on_run_formula(const std::string& tm, const std::string& u, const std::string& tm2,
                          const std::string& u2) {
  SptlToBounded t(1);
  return t.on_run({set_var(tm), set_var(u)}, {set_var(tm2), set_var(u2)});
}

}  // namespace pomlog
