#include "pomlog/semantics.hpp"

#include <map>
#include <optional>

#include "pomlog/error.hpp"

namespace pomlog {

// ------------------------------------------------------------- tracking

namespace {

Pomset tagged_letter(const StLetter& l, std::size_t position) {
  const int n = static_cast<int>(l.size());
  std::vector<std::string> ids;
  std::vector<Label> labels;
  std::vector<EventSet> succ(n), after(n);
  EventSet start, term;
  for (int j = 0; j < n; ++j) {
    ids.push_back("w" + std::to_string(position) + "_" + std::to_string(j + 1));
    labels.push_back(l.items[j].label);
    for (int m = j + 1; m < n; ++m) after[j].insert(m);
    if (l.items[j].in_start) start.insert(j);
    if (l.items[j].in_term) term.insert(j);
  }
  return Pomset::build(std::move(ids), std::move(labels), std::move(succ), std::move(after), start,
                       term);
}

}  // namespace

TrackedGlue extend_tracked(const TrackedGlue& g, const StLetter& letter) {
  const std::size_t position = g.slots.size();
  const Pomset q = tagged_letter(letter, position);
  TrackedGlue out;
  if (position == 0) {
    out.pomset = q;
    out.slots.emplace_back();
    for (EventId e = 0; e < q.size(); ++e) out.slots[0].push_back(e);
    return out;
  }
  if (g.pomset.conclist(g.pomset.term()) != letter.start_interface()) throw NotCoherent(position);
  const Pairing pairing = positional_pairing(g.pomset, q);
  out.pomset = glue(g.pomset, q, pairing);
  out.slots = g.slots;
  std::vector<EventId> slots(static_cast<std::size_t>(q.size()), -1);
  for (auto [x, y] : pairing) slots[static_cast<std::size_t>(y)] = x;
  for (EventId y = 0; y < q.size(); ++y)
    if (slots[static_cast<std::size_t>(y)] < 0)
      slots[static_cast<std::size_t>(y)] = out.pomset.at(q.id(y));
  out.slots.push_back(std::move(slots));
  return out;
}

TrackedGlue glue_and_track(const StSequence& w) {
  TrackedGlue out;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w.letters[i - 1].term_interface() != w.letters[i].start_interface()) throw NotCoherent(i);
  for (const auto& l : w.letters) out = extend_tracked(out, l);
  return out;
}

bool same_event_by_glue(const TrackedGlue& g, TrackPair a, TrackPair b) {
  auto event = [&](TrackPair t) {
    if (t.position >= g.slots.size() || t.slot < 1 ||
        static_cast<std::size_t>(t.slot) > g.slots[t.position].size())
      throw SlotOutOfRange("no slot " + std::to_string(t.slot) + " at position " +
                           std::to_string(t.position));
    return g.slots[t.position][static_cast<std::size_t>(t.slot - 1)];
  };
  return event(a) == event(b);
}

// ---------------------------------------------------------- pomset FO/MSO

namespace {

class PomsetFo {
 public:
  PomsetFo(const Pomset& p, const Valuation& v, bool sets) : p_(p), v_(v), sets_(sets) {}

  bool eval(const Formula& f) {
    switch (f.kind) {
      case Kind::True:
        return true;
      case Kind::False:
        return false;
      case Kind::Not:
        return !eval(*f.lhs);
      case Kind::And:
        return eval(*f.lhs) && eval(*f.rhs);
      case Kind::Or:
        return eval(*f.lhs) || eval(*f.rhs);
      case Kind::Implies:
        return !eval(*f.lhs) || eval(*f.rhs);
      case Kind::Exists:
      case Kind::Forall: {
        const bool want = f.kind == Kind::Exists;
        auto saved = v_.first_order.find(f.var) != v_.first_order.end()
                         ? std::optional<EventId>(v_.first_order[f.var])
                         : std::nullopt;
        bool result = !want;
        for (EventId e = 0; e < p_.size() && result != want; ++e) {
          v_.first_order[f.var] = e;
          if (eval(*f.lhs) == want) result = want;
        }
        restore(v_.first_order, f.var, saved);
        return result;
      }
      case Kind::ExistsSet:
      case Kind::ForallSet:
      case Kind::ExistsBounded: {
        if (!sets_) throw Error("set quantifier in a first-order formula");
        const bool want = f.kind != Kind::ForallSet;
        auto saved = v_.second_order.find(f.var) != v_.second_order.end()
                         ? std::optional<EventSet>(v_.second_order[f.var])
                         : std::nullopt;
        bool result = !want;
        const std::uint64_t full = p_.events().bits();
        // Subsets of `full` in increasing order.
        std::uint64_t s = 0;
        while (true) {
          EventSet set(s);
          if (f.kind != Kind::ExistsBounded || bounded_chain(set, f.slot1)) {
            v_.second_order[f.var] = set;
            if (eval(*f.lhs) == want) {
              result = want;
              break;
            }
          }
          if (s == full) break;
          s = (s - full) & full;
        }
        restore(v_.second_order, f.var, saved);
        return result;
      }
      case Kind::LabelAtom:
        return p_.label(var(f.var)) == f.label;
      case Kind::StartAtom:
        return p_.start().contains(var(f.var));
      case Kind::TermAtom:
        return p_.term().contains(var(f.var));
      case Kind::Prec:
        return p_.precedes(var(f.var), var(f.var2));
      case Kind::EvOrd:
        return p_.event_ordered(var(f.var), var(f.var2));
      case Kind::Eq:
        return var(f.var) == var(f.var2);
      case Kind::In: {
        if (!sets_) throw Error("membership atom in a first-order formula");
        auto it = v_.second_order.find(f.var2);
        if (it == v_.second_order.end()) throw UnboundVar(f.var2);
        return it->second.contains(var(f.var));
      }
      default:
        throw Error("operator not available over pomsets: " + print(f));
    }
  }

 private:
  template <typename T>
  static void restore(std::map<std::string, T>& m, const std::string& k,
                      const std::optional<T>& old) {
    if (old)
      m[k] = *old;
    else
      m.erase(k);
  }

  EventId var(const std::string& name) const {
    auto it = v_.first_order.find(name);
    if (it == v_.first_order.end()) throw UnboundVar(name);
    if (it->second < 0 || it->second >= p_.size()) throw NoSuchEvent(std::to_string(it->second));
    return it->second;
  }

  bool bounded_chain(EventSet s, int bound) const {
    if (s.size() > bound) return false;
    for (EventId x : s)
      for (EventId y : s)
        if (x < y && !p_.event_ordered(x, y) && !p_.event_ordered(y, x)) return false;
    return true;
  }

  const Pomset& p_;
  Valuation v_;
  bool sets_;
};

class WordFo {
 public:
  WordFo(const StSequence& w, const Valuation& v, const SameEventFn& same)
      : w_(w), v_(v), same_(same) {}

  bool eval(const Formula& f) {
    switch (f.kind) {
      case Kind::True:
        return true;
      case Kind::False:
        return false;
      case Kind::Not:
        return !eval(*f.lhs);
      case Kind::And:
        return eval(*f.lhs) && eval(*f.rhs);
      case Kind::Or:
        return eval(*f.lhs) || eval(*f.rhs);
      case Kind::Implies:
        return !eval(*f.lhs) || eval(*f.rhs);
      case Kind::Exists:
      case Kind::Forall: {
        const bool want = f.kind == Kind::Exists;
        auto it = v_.st_first_order.find(f.var);
        std::optional<std::size_t> saved;
        if (it != v_.st_first_order.end()) saved = it->second;
        bool result = !want;
        for (std::size_t i = 0; i < w_.size() && result != want; ++i) {
          v_.st_first_order[f.var] = i;
          if (eval(*f.lhs) == want) result = want;
        }
        if (saved)
          v_.st_first_order[f.var] = *saved;
        else
          v_.st_first_order.erase(f.var);
        return result;
      }
      case Kind::LetterAtom:
        return w_.letters[pos(f.var)] == f.letter;
      case Kind::Less:
        return pos(f.var) < pos(f.var2);
      case Kind::Eq:
        return pos(f.var) == pos(f.var2);
      case Kind::SameEvent: {
        const TrackPair a{pos(f.var), f.slot1}, b{pos(f.var2), f.slot2};
        if (same_) return same_(a, b);
        if (!tracked_) tracked_ = glue_and_track(w_);
        return same_event_by_glue(*tracked_, a, b);
      }
      default:
        throw Error("operator not available over ST-sequences: " + print(f));
    }
  }

 private:
  std::size_t pos(const std::string& name) const {
    auto it = v_.st_first_order.find(name);
    if (it == v_.st_first_order.end()) throw UnboundVar(name);
    if (it->second >= w_.size()) throw Error("position out of range for '" + name + "'");
    return it->second;
  }

  const StSequence& w_;
  Valuation v_;
  const SameEventFn& same_;
  std::optional<TrackedGlue> tracked_;
};

}  // namespace

bool eval_fo_pomset(const Pomset& p, const Valuation& v, const Formula& f) {
  return PomsetFo(p, v, false).eval(f);
}

bool eval_mso_pomset(const Pomset& p, const Valuation& v, const Formula& f) {
  return PomsetFo(p, v, true).eval(f);
}

bool eval_fo_st(const StSequence& w, const Valuation& v, const Formula& f,
                const SameEventFn& same_event) {
  return WordFo(w, v, same_event).eval(f);
}

// ----------------------------------------------------------- sequences

namespace {

/// Shared clauses of finite-word LTL over positions 0..n, where position n
/// is the empty suffix. `atom(f, i)` answers atoms at i < n; `next_of(i)` is
/// the successor position.
template <typename Atom>
std::vector<char> linear_values(const Formula& f, std::size_t n, Atom atom,
                                const std::vector<char>* a, const std::vector<char>* b) {
  std::vector<char> out(n + 1, 0);
  switch (f.kind) {
    case Kind::True:
      for (std::size_t i = 0; i < n; ++i) out[i] = 1;
      break;
    case Kind::False:
      break;
    case Kind::Not:
      for (std::size_t i = 0; i < n; ++i) out[i] = !(*a)[i];
      break;
    case Kind::And:
      for (std::size_t i = 0; i < n; ++i) out[i] = (*a)[i] && (*b)[i];
      break;
    case Kind::Or:
      for (std::size_t i = 0; i < n; ++i) out[i] = (*a)[i] || (*b)[i];
      break;
    case Kind::Implies:
      for (std::size_t i = 0; i < n; ++i) out[i] = !(*a)[i] || (*b)[i];
      break;
    case Kind::Next:
      for (std::size_t i = 0; i < n; ++i) out[i] = (*a)[i + 1];
      break;
    case Kind::Until:
      // ∃j ≥ i. ψ at j and φ on [i, j).
      for (std::size_t i = n; i-- > 0;) out[i] = (*b)[i] || ((*a)[i] && out[i + 1]);
      break;
    case Kind::Eventually:
      for (std::size_t i = n; i-- > 0;) out[i] = (*a)[i] || out[i + 1];
      break;
    case Kind::Globally:
      for (std::size_t i = n; i-- > 0;) out[i] = (*a)[i] && (i + 1 == n || out[i + 1]);
      break;
    default:
      for (std::size_t i = 0; i < n; ++i) out[i] = atom(f, i);
      break;
  }
  return out;
}

}  // namespace

SequenceEvaluator::SequenceEvaluator(const ConclistSequence& s) : n_(s.size()), conclists_(&s) {}
SequenceEvaluator::SequenceEvaluator(const StSequence& w) : n_(w.size()), letters_(&w) {}

bool SequenceEvaluator::atom(const Formula& f, std::size_t i) const {
  if (f.kind == Kind::ConclistAtom && conclists_) return conclists_->conclists[i] == f.conclist;
  if (f.kind == Kind::LetterAtom && letters_ && f.var.empty())
    return letters_->letters[i] == f.letter;
  throw Error("atom not available over this sequence: " + print(f));
}

const std::vector<char>& SequenceEvaluator::values(const Formula& f) {
  if (auto it = memo_.find(&f); it != memo_.end()) return it->second;
  const std::vector<char>* a = f.lhs ? &values(*f.lhs) : nullptr;
  const std::vector<char>* b = f.rhs ? &values(*f.rhs) : nullptr;
  auto v =
      linear_values(f, n_, [this](const Formula& g, std::size_t i) { return atom(g, i); }, a, b);
  return memo_.emplace(&f, std::move(v)).first->second;
}

RunEvaluator::RunEvaluator(const Pomset& p, const Concstate& from) : host_(&p) {
  if (&from.host() != &p) throw HostMismatch();
  run_ = run_from(from);
}

const std::vector<char>& RunEvaluator::values(const Formula& f) {
  if (auto it = memo_.find(&f); it != memo_.end()) return it->second;
  const std::vector<char>* a = f.lhs ? &values(*f.lhs) : nullptr;
  const std::vector<char>* b = f.rhs ? &values(*f.rhs) : nullptr;
  // The run is c, next(c), next(next(c)), ... so position i + 1 is the
  // state reached by one Next from position i, and Next from the final
  // state lands on the trailing "no state" entry.
  auto v = linear_values(
      f, run_.size(),
      [this](const Formula& g, std::size_t i) {
        if (g.kind != Kind::ConclistAtom) throw Error("atom not available in SPTL: " + print(g));
        return run_[i].active_conclist() == g.conclist;
      },
      a, b);
  return memo_.emplace(&f, std::move(v)).first->second;
}

bool eval_ltl_st(const StSequence& w, const Formula& f) { return SequenceEvaluator(w).eval(f); }

bool eval_sptl_seq(const ConclistSequence& s, const Formula& f) {
  return SequenceEvaluator(s).eval(f);
}

bool eval_sptl_concstate(const Pomset& p, const Concstate& c, const Formula& f) {
  return RunEvaluator(p, c).eval(f);
}

// ------------------------------------------------------- alternate Until

namespace {

class AltUntil {
 public:
  AltUntil(const Pomset& p, UntilReading reading) : p_(p), reading_(reading) {
    if (reading_ == UntilReading::Literal) all_ = enumerate_concstates(p);
  }

  bool eval(const Formula& f, const Concstate& c) {
    const Key key{&f, c.terminated().bits(), c.active().bits()};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const bool r = compute(f, c);
    memo_.emplace(key, r);
    return r;
  }

 private:
  struct Key {
    const Formula* f;
    std::uint64_t t, u;
    auto operator<=>(const Key&) const = default;
  };

  // X φ: false on the final state.
  bool next_holds(const Formula& f, const Concstate& c) {
    if (std::holds_alternative<Final>(classify(c))) return false;
    return eval(f, next(c));
  }

  bool next_either(const Formula& a, const Formula& b, const Concstate& c) {
    if (std::holds_alternative<Final>(classify(c))) return false;
    const Concstate n = next(c);
    return eval(a, n) || eval(b, n);
  }

  bool compute(const Formula& f, const Concstate& c) {
    switch (f.kind) {
      case Kind::True:
        return true;
      case Kind::False:
        return false;
      case Kind::ConclistAtom:
        return c.active_conclist() == f.conclist;
      case Kind::Not:
        return !eval(*f.lhs, c);
      case Kind::And:
        return eval(*f.lhs, c) && eval(*f.rhs, c);
      case Kind::Or:
        return eval(*f.lhs, c) || eval(*f.rhs, c);
      case Kind::Implies:
        return !eval(*f.lhs, c) || eval(*f.rhs, c);
      case Kind::Next:
        return next_holds(*f.lhs, c);
      case Kind::Eventually:
        return until(*mk::truth(), *f.lhs, c);
      case Kind::Globally: {
        auto neg = mk::neg(f.lhs);
        keep_.push_back(neg);
        return !until(*mk::truth(), *neg, c);
      }
      case Kind::Until:
        return until(*f.lhs, *f.rhs, c);
      default:
        throw Error("operator not available in SPTL: " + print(f));
    }
  }

  bool until(const Formula& phi, const Formula& psi, const Concstate& c) {
    if (eval(psi, c)) return true;
    if (!eval(phi, c)) return false;
    std::vector<Concstate> range = reading_ == UntilReading::Run ? run_from(c) : all_;
    for (const Concstate& target : range) {
      if (!precedes(c, target) || !next_holds(psi, target)) continue;
      bool ok = true;
      for (const Concstate& mid : range) {
        if (!precedes(c, mid) || !precedes(mid, target)) continue;
        if (!next_either(phi, psi, mid)) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    return false;
  }

  const Pomset& p_;
  UntilReading reading_;
  std::vector<Concstate> all_;
  std::map<Key, bool> memo_;
  std::vector<FormulaPtr> keep_;
};

}  // namespace

bool eval_sptl_until_alt(const Pomset& p, const Concstate& c, const Formula& f,
                         UntilReading reading) {
  if (&c.host() != &p) throw HostMismatch();
  return AltUntil(p, reading).eval(f, c);
}

// ---------------------------------------------------------------- EPTL

namespace {

class Eptl {
 public:
  explicit Eptl(const Pomset& p) : p_(p) {
    const int n = p.size();
    hasse_.resize(static_cast<std::size_t>(n));
    ord_next_.resize(static_cast<std::size_t>(n));
    ord_prev_.resize(static_cast<std::size_t>(n));
    for (EventId x = 0; x < n; ++x) {
      for (EventId y : p.successors(x)) {
        bool direct = true;
        for (EventId z : p.successors(x))
          if (p.precedes(z, y)) direct = false;
        if (direct) hasse_[x].insert(y);
      }
      for (EventId y : p.event_order_after(x)) {
        bool direct = true;
        for (EventId z : p.event_order_after(x))
          if (p.event_ordered(z, y)) direct = false;
        if (direct) ord_next_[x].insert(y);
      }
      for (EventId y : p.event_order_before(x)) {
        bool direct = true;
        for (EventId z : p.event_order_before(x))
          if (p.event_ordered(y, z)) direct = false;
        if (direct) ord_prev_[x].insert(y);
      }
    }
  }

  const std::vector<char>& values(const Formula& f) {
    if (auto it = memo_.find(&f); it != memo_.end()) return it->second;
    const int n = p_.size();
    std::vector<char> out(static_cast<std::size_t>(n), 0);
    const std::vector<char>* a = f.lhs ? &values(*f.lhs) : nullptr;
    const std::vector<char>* b = f.rhs ? &values(*f.rhs) : nullptr;
    auto any = [&](EventSet s) {
      for (EventId y : s)
        if ((*a)[y]) return true;
      return false;
    };
    for (EventId x = 0; x < n; ++x) {
      bool r = false;
      switch (f.kind) {
        case Kind::True:
          r = true;
          break;
        case Kind::False:
          r = false;
          break;
        case Kind::LabelAtom:
          r = p_.label(x) == f.label;
          break;
        case Kind::StartAtom:
          r = p_.start().contains(x);
          break;
        case Kind::TermAtom:
          r = p_.term().contains(x);
          break;
        case Kind::Not:
          r = !(*a)[x];
          break;
        case Kind::And:
          r = (*a)[x] && (*b)[x];
          break;
        case Kind::Or:
          r = (*a)[x] || (*b)[x];
          break;
        case Kind::Implies:
          r = !(*a)[x] || (*b)[x];
          break;
        case Kind::ExistsNext:
          r = any(hasse_[x]);
          break;
        case Kind::EvOrdNext:
          r = any(ord_next_[x]);
          break;
        case Kind::EvOrdPrev:
          r = any(ord_prev_[x]);
          break;
        case Kind::Until:
          r = until(x, [&](EventId z) { return (*a)[z] != 0; }, *b);
          break;
        case Kind::Eventually:
          r = until(x, [](EventId) { return true; }, *a);
          break;
        case Kind::Globally:
          r = !until(x, [](EventId) { return true; }, negate(*a));
          break;
        default:
          throw Error("operator not available in EPTL: " + print(f));
      }
      out[static_cast<std::size_t>(x)] = r;
    }
    return memo_.emplace(&f, std::move(out)).first->second;
  }

 private:
  static std::vector<char> negate(const std::vector<char>& v) {
    std::vector<char> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = !v[i];
    return out;
  }

  // ∃y >_P x with ψ(y) and φ(z) for all x ≤ z <_P y.
  template <typename Phi>
  bool until(EventId x, Phi phi, const std::vector<char>& psi) const {
    for (EventId y : p_.successors(x)) {
      if (!psi[y]) continue;
      bool ok = phi(x);
      for (EventId z : p_.successors(x))
        if (ok && p_.precedes(z, y) && !phi(z)) ok = false;
      if (ok) return true;
    }
    return false;
  }

  const Pomset& p_;
  std::vector<EventSet> hasse_, ord_next_, ord_prev_;
  std::unordered_map<const Formula*, std::vector<char>> memo_;
};

}  // namespace

bool eval_eptl(const Pomset& p, EventId e, const Formula& f) {
  if (e < 0 || e >= p.size()) throw NoSuchEvent(std::to_string(e));
  return Eptl(p).values(f)[static_cast<std::size_t>(e)] != 0;
}

// ---------------------------------------------------------------- CPTL

namespace {

class Cptl {
 public:
  explicit Cptl(const Pomset& p) : p_(p), states_(enumerate_concstates(p)) {
    for (std::size_t i = 0; i < states_.size(); ++i)
      index_[{states_[i].terminated().bits(), states_[i].active().bits()}] = i;
    const std::size_t n = states_.size();
    starts_.resize(n);
    terms_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const EventSet t = states_[i].terminated(), u = states_[i].active();
      for (EventId x : p.events() - t - u)
        if (is_valid_concstate(p, t, u | EventSet::single(x)))
          starts_[i].push_back(find(t, u | EventSet::single(x)));
      for (EventId x : u - p.term())
        if (is_valid_concstate(p, t | EventSet::single(x), u - EventSet::single(x)))
          terms_[i].push_back(find(t | EventSet::single(x), u - EventSet::single(x)));
    }
  }

  std::size_t find(EventSet t, EventSet u) const { return index_.at({t.bits(), u.bits()}); }

  const std::vector<char>& values(const Formula& f) {
    if (auto it = memo_.find(&f); it != memo_.end()) return it->second;
    const std::size_t n = states_.size();
    std::vector<char> out(n, 0);
    const std::vector<char>* a = f.lhs ? &values(*f.lhs) : nullptr;
    const std::vector<char>* b = f.rhs ? &values(*f.rhs) : nullptr;
    auto any = [&](const std::vector<std::size_t>& succ) {
      for (std::size_t j : succ)
        if ((*a)[j]) return true;
      return false;
    };
    for (std::size_t i = 0; i < n; ++i) {
      bool r = false;
      switch (f.kind) {
        case Kind::True:
          r = true;
          break;
        case Kind::False:
          r = false;
          break;
        case Kind::ConclistAtom:
          r = states_[i].active_conclist() == f.conclist;
          break;
        case Kind::Not:
          r = !(*a)[i];
          break;
        case Kind::And:
          r = (*a)[i] && (*b)[i];
          break;
        case Kind::Or:
          r = (*a)[i] || (*b)[i];
          break;
        case Kind::Implies:
          r = !(*a)[i] || (*b)[i];
          break;
        case Kind::NextStart:
          r = any(starts_[i]);
          break;
        case Kind::NextTerm:
          r = any(terms_[i]);
          break;
        case Kind::Until:
          r = until(i, a, *b);
          break;
        case Kind::Eventually:
          r = until(i, nullptr, *a);
          break;
        case Kind::Globally: {
          std::vector<char> neg(a->size());
          for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = !(*a)[j];
          r = !until(i, nullptr, neg);
          break;
        }
        default:
          throw Error("operator not available in CPTL: " + print(f));
      }
      out[i] = r;
    }
    return memo_.emplace(&f, std::move(out)).first->second;
  }

 private:
  // ∃ s' ⪰ s with ψ(s'), and φ(s'') for all s ⪯ s'' ≺ s'. A null φ is true.
  bool until(std::size_t s, const std::vector<char>* phi, const std::vector<char>& psi) const {
    for (std::size_t t = 0; t < states_.size(); ++t) {
      if (!psi[t] || !precedes(states_[s], states_[t])) continue;
      bool ok = true;
      if (phi) {
        for (std::size_t m = 0; m < states_.size() && ok; ++m)
          if (!(*phi)[m] && precedes(states_[s], states_[m]) &&
              strictly_precedes(states_[m], states_[t]))
            ok = false;
      }
      if (ok) return true;
    }
    return false;
  }

  const Pomset& p_;
  std::vector<Concstate> states_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> index_;
  std::vector<std::vector<std::size_t>> starts_, terms_;
  std::unordered_map<const Formula*, std::vector<char>> memo_;
};

}  // namespace

bool eval_cptl(const Pomset& p, const Concstate& c, const Formula& f) {
  if (&c.host() != &p) throw HostMismatch();
  if (!is_valid_concstate(p, c.terminated(), c.active()))
    throw InvalidConcstate("not a concstate: " + to_string(c));
  Cptl m(p);
  return m.values(f)[m.find(c.terminated(), c.active())] != 0;
}

}  // namespace pomlog
