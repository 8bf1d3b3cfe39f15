#include "pomlog/fo_checker.hpp"

#include <algorithm>
#include <set>

#include "pomlog/error.hpp"

namespace pomlog {

namespace {

constexpr std::size_t kMaxMemoVars = 10;

}  // namespace

FoChecker::FoChecker(const FormulaPtr& f) : formula_(f) {
  std::map<const Formula*, int> seen;
  root_ = compile(*f, seen);
  val_.assign(slot_names_.size(), -1);
}

int FoChecker::compile(const Formula& f, std::map<const Formula*, int>& seen) {
  if (auto it = seen.find(&f); it != seen.end()) return it->second;
  const auto slot = [this](const std::string& name) {
    auto [it, fresh] = slot_of_.emplace(name, static_cast<int>(slot_names_.size()));
    if (fresh) slot_names_.push_back(name);
    return it->second;
  };
  Node node;
  node.kind = f.kind;
  switch (f.kind) {
    case Kind::True:
    case Kind::False:
      break;
    case Kind::Not:
      node.lhs = compile(*f.lhs, seen);
      break;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
      node.lhs = compile(*f.lhs, seen);
      node.rhs = compile(*f.rhs, seen);
      break;
    case Kind::Exists:
    case Kind::Forall:
      node.x = slot(f.var);
      node.lhs = compile(*f.lhs, seen);
      break;
    case Kind::LabelAtom:
      node.label = f.label;
      [[fallthrough]];
    case Kind::StartAtom:
    case Kind::TermAtom:
      if (f.var.empty()) throw Error("event atom without a variable");
      node.x = slot(f.var);
      break;
    case Kind::Prec:
    case Kind::EvOrd:
    case Kind::Eq:
    case Kind::Less:
      node.x = slot(f.var);
      node.y = slot(f.var2);
      break;
    case Kind::SameEvent:
      node.x = slot(f.var);
      node.y = slot(f.var2);
      node.i = f.slot1;
      node.j = f.slot2;
      break;
    case Kind::LetterAtom: {
      if (f.var.empty()) throw Error("letter atom without a variable");
      node.x = slot(f.var);
      auto it = std::find(letters_.begin(), letters_.end(), f.letter);
      node.letter = static_cast<int>(it - letters_.begin());
      if (it == letters_.end()) letters_.push_back(f.letter);
      break;
    }
    default:
      throw Error("not a first-order formula");
  }
  // Free variables by slot.
  std::set<int> free;
  if (node.x >= 0 && f.kind != Kind::Exists && f.kind != Kind::Forall) free.insert(node.x);
  if (node.y >= 0) free.insert(node.y);
  for (int c : {node.lhs, node.rhs})
    if (c >= 0)
      free.insert(nodes_[static_cast<std::size_t>(c)].free.begin(),
                  nodes_[static_cast<std::size_t>(c)].free.end());
  if (f.kind == Kind::Exists || f.kind == Kind::Forall) free.erase(node.x);
  node.free.assign(free.begin(), free.end());
  node.memo =
      (f.kind == Kind::Exists || f.kind == Kind::Forall) && node.free.size() <= kMaxMemoVars;
  nodes_.push_back(std::move(node));
  const int id = static_cast<int>(nodes_.size()) - 1;
  seen.emplace(&f, id);
  return id;
}

void FoChecker::bind(const Valuation& v, bool words) {
  val_.assign(slot_names_.size(), -1);
  const auto set = [&](const std::string& name, int value) {
    if (auto it = slot_of_.find(name); it != slot_of_.end())
      val_[static_cast<std::size_t>(it->second)] = value;
  };
  if (words) {
    for (const auto& [name, pos] : v.st_first_order) set(name, static_cast<int>(pos));
  } else {
    for (const auto& [name, e] : v.first_order) set(name, static_cast<int>(e));
  }
  memo_.assign(nodes_.size(), {});
}

bool FoChecker::eval(const Pomset& p, const Valuation& v) {
  pomset_ = &p;
  word_ = nullptr;
  domain_ = p.size();
  bind(v, false);
  return ev(root_);
}

bool FoChecker::eval(const StSequence& w, const Valuation& v, const SameEventFn& same_event) {
  pomset_ = nullptr;
  word_ = &w;
  same_ = same_event ? &same_event : nullptr;
  tracked_.reset();
  domain_ = static_cast<int>(w.size());
  word_letter_.assign(w.size(), -1);
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    auto it = std::find(letters_.begin(), letters_.end(), w.letters[pos]);
    if (it != letters_.end()) word_letter_[pos] = static_cast<int>(it - letters_.begin());
  }
  bind(v, true);
  return ev(root_);
}

int FoChecker::value(int slot) const {
  const int v = val_[static_cast<std::size_t>(slot)];
  if (v < 0) throw UnboundVar(slot_names_[static_cast<std::size_t>(slot)]);
  return v;
}

bool FoChecker::atom(const Node& n) const {
  if (pomset_) {
    const Pomset& p = *pomset_;
    switch (n.kind) {
      case Kind::LabelAtom:
        return p.label(value(n.x)) == n.label;
      case Kind::StartAtom:
        return p.start().contains(value(n.x));
      case Kind::TermAtom:
        return p.term().contains(value(n.x));
      case Kind::Prec:
        return p.precedes(value(n.x), value(n.y));
      case Kind::EvOrd:
        return p.event_ordered(value(n.x), value(n.y));
      case Kind::Eq:
        return value(n.x) == value(n.y);
      default:
        throw Error("word atom evaluated on a pomset");
    }
  }
  switch (n.kind) {
    case Kind::LetterAtom:
      return word_letter_[static_cast<std::size_t>(value(n.x))] == n.letter;
    case Kind::Less:
      return value(n.x) < value(n.y);
    case Kind::Eq:
      return value(n.x) == value(n.y);
    case Kind::SameEvent: {
      const TrackPair a{static_cast<std::size_t>(value(n.x)), n.i};
      const TrackPair b{static_cast<std::size_t>(value(n.y)), n.j};
      if (same_) return (*same_)(a, b);
      auto* self = const_cast<FoChecker*>(this);
      if (!self->tracked_) self->tracked_ = std::make_unique<TrackedGlue>(glue_and_track(*word_));
      return same_event_by_glue(*tracked_, a, b);
    }
    default:
      throw Error("pomset atom evaluated on a word");
  }
}

bool FoChecker::ev(int id) {
  const Node& n = nodes_[static_cast<std::size_t>(id)];
  switch (n.kind) {
    case Kind::True:
      return true;
    case Kind::False:
      return false;
    case Kind::Not:
      return !ev(n.lhs);
    case Kind::And:
      return ev(n.lhs) && ev(n.rhs);
    case Kind::Or:
      return ev(n.lhs) || ev(n.rhs);
    case Kind::Implies:
      return !ev(n.lhs) || ev(n.rhs);
    case Kind::Exists:
    case Kind::Forall: {
      std::uint64_t key = 0;
      auto& memo = memo_[static_cast<std::size_t>(id)];
      if (n.memo) {
        for (int s : n.free) key = (key << 6) | static_cast<std::uint64_t>(value(s));
        if (auto it = memo.find(key); it != memo.end()) return it->second;
      }
      const bool want = n.kind == Kind::Exists;
      const int saved = val_[static_cast<std::size_t>(n.x)];
      bool result = !want;
      for (int e = 0; e < domain_; ++e) {
        val_[static_cast<std::size_t>(n.x)] = e;
        if (ev(n.lhs) == want) {
          result = want;
          break;
        }
      }
      val_[static_cast<std::size_t>(n.x)] = saved;
      if (n.memo) memo_[static_cast<std::size_t>(id)].emplace(key, result);
      return result;
    }
    default:
      return atom(n);
  }
}

}  // namespace pomlog
