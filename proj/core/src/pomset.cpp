#include "pomlog/pomset.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "pomlog/decomposition.hpp"

namespace pomlog {

// ------------------------------------------------------------------ errors

CycleError::CycleError(std::string relation, std::string event)
    : ValidationError("cycle in " + relation + " through event '" + event + "'"),
      relation_(std::move(relation)),
      event_(std::move(event)) {}

TotalityError::TotalityError(std::string x, std::string y)
    : ValidationError("events '" + x + "' and '" + y + "' are unrelated by both orders"),
      x_(std::move(x)),
      y_(std::move(y)) {}

IntervalError::IntervalError(std::array<std::string, 4> w)
    : ValidationError("precedence is not an interval order: " + w[0] + " < " + w[1] + ", " + w[2] +
                      " < " + w[3] + " but " + w[0] + " !< " + w[3] + " and " + w[2] + " !< " +
                      w[1]),
      witness_(std::move(w)) {}

InterfaceError::InterfaceError(std::string event, bool start_side)
    : ValidationError("interface event '" + event + "' is not " +
                      (start_side ? "minimal" : "maximal")),
      event_(std::move(event)),
      start_side_(start_side) {}

NotCoherent::NotCoherent(std::size_t index)
    : Error("sequence is not coherent at letter " + std::to_string(index)), index_(index) {}

EmptyPomset::EmptyPomset() : Error("the empty pomset has no decomposition") {}

NotWellFormed::NotWellFormed(std::size_t index)
    : Error("conclist sequence is not well-formed at position " + std::to_string(index)),
      index_(index) {}

FinalState::FinalState() : Error("final concstate has no successor") {}

HostMismatch::HostMismatch() : Error("concstate belongs to a different pomset") {}

SyntaxError::SyntaxError(const std::string& message, std::size_t position)
    : Error("syntax error at " + std::to_string(position) + ": " + message), position_(position) {}

UnboundVar::UnboundVar(const std::string& var) : Error("unbound variable '" + var + "'") {}

NoSuchEvent::NoSuchEvent(const std::string& id) : Error("no event '" + id + "'") {}

// ------------------------------------------------------------------ pomset

std::optional<EventId> Pomset::find(std::string_view id) const {
  for (EventId e = 0; e < size(); ++e)
    if (ids_[e] == id) return e;
  return std::nullopt;
}

EventId Pomset::at(std::string_view id) const {
  if (auto e = find(id)) return *e;
  throw NoSuchEvent(std::string(id));
}

EventSet Pomset::minimal() const {
  EventSet out;
  for (EventId e = 0; e < size(); ++e)
    if (pred_[e].empty()) out.insert(e);
  return out;
}

EventSet Pomset::maximal() const {
  EventSet out;
  for (EventId e = 0; e < size(); ++e)
    if (succ_[e].empty()) out.insert(e);
  return out;
}

std::vector<EventId> Pomset::in_event_order(EventSet antichain) const {
  std::vector<EventId> out(antichain.begin(), antichain.end());
  // Within an antichain ⇝ is total, so the rank is the number of members before.
  std::sort(out.begin(), out.end(), [&](EventId x, EventId y) {
    return (before_[x] & antichain).size() < (before_[y] & antichain).size();
  });
  return out;
}

Conclist Pomset::conclist(EventSet antichain) const {
  Conclist c;
  for (EventId e : in_event_order(antichain)) c.items.push_back(labels_[e]);
  return c;
}

RawPomset Pomset::to_raw() const {
  RawPomset raw;
  for (EventId e = 0; e < size(); ++e) raw.events.push_back({ids_[e], labels_[e].name()});
  for (EventId x = 0; x < size(); ++x) {
    EventSet indirect;
    for (EventId y : succ_[x]) indirect |= succ_[y];
    for (EventId y : succ_[x] - indirect) raw.precedence.emplace_back(ids_[x], ids_[y]);
    for (EventId y : after_[x]) raw.event_order.emplace_back(ids_[x], ids_[y]);
  }
  for (EventId e : start_) raw.start.push_back(ids_[e]);
  for (EventId e : term_) raw.term.push_back(ids_[e]);
  return raw;
}

namespace {

void close_transitively(std::vector<EventSet>& rows) {
  const int n = static_cast<int>(rows.size());
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (rows[i].contains(k)) rows[i] |= rows[k];
}

std::vector<EventSet> transpose(const std::vector<EventSet>& rows) {
  std::vector<EventSet> out(rows.size());
  for (int i = 0; i < static_cast<int>(rows.size()); ++i)
    for (EventId j : rows[i]) out[j].insert(i);
  return out;
}

}  // namespace

Pomset Pomset::build(std::vector<std::string> ids, std::vector<Label> labels,
                     std::vector<EventSet> succ_gen, std::vector<EventSet> after_gen,
                     EventSet start, EventSet term) {
  const int n = static_cast<int>(labels.size());
  if (n > kMaxEvents) throw ValidationError("more than 64 events");
  Pomset p;
  p.ids_ = std::move(ids);
  p.labels_ = std::move(labels);

  p.succ_ = std::move(succ_gen);
  close_transitively(p.succ_);
  for (EventId x = 0; x < n; ++x)
    if (p.succ_[x].contains(x)) throw CycleError("precedence", p.ids_[x]);
  p.pred_ = transpose(p.succ_);

  // 2+2 exists iff two successor sets are not nested.
  for (EventId a = 0; a < n; ++a)
    for (EventId c = a + 1; c < n; ++c) {
      EventSet bs = p.succ_[a] - p.succ_[c];
      EventSet ds = p.succ_[c] - p.succ_[a];
      if (!bs.empty() && !ds.empty())
        throw IntervalError({p.ids_[a], p.ids_[*bs.begin()], p.ids_[c], p.ids_[*ds.begin()]});
    }

  std::vector<EventSet> after = std::move(after_gen);
  close_transitively(after);
  for (EventId x = 0; x < n; ++x)
    if (after[x].contains(x)) throw CycleError("event order", p.ids_[x]);
  for (EventId x = 0; x < n; ++x) after[x] -= p.succ_[x] | p.pred_[x];
  p.after_ = std::move(after);
  p.before_ = transpose(p.after_);

  for (EventId x = 0; x < n; ++x)
    for (EventId y = x + 1; y < n; ++y)
      if (p.concurrent(x, y) && !p.after_[x].contains(y) && !p.after_[y].contains(x))
        throw TotalityError(p.ids_[x], p.ids_[y]);

  for (EventId e : start)
    if (!p.pred_[e].empty()) throw InterfaceError(p.ids_[e], true);
  for (EventId e : term)
    if (!p.succ_[e].empty()) throw InterfaceError(p.ids_[e], false);
  p.start_ = start;
  p.term_ = term;

  for (EventId x = 0; x < n && p.autoconcurrency_free_; ++x)
    for (EventId y : p.after_[x])
      if (p.labels_[x] == p.labels_[y]) {
        p.autoconcurrency_free_ = false;
        break;
      }
  return p;
}

Pomset validate(const RawPomset& raw) {
  const int n = static_cast<int>(raw.events.size());
  if (n > kMaxEvents) throw ValidationError("more than 64 events");
  std::unordered_map<std::string, EventId> index;
  std::vector<std::string> ids;
  std::vector<Label> labels;
  for (const auto& ev : raw.events) {
    if (!index.emplace(ev.id, static_cast<EventId>(ids.size())).second)
      throw ValidationError("duplicate event id '" + ev.id + "'");
    ids.push_back(ev.id);
    labels.emplace_back(ev.label);
  }
  auto lookup = [&](const std::string& id) {
    auto it = index.find(id);
    if (it == index.end()) throw ValidationError("unknown event id '" + id + "'");
    return it->second;
  };
  std::vector<EventSet> succ(n), after(n);
  for (const auto& [x, y] : raw.precedence) succ[lookup(x)].insert(lookup(y));
  for (const auto& [x, y] : raw.event_order) after[lookup(x)].insert(lookup(y));
  EventSet start, term;
  for (const auto& id : raw.start) start.insert(lookup(id));
  for (const auto& id : raw.term) term.insert(lookup(id));
  return Pomset::build(std::move(ids), std::move(labels), std::move(succ), std::move(after), start,
                       term);
}

// ---------------------------------------------------------------- dimension

int dimension(const Pomset& p) {
  // Dilworth: maximum antichain = n - maximum matching in the comparability
  // bipartite graph of the (transitive) precedence.
  const int n = p.size();
  std::vector<int> match_right(n, -1);
  std::function<bool(int, EventSet&)> augment = [&](int x, EventSet& seen) {
    for (EventId y : p.successors(x)) {
      if (seen.contains(y)) continue;
      seen.insert(y);
      if (match_right[y] < 0 || augment(match_right[y], seen)) {
        match_right[y] = x;
        return true;
      }
    }
    return false;
  };
  int matching = 0;
  for (int x = 0; x < n; ++x) {
    EventSet seen;
    if (augment(x, seen)) ++matching;
  }
  return n - matching;
}

// ------------------------------------------------------------------- gluing

Pairing positional_pairing(const Pomset& p, const Pomset& q) {
  auto tp = p.in_event_order(p.term());
  auto sq = q.in_event_order(q.start());
  if (tp.size() != sq.size()) throw InterfaceMismatch("interfaces have different sizes");
  Pairing out;
  for (std::size_t i = 0; i < tp.size(); ++i) {
    if (p.label(tp[i]) != q.label(sq[i]))
      throw InterfaceMismatch("interfaces differ at position " + std::to_string(i + 1));
    out.emplace_back(tp[i], sq[i]);
  }
  return out;
}

Pomset glue(const Pomset& p, const Pomset& q) {
  Pairing pairing = positional_pairing(p, q);
  for (std::size_t i = 0; i < pairing.size(); ++i)
    for (std::size_t j = i + 1; j < pairing.size(); ++j)
      if (p.label(pairing[i].first) == p.label(pairing[j].first))
        throw AmbiguousIdentification("interface repeats label '" +
                                      p.label(pairing[i].first).name() +
                                      "'; supply an explicit pairing");
  return glue(p, q, pairing);
}

Pomset glue(const Pomset& p, const Pomset& q, const Pairing& pairing) {
  // The pairing must be an order- and label-preserving bijection T_p -> S_q.
  EventSet left, right;
  for (auto [x, y] : pairing) {
    if (x < 0 || x >= p.size() || y < 0 || y >= q.size())
      throw InterfaceMismatch("pairing refers to a missing event");
    if (!p.term().contains(x) || !q.start().contains(y))
      throw InterfaceMismatch("pairing uses a non-interface event");
    if (p.label(x) != q.label(y)) throw InterfaceMismatch("pairing changes a label");
    left.insert(x);
    right.insert(y);
  }
  if (left != p.term() || right != q.start() ||
      static_cast<int>(pairing.size()) != p.term().size() ||
      static_cast<int>(pairing.size()) != q.start().size())
    throw InterfaceMismatch("pairing is not a bijection between the interfaces");
  for (auto [x1, y1] : pairing)
    for (auto [x2, y2] : pairing)
      if (p.event_ordered(x1, x2) != q.event_ordered(y1, y2))
        throw InterfaceMismatch("pairing does not preserve event order");

  const int np = p.size();
  std::vector<EventId> qmap(q.size(), -1);
  for (auto [x, y] : pairing) qmap[y] = x;
  std::vector<std::string> ids = p.ids();
  std::vector<Label> labels = p.labels();
  for (EventId y = 0; y < q.size(); ++y) {
    if (qmap[y] >= 0) continue;
    std::string id = q.id(y);
    while (std::find(ids.begin(), ids.end(), id) != ids.end()) id += '\'';
    qmap[y] = static_cast<EventId>(ids.size());
    ids.push_back(std::move(id));
    labels.push_back(q.label(y));
  }
  const int n = static_cast<int>(ids.size());
  if (n > kMaxEvents) throw ValidationError("more than 64 events");

  std::vector<EventSet> succ(n), after(n);
  EventSet q_new;
  for (EventId y = 0; y < q.size(); ++y)
    if (!q.start().contains(y)) q_new.insert(qmap[y]);
  for (EventId x = 0; x < np; ++x) {
    succ[x] = p.successors(x);
    after[x] = p.event_order_after(x);
    if (!p.term().contains(x)) succ[x] |= q_new;
  }
  for (EventId y = 0; y < q.size(); ++y) {
    for (EventId z : q.successors(y)) succ[qmap[y]].insert(qmap[z]);
    for (EventId z : q.event_order_after(y)) after[qmap[y]].insert(qmap[z]);
  }
  EventSet term;
  for (EventId y : q.term()) term.insert(qmap[y]);
  return Pomset::build(std::move(ids), std::move(labels), std::move(succ), std::move(after),
                       p.start(), term);
}

// ---------------------------------------------------------------- intervals

IntervalRep interval_rep(const Pomset& p) {
  IntervalRep rep;
  const int n = p.size();
  rep.lo.assign(n, IntervalRep::Rational(0));
  rep.hi.assign(n, IntervalRep::Rational(0));
  if (n == 0) return rep;
  // Walk the sparse run: letter t starts or terminates events at time t;
  // start-interface events begin at 0, terminating-interface events end after
  // the last letter.
  auto w = sparse_decompose(p);
  auto trace = sparse_run(p);
  for (EventId e = 0; e < n; ++e) {
    rep.lo[e] = 0;
    rep.hi[e] = static_cast<long long>(w.letters.size()) + 1;
  }
  for (std::size_t t = 0; t + 1 < trace.size(); ++t) {
    const auto& [t0, u0] = trace[t];
    const auto& [t1, u1] = trace[t + 1];
    for (EventId e : u1 - u0 - t0) rep.lo[e] = static_cast<long long>(t + 1);
    for (EventId e : t1 - t0) rep.hi[e] = static_cast<long long>(t + 1);
  }
  return rep;
}

std::vector<EventSet> precedence_from_intervals(const IntervalRep& rep) {
  const int n = static_cast<int>(rep.lo.size());
  std::vector<EventSet> succ(n);
  for (EventId x = 0; x < n; ++x)
    for (EventId y = 0; y < n; ++y)
      if (rep.hi[x] < rep.lo[y]) succ[x].insert(y);
  return succ;
}

}  // namespace pomlog
