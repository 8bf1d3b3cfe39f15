#include "pomlog/concstate.hpp"

#include <algorithm>
#include <functional>

#include "run_detail.hpp"

namespace pomlog {

bool is_valid_concstate(const Pomset& p, EventSet t, EventSet u) {
  const EventSet all = p.events();
  if (!t.subset_of(all - p.term()) || !u.subset_of(all) || t.intersects(u)) return false;
  for (EventId x : u)
    if ((p.successors(x) & u).size() > 0) return false;
  for (EventId x : t)
    if (!p.predecessors(x).subset_of(t)) return false;
  const EventSet tu = t | u;
  for (EventId x : tu)
    if (!p.predecessors(x).subset_of(tu)) return false;
  return true;
}

Concstate make_concstate(const Pomset& p, EventSet t, EventSet u) {
  if (!is_valid_concstate(p, t, u))
    throw InvalidConcstate("not a concstate: " + to_string(Concstate(p, t, u)));
  return Concstate(p, t, u);
}

Concstate initial(const Pomset& p) { return Concstate(p, EventSet(), p.start()); }

bool is_final(const Concstate& c) {
  const Pomset& p = c.host();
  return c.terminated() == p.events() - p.term() && c.active() == p.term();
}

CaseSets case_sets(const Concstate& c) {
  return {detail::terminable(c.host(), c.terminated(), c.active()),
          detail::startable(c.host(), c.terminated(), c.active())};
}

StepCase classify(const Concstate& c) {
  if (!is_valid_concstate(c.host(), c.terminated(), c.active()))
    throw InvalidConcstate("not a concstate: " + to_string(c));
  CaseSets s = case_sets(c);
  if (!s.terminable.empty()) return TerminateCase{s.terminable};
  if (!s.startable.empty()) return StartCase{s.startable};
  return Final{};
}

Concstate next(const Concstate& c) {
  StepCase step = classify(c);
  if (auto* t = std::get_if<TerminateCase>(&step))
    return Concstate(c.host(), c.terminated() | t->events, c.active() - t->events);
  if (auto* s = std::get_if<StartCase>(&step))
    return Concstate(c.host(), c.terminated(), c.active() | s->events);
  throw FinalState();
}

std::vector<Concstate> run_from(const Concstate& c) {
  std::vector<Concstate> out{c};
  while (!std::holds_alternative<Final>(classify(out.back()))) out.push_back(next(out.back()));
  return out;
}

bool precedes(const Concstate& a, const Concstate& b) {
  if (&a.host() != &b.host()) throw HostMismatch();
  return a.terminated().subset_of(b.terminated()) &&
         (a.terminated() | a.active()).subset_of(b.terminated() | b.active());
}

bool strictly_precedes(const Concstate& a, const Concstate& b) {
  return precedes(a, b) && !(a == b);
}

std::vector<Concstate> enumerate_concstates(const Pomset& p) {
  // T runs over down-sets of P∖T_P; U over subsets of the minimal idle events.
  std::vector<EventSet> downsets;
  std::vector<EventId> order(static_cast<std::size_t>(p.size()));
  for (EventId e = 0; e < p.size(); ++e) order[e] = e;
  std::sort(order.begin(), order.end(), [&](EventId x, EventId y) {
    return p.predecessors(x).size() < p.predecessors(y).size();
  });
  std::function<void(std::size_t, EventSet)> go = [&](std::size_t i, EventSet t) {
    if (i == order.size()) {
      downsets.push_back(t);
      return;
    }
    EventId x = order[i];
    go(i + 1, t);
    if (!p.term().contains(x) && p.predecessors(x).subset_of(t)) {
      t.insert(x);
      go(i + 1, t);
    }
  };
  go(0, EventSet());
  std::vector<std::pair<EventSet, EventSet>> pairs;
  for (EventSet t : downsets) {
    EventSet ready = detail::startable(p, t, EventSet());
    // Enumerate submasks of `ready`.
    std::uint64_t full = ready.bits();
    for (std::uint64_t sub = full;; sub = (sub - 1) & full) {
      pairs.emplace_back(t, EventSet(sub));
      if (sub == 0) break;
    }
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<Concstate> out;
  out.reserve(pairs.size());
  for (auto [t, u] : pairs) out.emplace_back(p, t, u);
  return out;
}

Pomset residual(const Concstate& c) {
  const Pomset& p = c.host();
  std::vector<EventId> keep;
  std::vector<EventId> index(static_cast<std::size_t>(p.size()), -1);
  for (EventId e : p.events() - c.terminated()) {
    index[e] = static_cast<EventId>(keep.size());
    keep.push_back(e);
  }
  const int n = static_cast<int>(keep.size());
  std::vector<std::string> ids;
  std::vector<Label> labels;
  std::vector<EventSet> succ(n), after(n);
  EventSet start, term;
  for (int i = 0; i < n; ++i) {
    EventId e = keep[i];
    ids.push_back(p.id(e));
    labels.push_back(p.label(e));
    for (EventId f : p.successors(e))
      if (index[f] >= 0) succ[i].insert(index[f]);
    for (EventId f : p.event_order_after(e))
      if (index[f] >= 0) after[i].insert(index[f]);
    if (c.active().contains(e)) start.insert(i);
    if (p.term().contains(e)) term.insert(i);
  }
  return Pomset::build(std::move(ids), std::move(labels), std::move(succ), std::move(after), start,
                       term);
}

std::string to_string(const Concstate& c) {
  const Pomset& p = c.host();
  std::string out = "(T={";
  bool first = true;
  for (EventId e : c.terminated()) {
    if (!first) out += ',';
    out += p.id(e);
    first = false;
  }
  out += "}; U=[";
  first = true;
  for (EventId e : p.in_event_order(c.active())) {
    if (!first) out += ' ';
    out += p.id(e);
    first = false;
  }
  return out + "])";
}

}  // namespace pomlog
