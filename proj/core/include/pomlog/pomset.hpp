#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pomlog/error.hpp"
#include "pomlog/event_set.hpp"
#include "pomlog/label.hpp"

namespace pomlog {

/// List of labels read top to bottom in event order; a discrete pomset
/// without interfaces.
struct Conclist {
  std::vector<Label> items;

  std::size_t size() const noexcept { return items.size(); }
  bool empty() const noexcept { return items.empty(); }
  friend bool operator==(const Conclist&, const Conclist&) = default;
  friend auto operator<=>(const Conclist& a, const Conclist& b) {
    return std::lexicographical_compare_three_way(a.items.begin(), a.items.end(), b.items.begin(),
                                                  b.items.end());
  }
};

/// Unvalidated pomset description as found in the JSON format. Relations are
/// given by generators and refer to events by id.
struct RawPomset {
  struct Event {
    std::string id;
    std::string label;
  };
  std::vector<Event> events;
  std::vector<std::pair<std::string, std::string>> precedence;
  std::vector<std::pair<std::string, std::string>> event_order;
  std::vector<std::string> start;
  std::vector<std::string> term;
};

/// Interval pomset with interfaces. Immutable once built; every instance
/// satisfies the validation invariants.
///
/// Precedence is stored transitively closed. The event order is stored as the
/// transitive closure of its generators restricted to concurrent pairs, which
/// is the only part of it that carries information.
class Pomset {
 public:
  Pomset() = default;

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  bool empty() const noexcept { return labels_.empty(); }
  EventSet events() const noexcept { return EventSet::all(size()); }

  const std::string& id(EventId e) const { return ids_[e]; }
  Label label(EventId e) const { return labels_[e]; }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  const std::vector<Label>& labels() const noexcept { return labels_; }
  std::optional<EventId> find(std::string_view id) const;
  /// Like find but throws NoSuchEvent.
  EventId at(std::string_view id) const;

  /// x ≺ y.
  bool precedes(EventId x, EventId y) const { return succ_[x].contains(y); }
  /// x ⇝ y (only ever true for concurrent events).
  bool event_ordered(EventId x, EventId y) const { return after_[x].contains(y); }
  bool concurrent(EventId x, EventId y) const {
    return x != y && !precedes(x, y) && !precedes(y, x);
  }
  EventSet successors(EventId x) const { return succ_[x]; }
  EventSet predecessors(EventId x) const { return pred_[x]; }
  /// {y : x ⇝ y}
  EventSet event_order_after(EventId x) const { return after_[x]; }
  /// {y : y ⇝ x}
  EventSet event_order_before(EventId x) const { return before_[x]; }
  /// Events ≺-incomparable to x, excluding x.
  EventSet incomparable(EventId x) const {
    return events() - succ_[x] - pred_[x] - EventSet::single(x);
  }

  EventSet start() const noexcept { return start_; }
  EventSet term() const noexcept { return term_; }
  EventSet minimal() const;
  EventSet maximal() const;

  bool autoconcurrency_free() const noexcept { return autoconcurrency_free_; }

  /// Members of an antichain sorted by event order.
  std::vector<EventId> in_event_order(EventSet antichain) const;
  Conclist conclist(EventSet antichain) const;

  /// Description with Hasse generators for precedence and all event-order
  /// pairs; validate(to_raw()) reproduces the pomset.
  RawPomset to_raw() const;

  /// Builds and validates from index-based generator relations.
  /// succ_gen[x] / after_gen[x] hold the generators leaving x.
  static Pomset build(std::vector<std::string> ids, std::vector<Label> labels,
                      std::vector<EventSet> succ_gen, std::vector<EventSet> after_gen,
                      EventSet start, EventSet term);

 private:
  std::vector<std::string> ids_;
  std::vector<Label> labels_;
  std::vector<EventSet> succ_, pred_, after_, before_;
  EventSet start_, term_;
  bool autoconcurrency_free_ = true;
};

/// Checks a raw description and returns the validated pomset.
/// Throws CycleError, IntervalError, TotalityError, InterfaceError, or
/// ValidationError for malformed references.
Pomset validate(const RawPomset& raw);

/// Size of a maximum ≺-antichain.
int dimension(const Pomset& p);

/// Identification of T_p with S_q as (event of p, event of q) pairs.
using Pairing = std::vector<std::pair<EventId, EventId>>;

/// Pairs T_p and S_q by event-order position. Throws InterfaceMismatch when
/// the two interfaces differ as conclists.
Pairing positional_pairing(const Pomset& p, const Pomset& q);

/// P * Q. Throws InterfaceMismatch, or AmbiguousIdentification when the
/// interface repeats a label and no pairing is supplied.
Pomset glue(const Pomset& p, const Pomset& q);
Pomset glue(const Pomset& p, const Pomset& q, const Pairing& pairing);

/// Interval endpoints realizing precedence: x ≺ y iff hi(x) < lo(y).
struct IntervalRep {
  using Rational = boost::rational<long long>;
  std::vector<Rational> lo, hi;  // indexed by EventId
};

IntervalRep interval_rep(const Pomset& p);

/// Precedence rebuilt from an interval assignment, as successor sets.
std::vector<EventSet> precedence_from_intervals(const IntervalRep& rep);

/// Equality of sparse ST decompositions.
bool isomorphic(const Pomset& p, const Pomset& q);

}  // namespace pomlog
