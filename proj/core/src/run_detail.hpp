#pragma once

#include "pomlog/pomset.hpp"

namespace pomlog::detail {

/// Active non-interface events all of whose incomparable events are active
/// or terminated.
inline EventSet terminable(const Pomset& p, EventSet t, EventSet u) {
  EventSet out;
  const EventSet tu = t | u;
  for (EventId x : u - p.term())
    if (p.incomparable(x).subset_of(tu)) out.insert(x);
  return out;
}

/// Idle events all of whose predecessors are terminated.
inline EventSet startable(const Pomset& p, EventSet t, EventSet u) {
  EventSet out;
  for (EventId x : p.events() - t - u)
    if (p.predecessors(x).subset_of(t)) out.insert(x);
  return out;
}

}  // namespace pomlog::detail
