#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pomlog/pomset.hpp"

namespace pomlog {

/// Concurrency state (T, U): terminated and active events of a host pomset.
/// Holds a pointer to the host, which must outlive it.
class Concstate {
 public:
  Concstate(const Pomset& host, EventSet terminated, EventSet active)
      : host_(&host), terminated_(terminated), active_(active) {}

  const Pomset& host() const noexcept { return *host_; }
  EventSet terminated() const noexcept { return terminated_; }
  EventSet active() const noexcept { return active_; }
  Conclist active_conclist() const { return host_->conclist(active_); }

  friend bool operator==(const Concstate& a, const Concstate& b) {
    return a.host_ == b.host_ && a.terminated_ == b.terminated_ && a.active_ == b.active_;
  }

 private:
  const Pomset* host_;
  EventSet terminated_, active_;
};

bool is_valid_concstate(const Pomset& p, EventSet terminated, EventSet active);
/// Checked constructor; throws InvalidConcstate.
Concstate make_concstate(const Pomset& p, EventSet terminated, EventSet active);

/// (∅, S_P).
Concstate initial(const Pomset& p);
/// (P∖T_P, T_P).
bool is_final(const Concstate& c);

struct TerminateCase {
  EventSet events;
};
struct StartCase {
  EventSet events;
};
struct Final {};
using StepCase = std::variant<TerminateCase, StartCase, Final>;

/// Both candidate sets, before choosing a case: all terminable and all
/// startable events.
struct CaseSets {
  EventSet terminable;
  EventSet startable;
};
CaseSets case_sets(const Concstate& c);

/// Throws InvalidConcstate.
StepCase classify(const Concstate& c);
/// Applies the maximal step. Throws FinalState.
Concstate next(const Concstate& c);
/// States visited from c up to the final state, c included.
std::vector<Concstate> run_from(const Concstate& c);

/// T1 ⊆ T2 and T1∪U1 ⊆ T2∪U2. Throws HostMismatch.
bool precedes(const Concstate& a, const Concstate& b);
bool strictly_precedes(const Concstate& a, const Concstate& b);

/// Every concstate, ordered by (T, U) bitmasks.
std::vector<Concstate> enumerate_concstates(const Pomset& p);

/// P with T removed and U as its start interface.
Pomset residual(const Concstate& c);

/// "(T={a,b}; U=[c d])" with event ids.
std::string to_string(const Concstate& c);

}  // namespace pomlog
