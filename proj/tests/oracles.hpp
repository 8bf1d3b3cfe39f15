#pragma once

// Brute-force reference implementations used only to cross-check the
// library. Each follows the textbook definition with no shared code paths.

#include <algorithm>
#include <numeric>
#include <vector>

#include "pomlog/pomset.hpp"

namespace oracle {

/// Isomorphism by trying every bijection.
inline bool isomorphic(const pomlog::Pomset& p, const pomlog::Pomset& q) {
  const int n = p.size();
  if (n != q.size()) return false;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      ok = p.label(x) == q.label(perm[x]) && p.start().contains(x) == q.start().contains(perm[x]) &&
           p.term().contains(x) == q.term().contains(perm[x]);
      for (int y = 0; y < n && ok; ++y)
        ok = p.precedes(x, y) == q.precedes(perm[x], perm[y]) &&
             p.event_ordered(x, y) == q.event_ordered(perm[x], perm[y]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Largest antichain by subset enumeration.
inline int dimension(const pomlog::Pomset& p) {
  const int n = p.size();
  int best = 0;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    bool anti = true;
    for (int x = 0; x < n && anti; ++x)
      for (int y = 0; y < n && anti; ++y)
        if (((mask >> x) & 1U) && ((mask >> y) & 1U) && p.precedes(x, y)) anti = false;
    if (anti) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

}  // namespace oracle
