#ifndef FPRED_TESTKIT_DM_ORACLE_HPP
#define FPRED_TESTKIT_DM_ORACLE_HPP

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "fpred/measure.hpp"

namespace fpred::testkit {

/// Decides the Dershowitz-Manna order from its definition: A < B iff A is
/// reachable from B by one or more steps, each removing one element x and
/// adding finitely many elements below x. Reachable sets are computed by
/// breadth-first search and cached per (B, size cap).
///
/// Any witness A = (B - X) + Y can be reached by replacing the elements of X
/// one at a time, so intermediate bags never need more than |A| + |B|
/// elements; the search is capped there.
class DmOracle {
 public:
  bool less(const KindBag& a, const KindBag& b);

 private:
  using Counts = std::vector<std::size_t>;  // multiplicity per kind, 0..max
  const std::set<Counts>& reachable(const KindBag& b, std::size_t cap);
  std::map<std::pair<Counts, std::size_t>, std::set<Counts>> cache_;
};

/// Every bag with at most `max_elems` elements drawn from [0, max_kind].
std::vector<KindBag> enumerate_bags(std::size_t max_elems, Kind max_kind);

}  // namespace fpred::testkit

#endif  // FPRED_TESTKIT_DM_ORACLE_HPP
