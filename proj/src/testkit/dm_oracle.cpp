#include "fpred/testkit/dm_oracle.hpp"

#include <deque>
#include <numeric>

namespace fpred::testkit {

namespace {

std::vector<std::size_t> to_counts(const KindBag& bag, std::size_t width) {
  std::vector<std::size_t> counts(width, 0);
  for (const auto& [k, m] : bag.entries()) counts[k] = m;
  return counts;
}

std::size_t total(const std::vector<std::size_t>& counts) {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

// Calls f on every multiplicity vector over kinds [0, limit) with at most
// `room` elements, extending `scratch` in place.
template <class F>
void for_each_addition(std::vector<std::size_t>& scratch, std::size_t kind, std::size_t limit,
                       std::size_t room, F&& f) {
  if (kind == limit) {
    f(scratch);
    return;
  }
  const std::size_t saved = scratch[kind];
  for (std::size_t add = 0; add <= room; ++add) {
    scratch[kind] = saved + add;
    for_each_addition(scratch, kind + 1, limit, room - add, f);
  }
  scratch[kind] = saved;
}

}  // namespace

const std::set<DmOracle::Counts>& DmOracle::reachable(const KindBag& b, std::size_t cap) {
  std::size_t width = 1;
  for (const auto& [k, m] : b.entries()) width = std::max<std::size_t>(width, k + 1);
  const Counts start = to_counts(b, width);
  const auto key = std::make_pair(start, cap);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  std::set<Counts> seen;
  std::deque<Counts> queue{start};
  while (!queue.empty()) {
    Counts cur = std::move(queue.front());
    queue.pop_front();
    const std::size_t size = total(cur);
    for (std::size_t x = 0; x < width; ++x) {
      if (cur[x] == 0) continue;
      Counts next = cur;
      --next[x];
      for_each_addition(next, 0, x, cap - (size - 1), [&](const Counts& c) {
        if (seen.insert(c).second) queue.push_back(c);
      });
    }
  }
  return cache_.emplace(key, std::move(seen)).first->second;
}

bool DmOracle::less(const KindBag& a, const KindBag& b) {
  std::size_t width = 1;
  for (const auto& [k, m] : b.entries()) width = std::max<std::size_t>(width, k + 1);
  // Nothing above max(B) is ever added.
  for (const auto& [k, m] : a.entries()) {
    if (k >= width) return false;
  }
  return reachable(b, a.size() + b.size()).contains(to_counts(a, width));
}

std::vector<KindBag> enumerate_bags(std::size_t max_elems, Kind max_kind) {
  std::vector<KindBag> out;
  std::vector<std::size_t> counts(max_kind + 1, 0);
  for_each_addition(counts, 0, counts.size(), max_elems, [&](const std::vector<std::size_t>& c) {
    KindBag bag;
    for (Kind k = 0; k < c.size(); ++k) bag.insert(k, c[k]);
    out.push_back(std::move(bag));
  });
  return out;
}

}  // namespace fpred::testkit
