#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "nckit/partitions.hpp"

namespace nckit {

/// One element of NC(n) with the data the series formulas need: its blocks,
/// its Kreweras complement and whether it is << 1_n.
struct NcEntry {
  Partition partition;
  std::vector<Block> blocks;
  Partition kreweras;
  std::vector<Block> kreweras_blocks;
  bool below_top_ll = false; // 1 and n in the same block
};

namespace detail {

template <typename Build>
const std::vector<NcEntry>& memoized_table(std::map<int, std::unique_ptr<const std::vector<NcEntry>>>& cache,
                                           std::mutex& mu, int n, Build build) {
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  // built outside the lock; a racing builder produces an identical table
  auto table = std::make_unique<const std::vector<NcEntry>>(build(n));
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.try_emplace(n, std::move(table));
  return *it->second;
}

inline NcEntry make_entry(Partition p) {
  NcEntry e;
  e.blocks = p.blocks();
  e.kreweras = kreweras(p);
  e.kreweras_blocks = e.kreweras.blocks();
  e.below_top_ll = p.block_of(1) == p.block_of(p.size());
  e.partition = std::move(p);
  return e;
}

} // namespace detail

/// NC(n) in enumeration order, memoized for the process lifetime.
inline const std::vector<NcEntry>& nc_table(int n) {
  static std::map<int, std::unique_ptr<const std::vector<NcEntry>>> cache;
  static std::mutex mu;
  return detail::memoized_table(cache, mu, n, [](int m) {
    std::vector<NcEntry> out;
    for_each_nc(m, [&](Partition p) { out.push_back(detail::make_entry(std::move(p))); });
    return out;
  });
}

/// Int(n), memoized. Kreweras data is filled in as for nc_table.
inline const std::vector<NcEntry>& interval_table(int n) {
  static std::map<int, std::unique_ptr<const std::vector<NcEntry>>> cache;
  static std::mutex mu;
  return detail::memoized_table(cache, mu, n, [](int m) {
    std::vector<NcEntry> out;
    for (Partition& p : enumerate_interval(m)) out.push_back(detail::make_entry(std::move(p)));
    return out;
  });
}

} // namespace nckit
