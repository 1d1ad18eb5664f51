#pragma once

// Definitional, unoptimized counterparts of the production operations. Only
// the value types and the raw partition enumeration are shared with the
// production code.

#include <cstdint>
#include <map>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nckit/error.hpp"
#include "nckit/partition.hpp"
#include "nckit/partitions.hpp"
#include "nckit/transforms.hpp"

namespace nckit::oracle {

namespace detail {

inline bool same(const Partition& p, int a, int b) { return p.block_of(a) == p.block_of(b); }

// four-point definition
inline bool crossing(const Partition& p) {
  const int n = p.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          if (same(p, i, k) && same(p, j, l) && !same(p, i, j)) return true;
  return false;
}

// every block of q is a union of blocks of p
inline bool finer(const Partition& p, const Partition& q) {
  for (int a = 1; a <= p.size(); ++a)
    for (int b = 1; b <= p.size(); ++b)
      if (same(p, a, b) && !same(q, a, b)) return false;
  return true;
}

inline bool much_finer(const Partition& p, const Partition& q) {
  if (!finer(p, q)) return false;
  for (const Block& c : q.blocks()) {
    if (!same(p, c.front(), c.back())) return false;
  }
  return true;
}

inline Partition interleave(const Partition& p, const Partition& q) {
  const int n = p.size();
  std::vector<Block> blocks;
  for (const Block& b : p.blocks()) {
    Block odd;
    for (int e : b) odd.push_back(2 * e - 1);
    blocks.push_back(odd);
  }
  for (const Block& b : q.blocks()) {
    Block even;
    for (int e : b) even.push_back(2 * e);
    blocks.push_back(even);
  }
  return Partition::from_blocks(2 * n, blocks);
}

// P_p as an image vector (index 0 unused)
inline std::vector<int> cycle_perm(const Partition& p) {
  std::vector<int> img(static_cast<std::size_t>(p.size()) + 1);
  for (const Block& b : p.blocks())
    for (std::size_t j = 0; j < b.size(); ++j) img[b[j]] = b[(j + 1) % b.size()];
  return img;
}

inline std::vector<int> invert(const std::vector<int>& img) {
  std::vector<int> inv(img.size());
  for (std::size_t i = 1; i < img.size(); ++i) inv[img[i]] = static_cast<int>(i);
  return inv;
}

inline Partition orbits(const std::vector<int>& img) {
  const int n = static_cast<int>(img.size()) - 1;
  std::vector<int> labels(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int s = 1; s <= n; ++s) {
    if (labels[s - 1] != -1) continue;
    for (int e = s; labels[e - 1] == -1; e = img[e]) labels[e - 1] = next;
    ++next;
  }
  return Partition::from_labels(labels);
}

} // namespace detail

/// all_partitions(n) filtered by the four-point crossing definition.
inline std::vector<Partition> brute_nc(int n) {
  check_size(n, 10, "brute_nc");
  std::vector<Partition> out;
  for_each_partition(n, [&](Partition p) {
    if (!detail::crossing(p)) out.push_back(std::move(p));
  });
  return out;
}

namespace detail {

inline const std::vector<Partition>& brute_nc_cached(int n) {
  static std::map<int, std::vector<Partition>> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, brute_nc(n)).first;
  return it->second;
}

inline Partition brute_kreweras_uncached(const Partition& p);

} // namespace detail

/// The largest rho in NC(n) with p^(odd) u rho^(even) non-crossing.
inline Partition brute_kreweras(const Partition& p) {
  static std::unordered_map<Partition, Partition> cache;
  static std::mutex mu;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(p); it != cache.end()) return it->second;
  }
  Partition k = detail::brute_kreweras_uncached(p);
  std::lock_guard lock(mu);
  cache.emplace(p, k);
  return k;
}

inline Partition detail::brute_kreweras_uncached(const Partition& p) {
  check_size(p.size(), 8, "brute_kreweras");
  if (detail::crossing(p)) throw domain_error("brute_kreweras: crossing input");
  std::vector<Partition> admissible;
  for (const Partition& rho : detail::brute_nc_cached(p.size())) {
    if (!detail::crossing(detail::interleave(p, rho))) admissible.push_back(rho);
  }
  for (const Partition& candidate : admissible) {
    bool largest = true;
    for (const Partition& rho : admissible) largest = largest && detail::finer(rho, candidate);
    if (largest) return candidate;
  }
  throw std::logic_error("brute_kreweras: no largest admissible partition");
}

/// card{rho in NC(n) : p << rho, |rho| = size}.
inline std::uint64_t brute_count_ll(const Partition& p, int size) {
  check_size(p.size(), 8, "brute_count_ll");
  std::uint64_t count = 0;
  for (const Partition& rho : detail::brute_nc_cached(p.size())) {
    if (rho.block_count() == size && detail::much_finer(p, rho)) ++count;
  }
  return count;
}

/// The pi in NC(n) with s << pi and t << K(pi).
inline std::vector<Partition> brute_pi_candidates(const Partition& s, const Partition& t) {
  check_size(s.size(), 7, "brute_pi_candidates");
  std::vector<Partition> out;
  for (const Partition& pi : detail::brute_nc_cached(s.size())) {
    if (detail::much_finer(s, pi) && detail::much_finer(t, brute_kreweras(pi))) out.push_back(pi);
  }
  return out;
}

/// (N'(s,t), N''(s,t)): N' counts rho << 1_n with s <= rho and K_rho(s) = t,
/// N'' counts pi with s << pi and t << K(pi).
inline std::pair<std::uint64_t, std::uint64_t> brute_n_counts(const Partition& s, const Partition& t) {
  check_size(s.size(), 7, "brute_n_counts");
  if (s.size() != t.size()) throw domain_error("brute_n_counts: size mismatch");
  const int n = s.size();
  const Partition top = Partition::coarsest(n);
  const auto s_inv = detail::invert(detail::cycle_perm(s));
  std::uint64_t n1 = 0;
  for (const Partition& rho : detail::brute_nc_cached(n)) {
    if (!detail::much_finer(rho, top) || !detail::finer(s, rho)) continue;
    const auto p_rho = detail::cycle_perm(rho);
    std::vector<int> prod(p_rho.size());
    for (int i = 1; i <= n; ++i) prod[i] = s_inv[p_rho[i]];
    if (detail::orbits(prod) == t) ++n1;
  }
  const std::uint64_t n2 = brute_pi_candidates(s, t).size();
  return {n1, n2};
}

/// Reta by its definition as eta o R^{-1}.
inline NCSeries brute_reta(const NCSeries& f) { return moments_to_eta(r_to_moments(f)); }

} // namespace nckit::oracle
