#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nckit/partitions.hpp"

namespace nckit {

/// p^(odd) u q^(even): the partition of {1..2n} with blocks {2a-1 : a in A}
/// for A in p and {2b : b in B} for B in q.
inline Partition parity_join(const Partition& p, const Partition& q) {
  detail::require_same_size(p, q);
  const int n = p.size();
  std::vector<int> labels(static_cast<std::size_t>(2 * n));
  for (int e = 1; e <= n; ++e) {
    labels[2 * e - 2] = p.block_of(e);
    labels[2 * e - 1] = p.block_count() + q.block_of(e);
  }
  return Partition::from_labels(labels);
}

inline bool is_parity_preserving(const Partition& t) {
  if (t.size() % 2 != 0) return false;
  std::vector<int> parity(static_cast<std::size_t>(t.block_count()), -1);
  for (int e = 1; e <= t.size(); ++e) {
    int& par = parity[t.block_of(e)];
    if (par == -1) par = e % 2;
    else if (par != e % 2) return false;
  }
  return true;
}

/// Inverse of parity_join; empty when some block mixes parities.
inline std::optional<std::pair<Partition, Partition>> parity_split(const Partition& t) {
  if (t.size() % 2 != 0) throw domain_error("parity_split: odd ground set size");
  if (!is_parity_preserving(t)) return std::nullopt;
  const int n = t.size() / 2;
  std::vector<int> odd(static_cast<std::size_t>(n));
  std::vector<int> even(static_cast<std::size_t>(n));
  for (int e = 1; e <= n; ++e) {
    odd[e - 1] = t.block_of(2 * e - 1);
    even[e - 1] = t.block_of(2 * e);
  }
  return std::pair{Partition::from_labels(odd), Partition::from_labels(even)};
}

namespace detail {

inline void require_parity_nc(const Partition& t, const char* what) {
  if (!is_parity_preserving(t) || !is_noncrossing(t)) {
    throw domain_error(std::string(what) + ": " + t.to_string() +
                       " is not a parity-preserving non-crossing partition");
  }
}

// Same as parent_block, without re-validating `t`.
inline std::optional<int> parent_of(const std::vector<Block>& bs, int a) {
  const Block& A = bs[a];
  std::optional<int> best;
  for (std::size_t b = 0; b < bs.size(); ++b) {
    if (static_cast<int>(b) == a) continue;
    if (bs[b].front() < A.front() && A.back() < bs[b].back()) {
      // embracers of A form a chain; the parent is the innermost one
      if (!best || bs[*best].front() < bs[b].front()) best = static_cast<int>(b);
    }
  }
  return best;
}

} // namespace detail

/// The parent of block `a` in the embracing forest of `t`: the innermost
/// block strictly embracing it. Empty for outer blocks.
inline std::optional<int> parent_block(const Partition& t, int a) {
  detail::require_parity_nc(t, "parent_block");
  if (a < 0 || a >= t.block_count()) {
    throw domain_error("parent_block: no block with index " + std::to_string(a));
  }
  return detail::parent_of(t.blocks(), a);
}

inline bool has_exactly_two_outer(const Partition& t) {
  detail::require_parity_nc(t, "has_exactly_two_outer");
  return outer_profile(t).count == 2;
}

/// The unique pi with s << pi and t << K(pi), when it exists. Existence is
/// decided by t <= K(s) and P_s^{-1}(1) == P_t(n); the witness is built by
/// joining same-parity parent/child blocks of s^(odd) u t^(even) (lowest
/// block minimum first) until none remain, and splitting the result.
inline std::optional<Partition> unique_pi_for(const Partition& s, const Partition& t) {
  detail::require_same_size(s, t);
  detail::require_noncrossing(s, "unique_pi_for");
  detail::require_noncrossing(t, "unique_pi_for");
  const int n = s.size();
  if (!refines(t, kreweras(s))) return std::nullopt;
  if (permutation_of(s).inverse()(1) != permutation_of(t)(n)) return std::nullopt;

  Partition theta = parity_join(s, t);
  while (true) {
    const auto bs = theta.blocks();
    std::optional<std::pair<int, int>> join;
    for (int a = 0; a < static_cast<int>(bs.size()) && !join; ++a) {
      const auto parent = detail::parent_of(bs, a);
      if (parent && bs[*parent].front() % 2 == bs[a].front() % 2) join = std::pair{a, *parent};
    }
    if (!join) break;
    std::vector<int> labels(theta.labels().begin(), theta.labels().end());
    for (int& l : labels) {
      if (l == join->first) l = join->second;
    }
    theta = Partition::from_labels(labels);
  }

  auto split = parity_split(theta);
  if (!split || split->second != kreweras(split->first)) {
    throw std::logic_error("unique_pi_for: maximal join is not of the form pi u K(pi)");
  }
  return split->first;
}

} // namespace nckit
