#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nckit/error.hpp"
#include "nckit/limits.hpp"
#include "nckit/partition.hpp"

namespace nckit {

/// Outer blocks of a non-crossing partition: blocks not strictly embraced
/// by another block. `outer_blocks` holds block indices in increasing order.
struct OuterProfile {
  std::vector<int> outer_blocks;
  int count = 0;
};

namespace detail {

inline void require_same_size(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) {
    throw domain_error("partitions on different ground sets (" + std::to_string(p.size()) +
                       " vs " + std::to_string(q.size()) + ")");
  }
}

inline void require_noncrossing(const Partition& p, const char* what);

// Depth-first generation of NC partitions of the pending intervals, in
// lexicographic order of the canonical block form. The block of the lowest
// pending element is grown one element at a time (stopping first, since a
// prefix sorts before its extensions); the gaps it leaves are independent
// sub-problems whose blocks all precede later intervals in block order.
template <typename Visitor>
class NcGenerator {
public:
  NcGenerator(int n, Visitor& visit) : labels_(static_cast<std::size_t>(n), -1), visit_(visit) {
    pending_.emplace_back(1, n);
  }

  void run() { fill(); }

private:
  void fill() {
    if (pending_.empty()) {
      visit_(Partition::from_labels(labels_));
      return;
    }
    const auto interval = pending_.back();
    pending_.pop_back();
    const int label = next_label_++;
    labels_[interval.first - 1] = label;
    std::vector<std::pair<int, int>> gaps;
    grow(interval, interval.first, label, gaps);
    --next_label_;
    pending_.push_back(interval);
  }

  void grow(std::pair<int, int> interval, int last, int label,
            std::vector<std::pair<int, int>>& gaps) {
    // stop: the block ends at `last`
    const std::size_t mark = pending_.size();
    if (last < interval.second) pending_.emplace_back(last + 1, interval.second);
    for (auto it = gaps.rbegin(); it != gaps.rend(); ++it) pending_.push_back(*it);
    fill();
    pending_.resize(mark);

    for (int c = last + 1; c <= interval.second; ++c) {
      const bool has_gap = c > last + 1;
      if (has_gap) gaps.emplace_back(last + 1, c - 1);
      labels_[c - 1] = label;
      grow(interval, c, label, gaps);
      if (has_gap) gaps.pop_back();
    }
  }

  std::vector<int> labels_;
  std::vector<std::pair<int, int>> pending_; // back() is the next interval
  int next_label_ = 0;
  Visitor& visit_;
};

} // namespace detail

/// Visits every set partition of {1..n} (restricted growth string order).
template <typename Visitor>
void for_each_partition(int n, Visitor&& visit) {
  check_size(n, limits().all_partitions, "all_partitions");
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  while (true) {
    visit(Partition::from_labels(rgs));
    int i = n - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (int j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

inline std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](Partition p) { out.push_back(std::move(p)); });
  return out;
}

/// Linear-time check: scanning left to right, a block that is revisited must
/// be the most recently opened block that is still open.
inline bool is_noncrossing(const Partition& p) {
  const int n = p.size();
  std::vector<int> last(static_cast<std::size_t>(p.block_count()), 0);
  for (int e = 1; e <= n; ++e) last[p.block_of(e)] = e;
  std::vector<bool> opened(static_cast<std::size_t>(p.block_count()), false);
  std::vector<int> open;
  for (int e = 1; e <= n; ++e) {
    const int b = p.block_of(e);
    if (!opened[b]) {
      opened[b] = true;
      if (last[b] != e) open.push_back(b);
    } else {
      if (open.empty() || open.back() != b) return false;
      if (last[b] == e) open.pop_back();
    }
  }
  return true;
}

inline void detail::require_noncrossing(const Partition& p, const char* what) {
  if (!is_noncrossing(p)) {
    throw domain_error(std::string(what) + ": " + p.to_string() + " is crossing");
  }
}

/// Visits NC(n) in lexicographic order of canonical block form.
template <typename Visitor>
void for_each_nc(int n, Visitor&& visit) {
  check_size(n, limits().noncrossing, "enumerate_nc");
  detail::NcGenerator<std::remove_reference_t<Visitor>> gen(n, visit);
  gen.run();
}

inline std::vector<Partition> enumerate_nc(int n) {
  std::vector<Partition> out;
  for_each_nc(n, [&](Partition p) { out.push_back(std::move(p)); });
  return out;
}

inline bool is_interval(const Partition& p) {
  for (int e = 2; e <= p.size(); ++e) {
    if (p.block_of(e) != p.block_of(e - 1) && p.block_of(e) != p.block_of(e - 1) + 1) return false;
  }
  return true;
}

/// Int(n) in lexicographic order of canonical block form: a block length
/// sequence, shortest first block first.
inline std::vector<Partition> enumerate_interval(int n) {
  check_size(n, limits().interval, "enumerate_interval");
  std::vector<Partition> out;
  std::vector<int> labels(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int start, int label) -> void {
    if (start > n) {
      out.push_back(Partition::from_labels(labels));
      return;
    }
    for (int end = start; end <= n; ++end) {
      labels[end - 1] = label;
      self(self, end + 1, label + 1);
    }
  };
  rec(rec, 1, 0);
  return out;
}

/// p <= q in reversed refinement order (every block of q is a union of
/// blocks of p).
inline bool refines(const Partition& p, const Partition& q) {
  detail::require_same_size(p, q);
  std::vector<int> target(static_cast<std::size_t>(p.block_count()), -1);
  for (int e = 1; e <= p.size(); ++e) {
    int& t = target[p.block_of(e)];
    if (t == -1) t = q.block_of(e);
    else if (t != q.block_of(e)) return false;
  }
  return true;
}

/// p << q: p <= q and every block of q has its min and max in one block of p.
inline bool ll(const Partition& p, const Partition& q) {
  if (!refines(p, q)) return false;
  std::vector<int> lo(static_cast<std::size_t>(q.block_count()), 0);
  std::vector<int> hi(static_cast<std::size_t>(q.block_count()), 0);
  for (int e = q.size(); e >= 1; --e) lo[q.block_of(e)] = e;
  for (int e = 1; e <= q.size(); ++e) hi[q.block_of(e)] = e;
  for (int c = 0; c < q.block_count(); ++c) {
    if (p.block_of(lo[c]) != p.block_of(hi[c])) return false;
  }
  return true;
}

/// Each block b1 < ... < bm becomes the cycle b1 -> b2 -> ... -> bm -> b1.
inline Permutation permutation_of(const Partition& p) {
  std::vector<int> img(static_cast<std::size_t>(p.size()));
  for (const Block& b : p.blocks()) {
    for (std::size_t j = 0; j < b.size(); ++j) img[b[j] - 1] = b[(j + 1) % b.size()];
  }
  return Permutation(std::move(img));
}

/// Inverse of permutation_of on NC(n). Empty when some cycle does not run
/// increasing-then-wrap through its support, or the supports cross.
inline std::optional<Partition> partition_of_cycles(const Permutation& perm) {
  const int n = perm.size();
  std::vector<int> labels(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int start = 1; start <= n; ++start) {
    if (labels[start - 1] != -1) continue;
    // `start` is the minimum of its cycle since smaller elements are labelled
    labels[start - 1] = next;
    int cur = start;
    for (int nxt = perm(cur); nxt != start; cur = nxt, nxt = perm(cur)) {
      if (nxt < cur) return std::nullopt;
      labels[nxt - 1] = next;
    }
    ++next;
  }
  Partition p = Partition::from_labels(labels);
  if (!is_noncrossing(p)) return std::nullopt;
  return p;
}

/// Relative Kreweras complement K_q(p), with P_{K_q(p)} = P_p^{-1} P_q.
inline Partition relative_kreweras(const Partition& p, const Partition& q) {
  detail::require_same_size(p, q);
  detail::require_noncrossing(p, "relative_kreweras");
  detail::require_noncrossing(q, "relative_kreweras");
  if (!refines(p, q)) {
    throw domain_error("relative_kreweras: " + p.to_string() + " does not refine " + q.to_string());
  }
  auto result = partition_of_cycles(permutation_of(p).inverse() * permutation_of(q));
  if (!result) throw std::logic_error("relative Kreweras complement is not non-crossing");
  return *result;
}

/// K(p) = K_{1_n}(p).
inline Partition kreweras(const Partition& p) {
  return relative_kreweras(p, Partition::coarsest(p.size()));
}

/// min(a) <= min(b) and max(a) >= max(b); blocks are sorted ascending.
inline bool embraces(std::span<const int> a, std::span<const int> b) {
  if (a.empty() || b.empty()) throw domain_error("embraces: empty block");
  return a.front() <= b.front() && a.back() >= b.back();
}

inline OuterProfile outer_profile(const Partition& p) {
  detail::require_noncrossing(p, "outer_profile");
  const auto bs = p.blocks();
  OuterProfile out;
  for (std::size_t a = 0; a < bs.size(); ++a) {
    bool outer = true;
    for (std::size_t b = 0; b < bs.size() && outer; ++b) {
      if (bs[b].front() < bs[a].front() && bs[a].back() < bs[b].back()) outer = false;
    }
    if (outer) out.outer_blocks.push_back(static_cast<int>(a));
  }
  out.count = static_cast<int>(out.outer_blocks.size());
  return out;
}

/// rho_0: each block of size >= 3 split into {min, max} plus singletons.
/// For NC partitions, pi << rho iff rho_0 <= pi <= rho.
inline Partition min_max_split(const Partition& rho) {
  std::vector<int> labels(static_cast<std::size_t>(rho.size()));
  int next = 0;
  for (const Block& b : rho.blocks()) {
    const int pair = next++;
    for (int e : b) {
      labels[e - 1] = (e == b.front() || e == b.back()) ? pair : next++;
    }
  }
  return Partition::from_labels(labels);
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// card{rho in NC(n) : p << rho, |rho| = size} in closed form.
inline std::uint64_t count_coarser_ll(const Partition& p, int size) {
  const int out = outer_profile(p).count;
  if (size < out || size > p.block_count()) return 0;
  return binomial(p.block_count() - out, size - out);
}

inline std::uint64_t count_coarser_ll_total(const Partition& p) {
  return std::uint64_t{1} << (p.block_count() - outer_profile(p).count);
}

} // namespace nckit
