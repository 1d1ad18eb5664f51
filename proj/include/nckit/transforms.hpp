#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <vector>

#include "nckit/nc_table.hpp"
#include "nckit/ncseries.hpp"

namespace nckit {

/// A moment-truncated distribution of a k-tuple: the joint moments
/// mu(X_{i_1} ... X_{i_n}) for n <= degree. mu(1) = 1 is implicit.
struct Distribution {
  explicit Distribution(NCSeries m) : moments(std::move(m)) {}

  int k() const { return moments.k(); }
  int degree() const { return moments.degree(); }

  NCSeries moments;

  friend bool operator==(const Distribution&, const Distribution&) = default;
};

/// Signed Catalan number s_m = (-1)^{m-1} (2m-2)! / ((m-1)! m!).
inline Rational signed_catalan(int m) {
  Integer c = 1; // Catalan(m-1) via C_{j+1} = C_j * 2(2j+1)/(j+2)
  for (int j = 0; j < m - 1; ++j) c = c * 2 * (2 * j + 1) / (j + 2);
#ifdef NCKIT_FAULT_FLIP_S2
  if (m == 2) return Rational(c); // deliberately wrong, for harness sensitivity tests
#endif
  return (m % 2 == 1) ? Rational(c) : Rational(-c);
}

namespace detail {

// s(pi) depends only on the multiset of block sizes of K(pi).
inline Rational s_from_complement(const std::vector<Block>& kreweras_blocks) {
  static std::map<std::vector<int>, Rational> memo;
  static std::mutex mu;
  std::vector<int> shape;
  for (const Block& b : kreweras_blocks) shape.push_back(static_cast<int>(b.size()));
  std::sort(shape.begin(), shape.end());
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(shape); it != memo.end()) return it->second;
  }
  Rational s(1);
  for (int m : shape) s *= signed_catalan(m);
  std::lock_guard lock(mu);
  return memo.try_emplace(shape, s).first->second;
}

// Cf_w(out) = sum over entries e of weight(e) * Cf_{w;e}(f), where `table(n)`
// yields the partitions summed over and weight(e) == 0 skips an entry.
template <typename Table, typename Weight>
NCSeries partition_sum(const NCSeries& f, Table table, Weight weight) {
  const Dense df(f);
  Dense out(f.k(), f.degree());
  std::vector<int> letters;
  std::vector<Rational> weights;
  for (int n = 1; n <= f.degree(); ++n) {
    const std::vector<NcEntry>& entries = table(n);
    weights.clear();
    for (const NcEntry& e : entries) weights.push_back(weight(e));
    for (std::size_t code = 0; code < out.words(n); ++code) {
      out.decode(code, n, letters);
      Rational sum(0);
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (weights[i] == 0) continue;
        const Rational c = df.block_product(letters, entries[i].blocks);
        if (c != 0) sum += weights[i] * c;
      }
      out.at(n, code) = sum;
    }
  }
  return out.to_series();
}

inline const std::vector<NcEntry>& nc(int n) { return nc_table(n); }
inline const std::vector<NcEntry>& interval(int n) { return interval_table(n); }

inline int sign_of_blocks(const NcEntry& e) { return e.blocks.size() % 2 == 1 ? 1 : -1; } // (-1)^{1+|pi|}

inline Rational power(const Rational& base, int exp) {
  Rational r(1);
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

inline void require_positive(const Rational& t, const char* what) {
  if (t <= 0) throw domain_error(std::string(what) + ": scaling parameter must be positive");
}

inline void require_word_partition(const NCSeries& f, const Word& w, const Partition& q, const char* what) {
  f.check_word(w);
  if (q.size() != static_cast<int>(w.size())) {
    throw domain_error(std::string(what) + ": partition/word size mismatch");
  }
  require_noncrossing(q, what);
}

} // namespace detail

/// s(p) = product over blocks B of K(p) of s_{|B|}.
inline Rational s_coefficient(const Partition& p) {
  detail::require_noncrossing(p, "s_coefficient");
  return detail::s_from_complement(kreweras(p).blocks());
}

/// Free cumulants: Cf_w(R) = sum over pi in NC(n) of s(pi) Cf_{w;pi}(M).
inline NCSeries moments_to_r(const NCSeries& m) {
  return detail::partition_sum(m, detail::nc, [](const NcEntry& e) {
    return detail::s_from_complement(e.kreweras_blocks);
  });
}

/// Cf_w(M) = sum over pi in NC(n) of Cf_{w;pi}(R).
inline NCSeries r_to_moments(const NCSeries& r) {
  return detail::partition_sum(r, detail::nc, [](const NcEntry&) { return Rational(1); });
}

/// Generalized moment coefficient at (w, q): sum over pi <= q of Cf_{w;pi}(R).
inline Rational r_to_moments_generalized(const NCSeries& r, const Word& w, const Partition& q) {
  detail::require_word_partition(r, w, q, "r_to_moments_generalized");
  Rational sum(0);
  for (const NcEntry& e : nc_table(q.size())) {
    if (refines(e.partition, q)) sum += generalized_coefficient(r, w, e.partition);
  }
  return sum;
}

/// Boolean cumulants: Cf_w(eta) = sum over pi in Int(n) of (-1)^{1+|pi|} Cf_{w;pi}(M).
inline NCSeries moments_to_eta(const NCSeries& m) {
  return detail::partition_sum(m, detail::interval, [](const NcEntry& e) {
    return Rational(detail::sign_of_blocks(e));
  });
}

inline NCSeries eta_to_moments(const NCSeries& eta) {
  return detail::partition_sum(eta, detail::interval, [](const NcEntry&) { return Rational(1); });
}

/// Cf_w(Reta f) = sum over pi << 1_n of Cf_{w;pi}(f). Sends R_mu to eta_mu.
inline NCSeries reta(const NCSeries& f) {
  return detail::partition_sum(f, detail::nc, [](const NcEntry& e) {
    return Rational(e.below_top_ll ? 1 : 0);
  });
}

/// Cf_w(f) = sum over rho << 1_n of (-1)^{1+|rho|} Cf_{w;rho}(g).
inline NCSeries reta_inv(const NCSeries& g) {
  return detail::partition_sum(g, detail::nc, [](const NcEntry& e) {
    return Rational(e.below_top_ll ? detail::sign_of_blocks(e) : 0);
  });
}

/// Generalized coefficient of Reta(f) at (w, q): sum over pi << q of Cf_{w;pi}(f).
inline Rational reta_generalized(const NCSeries& f, const Word& w, const Partition& q) {
  detail::require_word_partition(f, w, q, "reta_generalized");
  Rational sum(0);
  for (const NcEntry& e : nc_table(q.size())) {
    if (ll(e.partition, q)) sum += generalized_coefficient(f, w, e.partition);
  }
  return sum;
}

/// t * Reta(f / t), evaluated as sum over pi << 1_n of t^{1-|pi|} Cf_{w;pi}(f).
inline NCSeries scaled_reta(const NCSeries& f, const Rational& t) {
  detail::require_positive(t, "scaled_reta");
  const Rational inv = 1 / t;
  return detail::partition_sum(f, detail::nc, [&](const NcEntry& e) {
    if (!e.below_top_ll) return Rational(0);
    return detail::power(inv, static_cast<int>(e.blocks.size()) - 1);
  });
}

/// t * Reta^{-1}(f / t).
inline NCSeries scaled_reta_inv(const NCSeries& f, const Rational& t) {
  detail::require_positive(t, "scaled_reta_inv");
  const Rational inv = 1 / t;
  return detail::partition_sum(f, detail::nc, [&](const NcEntry& e) {
    if (!e.below_top_ll) return Rational(0);
    return detail::sign_of_blocks(e) * detail::power(inv, static_cast<int>(e.blocks.size()) - 1);
  });
}

/// Per-word constants C_w = sum over pi << 1_n, pi != 1_n of |Cf_{w;pi}(f)|.
/// For t >= 1 every coefficient of scaled_reta(f, t) - f and of
/// scaled_reta_inv(f, t) - f is bounded by C_w / t.
inline NCSeries reta_tail_bound(const NCSeries& f) {
  return detail::partition_sum(abs_coefficients(f), detail::nc, [](const NcEntry& e) {
    return Rational(e.below_top_ll && e.blocks.size() > 1 ? 1 : 0);
  });
}

/// Boolean Bercovici-Pata map: the distribution whose R-transform is eta_d.
inline Distribution bp_map(const Distribution& d) {
  return Distribution(r_to_moments(moments_to_eta(d.moments)));
}

/// Inverse: the distribution whose eta-series is R_d.
inline Distribution bp_inv(const Distribution& d) {
  return Distribution(eta_to_moments(moments_to_r(d.moments)));
}

} // namespace nckit
