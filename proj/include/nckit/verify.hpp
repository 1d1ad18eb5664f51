#pragma once

// Seeded verification batteries behind `nckit verify`. Each suite checks
// identities between production operations, closed forms and the brute-force
// oracles, and records the first few failures verbatim.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nckit/convolutions.hpp"
#include "nckit/oracle.hpp"
#include "nckit/parity.hpp"
#include "nckit/partitions.hpp"
#include "nckit/random.hpp"
#include "nckit/transforms.hpp"

namespace nckit {

struct VerifyFailure {
  std::string descriptor;
  std::string expected;
  std::string actual;
};

struct VerifyOutcome {
  std::string suite;
  std::uint64_t cases_run = 0;
  std::vector<VerifyFailure> failures;

  bool passed() const { return failures.empty(); }
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  int trials = 10;
  int kmax = 2;
  int dmax = 5;
  int partition_nmax = 6; // exhaustive partition checks run on n <= this
};

inline const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"partitions", "transforms", "theorem2", "theorem1prime"};
  return names;
}

namespace detail {

class Recorder {
public:
  explicit Recorder(std::string suite) { outcome_.suite = std::move(suite); }

  void check(bool ok, const std::function<VerifyFailure()>& describe) {
    ++outcome_.cases_run;
    if (!ok && outcome_.failures.size() < kMaxFailures) outcome_.failures.push_back(describe());
    else if (!ok) ++dropped_;
  }

  void check_equal(const NCSeries& expected, const NCSeries& actual, const std::string& what) {
    check(expected == actual, [&] {
      auto [e, a] = first_difference(expected, actual);
      return VerifyFailure{what, std::move(e), std::move(a)};
    });
  }

  template <typename T>
  void check_value(const T& expected, const T& actual, const std::function<std::string()>& what,
                   const std::function<std::string(const T&)>& show) {
    check(expected == actual, [&] { return VerifyFailure{what(), show(expected), show(actual)}; });
  }

  VerifyOutcome finish() {
    if (dropped_ > 0) {
      outcome_.failures.push_back({"(" + std::to_string(dropped_) + " further failures not listed)", "", ""});
    }
    return std::move(outcome_);
  }

  // "word: coefficient" on each side, for the first word (degree-lex) that differs
  static std::pair<std::string, std::string> first_difference(const NCSeries& a, const NCSeries& b) {
    if (a.k() != b.k() || a.degree() != b.degree()) {
      auto shape = [](const NCSeries& f) {
        return "k=" + std::to_string(f.k()) + ", degree=" + std::to_string(f.degree());
      };
      return {shape(a), shape(b)};
    }
    for (int n = 1; n <= a.degree(); ++n) {
      std::optional<Word> found;
      for_each_word(a.k(), n, [&](const Word& w) {
        if (!found && a.coefficient(w) != b.coefficient(w)) found = w;
      });
      if (found) {
        const std::string key = "word " + word_key(*found) + ": ";
        return {key + to_string(a.coefficient(*found)), key + to_string(b.coefficient(*found))};
      }
    }
    return {"", ""};
  }

private:
  static constexpr std::size_t kMaxFailures = 20;
  VerifyOutcome outcome_;
  std::uint64_t dropped_ = 0;
};

inline std::string tag(int trial, int k, int d) {
  return "[trial " + std::to_string(trial) + ", k=" + std::to_string(k) + ", D=" + std::to_string(d) + "]";
}

inline std::string show_u64(const std::uint64_t& v) { return std::to_string(v); }
inline std::string show_partition(const Partition& p) { return p.to_string(); }

} // namespace detail

inline VerifyOutcome verify_partitions(const VerifyOptions& opt) {
  detail::Recorder rec("partitions");
  for (int n = 1; n <= opt.partition_nmax; ++n) {
    const auto nc = enumerate_nc(n);
    const std::string at = " [n=" + std::to_string(n) + "]";
    rec.check_value<std::uint64_t>(binomial(2 * n, n) / static_cast<std::uint64_t>(n + 1), nc.size(),
                                   [&] { return "|NC(n)| == Catalan(n)" + at; }, detail::show_u64);
    rec.check_value<std::uint64_t>(std::uint64_t{1} << (n - 1), enumerate_interval(n).size(),
                                   [&] { return "|Int(n)| == 2^(n-1)" + at; }, detail::show_u64);
    auto brute = oracle::brute_nc(n);
    std::sort(brute.begin(), brute.end());
    rec.check(std::is_sorted(nc.begin(), nc.end()) && brute == nc, [&] {
      return VerifyFailure{"enumerate_nc sorted and set-equal to brute_nc" + at, std::to_string(brute.size()),
                           std::to_string(nc.size())};
    });

    std::vector<Partition> ks;
    for (const Partition& p : nc) {
      const Partition k = kreweras(p);
      ks.push_back(k);
      const std::string pat = " [pi=" + p.to_string() + "]";
      rec.check_value<Partition>(oracle::brute_kreweras(p), k, [&] { return "kreweras == brute_kreweras" + pat; },
                                 detail::show_partition);
      rec.check(p.block_count() + k.block_count() == n + 1, [&] {
        return VerifyFailure{"|pi| + |K(pi)| == n + 1" + pat, std::to_string(n + 1),
                             std::to_string(p.block_count() + k.block_count())};
      });
      for (int size = 1; size <= n; ++size) {
        rec.check_value<std::uint64_t>(oracle::brute_count_ll(p, size), count_coarser_ll(p, size),
                                       [&] { return "count_coarser_ll == brute_count_ll" + pat + " size=" + std::to_string(size); },
                                       detail::show_u64);
      }
      // in pi^(odd) u K(pi)^(even) every parent has the opposite parity of its child
      const Partition theta = parity_join(p, k);
      const auto bs = theta.blocks();
      bool alternating = has_exactly_two_outer(theta);
      for (int a = 0; a < theta.block_count(); ++a) {
        const auto parent = parent_block(theta, a);
        if (parent && bs[*parent].front() % 2 == bs[a].front() % 2) alternating = false;
      }
      rec.check(alternating, [&] {
        return VerifyFailure{"pi u K(pi) has two outer blocks and alternating parents" + pat, "true", "false"};
      });
    }
    std::sort(ks.begin(), ks.end());
    rec.check(std::adjacent_find(ks.begin(), ks.end()) == ks.end(), [&] {
      return VerifyFailure{"kreweras is injective on NC(n)" + at, "distinct images", "repeated image"};
    });

    // relative complement: for fixed rho, an order-reversing bijection of {pi <= rho}
    for (const Partition& rho : nc) {
      std::vector<Partition> below, images;
      for (const Partition& p : nc) {
        if (refines(p, rho)) below.push_back(p);
      }
      for (const Partition& p : below) images.push_back(relative_kreweras(p, rho));
      bool ok = true;
      for (std::size_t i = 0; i < below.size(); ++i) {
        ok = ok && refines(images[i], rho);
        for (std::size_t j = 0; j < below.size(); ++j) {
          if (refines(below[i], below[j])) ok = ok && refines(images[j], images[i]);
        }
      }
      std::sort(images.begin(), images.end());
      ok = ok && std::adjacent_find(images.begin(), images.end()) == images.end();
      rec.check(ok, [&] {
        return VerifyFailure{"relative_kreweras(., rho) is an order-reversing bijection of {pi <= rho} [rho=" +
                                 rho.to_string() + "]",
                             "true", "false"};
      });
    }

    for (const Partition& p : nc) {
      const Partition kp = kreweras(p);
      for (const Partition& q : nc) {
        const std::string pq = " [pi=" + p.to_string() + ", rho=" + q.to_string() + "]";
        rec.check(is_noncrossing(parity_join(p, q)) == refines(q, kp), [&] {
          return VerifyFailure{"pi u rho non-crossing <=> rho <= K(pi)" + pq, "equivalent", "not equivalent"};
        });
        if (refines(p, q)) {
          rec.check(refines(kreweras(q), kp), [&] {
            return VerifyFailure{"kreweras reverses order" + pq, "K(rho) <= K(pi)", "not comparable"};
          });
        }
        rec.check(ll(p, q) == (refines(min_max_split(q), p) && refines(p, q)), [&] {
          return VerifyFailure{"pi << rho <=> rho_0 <= pi <= rho" + pq, "equivalent", "not equivalent"};
        });
        if (ll(p, q)) {
          rec.check(outer_profile(p).count == outer_profile(q).count, [&] {
            return VerifyFailure{"pi << rho preserves outer block count" + pq,
                                 std::to_string(outer_profile(p).count), std::to_string(outer_profile(q).count)};
          });
        }
        if (n <= 6) {
          const auto [n1, n2] = oracle::brute_n_counts(p, q);
          const bool condition =
              refines(q, kp) && permutation_of(p).inverse()(1) == permutation_of(q)(n);
          const auto unique = unique_pi_for(p, q);
          const auto brute = oracle::brute_pi_candidates(p, q);
          rec.check(n1 == n2 && n2 == (condition ? 1u : 0u) && unique.has_value() == condition &&
                        (!unique || (brute.size() == 1 && brute.front() == *unique)),
                    [&] {
                      return VerifyFailure{"N'(s,t) == N''(s,t) == [t <= K(s) and P_s^-1(1) == P_t(n)], unique_pi_for agrees" + pq,
                                           std::string(condition ? "1" : "0"),
                                           "N'=" + std::to_string(n1) + " N''=" + std::to_string(n2) +
                                               (unique ? " pi=" + unique->to_string() : " pi=none")};
                    });
        }
      }
    }
  }
  return rec.finish();
}

inline VerifyOutcome verify_transforms(const VerifyOptions& opt) {
  detail::Recorder rec("transforms");
  SeriesGenerator gen(opt.seed);
  for (int trial = 0; trial < opt.trials; ++trial) {
    const int k = 1 + trial % opt.kmax;
    const int d = opt.dmax;
    const std::string at = " " + detail::tag(trial, k, d);
    const NCSeries m = gen.dense(k, d);
    const NCSeries f = gen.dense(k, d);

    rec.check_equal(m, r_to_moments(moments_to_r(m)), "r_to_moments o moments_to_r == id" + at);
    rec.check_equal(m, moments_to_r(r_to_moments(m)), "moments_to_r o r_to_moments == id" + at);
    rec.check_equal(m, eta_to_moments(moments_to_eta(m)), "eta_to_moments o moments_to_eta == id" + at);
    rec.check_equal(m, moments_to_eta(eta_to_moments(m)), "moments_to_eta o eta_to_moments == id" + at);
    rec.check_equal(geometric_ratio(m, +1), moments_to_eta(m), "eta == M/(1+M)" + at);
    rec.check_equal(geometric_ratio(m, -1), eta_to_moments(m), "M == eta/(1-eta)" + at);
    rec.check_equal(moments_to_eta(m), reta(moments_to_r(m)), "Reta(R_mu) == eta_mu" + at);
    rec.check_equal(oracle::brute_reta(f), reta(f), "reta == brute_reta" + at);
    rec.check_equal(f, reta(reta_inv(f)), "reta o reta_inv == id" + at);
    rec.check_equal(f, reta_inv(reta(f)), "reta_inv o reta == id" + at);

    const Distribution mu(m);
    for (const Rational& t : {Rational(1, 2), Rational(1, 3), Rational(2, 5)}) {
      const Distribution mu1 = free_power(mu, 1 / (1 - t));
      const Distribution mu2 = boolean_power(mu1, t);
      rec.check_equal(scale(moments_to_eta(m), t / (1 - t)), moments_to_r(mu2.moments),
                      "R_mu'' == t/(1-t) eta_mu, t=" + to_string(t) + at);
    }
  }
  return rec.finish();
}

inline VerifyOutcome verify_theorem2(const VerifyOptions& opt) {
  detail::Recorder rec("theorem2");
  SeriesGenerator gen(opt.seed);
  for (int trial = 0; trial < opt.trials; ++trial) {
    const int k = 1 + trial % opt.kmax;
    const int d = opt.dmax;
    const std::string at = " " + detail::tag(trial, k, d);
    const NCSeries f = gen.dense(k, d);
    const NCSeries g = gen.dense(k, d);
    rec.check_equal(boxed_convolution(reta(f), reta(g)), reta(boxed_convolution(f, g)),
                    "Reta(f * g) == Reta(f) * Reta(g)" + at);

    const Distribution a(gen.dense(k, d));
    const Distribution b(gen.dense(k, d));
    const Distribution ab = free_mult_convolve(a, b);
    rec.check_equal(boxed_convolution(moments_to_eta(a.moments), moments_to_eta(b.moments)),
                    moments_to_eta(ab.moments), "eta_{a [x] b} == eta_a * eta_b" + at);
    rec.check_equal(free_mult_convolve(bp_map(a), bp_map(b)).moments, bp_map(ab).moments,
                    "B(a [x] b) == B(a) [x] B(b)" + at);
  }
  return rec.finish();
}

inline VerifyOutcome verify_theorem1prime(const VerifyOptions& opt) {
  detail::Recorder rec("theorem1prime");
  SeriesGenerator gen(opt.seed);
  for (int trial = 0; trial < opt.trials; ++trial) {
    const int k = 1 + trial % opt.kmax;
    const int d = opt.dmax;
    const std::string at = " " + detail::tag(trial, k, d);

    const NCSeries f = gen.dense(k, d);
    const NCSeries tail = reta_tail_bound(f);
    for (const int t : {10, 100, 1000}) {
      for (const auto* op : {"scaled_reta", "scaled_reta_inv"}) {
        const NCSeries g = std::string(op) == "scaled_reta" ? scaled_reta(f, t) : scaled_reta_inv(f, t);
        const NCSeries diff = subtract(g, f);
        bool within = true;
        for (const auto& [w, c] : diff.terms()) within = within && abs(c) * t <= tail.coefficient(w);
        rec.check(within, [&] {
          return VerifyFailure{std::string(op) + "(f, t) - f bounded by C/t, t=" + std::to_string(t) + at,
                               "within bound", "bound exceeded"};
        });
      }
    }

    const Distribution mu = gen.distribution(k, d);
    const NCSeries limit = bp_map(mu).moments;
    const NCSeries bound = bp_limit_tail_bound(mu);
    for (const int n : {10, 100}) {
      const Distribution mu_n = boolean_power(mu, Rational(1, n));
      const NCSeries powered = free_power(mu_n, n).moments;
      rec.check_equal(scaled_reta_inv(moments_to_eta(mu.moments), n), moments_to_r(powered),
                      "R of N-fold free power == N Reta^{-1}(eta_mu / N), N=" + std::to_string(n) + at);
      const NCSeries diff = subtract(powered, limit);
      bool within = true;
      for (const auto& [w, c] : diff.terms()) within = within && abs(c) * n <= bound.coefficient(w);
      rec.check(within, [&] {
        return VerifyFailure{"free power of boolean 1/N-power -> B(mu) within C'/N, N=" + std::to_string(n) + at,
                             "within bound", "bound exceeded"};
      });
      // the dual statement: N-fold boolean power of the free 1/N-power tends to B^{-1}(nu)
      const Distribution nu_n = free_power(mu, Rational(1, n));
      rec.check_equal(scaled_reta(moments_to_r(mu.moments), n), moments_to_eta(boolean_power(nu_n, n).moments),
                      "eta of N-fold boolean power == N Reta(R_mu / N), N=" + std::to_string(n) + at);
    }
  }
  return rec.finish();
}

inline VerifyOutcome run_verify_suite(const std::string& suite, const VerifyOptions& opt) {
  if (suite == "partitions") return verify_partitions(opt);
  if (suite == "transforms") return verify_transforms(opt);
  if (suite == "theorem2") return verify_theorem2(opt);
  if (suite == "theorem1prime") return verify_theorem1prime(opt);
  throw domain_error("unknown verification suite '" + suite + "'");
}

} // namespace nckit
