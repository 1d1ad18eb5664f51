#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nckit/limits.hpp"
#include "nckit/ncseries.hpp"
#include "nckit/transforms.hpp"

namespace nckit {

inline Distribution zero_distribution(int k, int degree) { return Distribution(NCSeries(k, degree)); }

namespace detail {

inline void require_same_k(const Distribution& a, const Distribution& b) {
  if (a.k() != b.k()) {
    throw domain_error("distributions of tuples of different lengths (" + std::to_string(a.k()) +
                       " vs " + std::to_string(b.k()) + ")");
  }
}

} // namespace detail

/// Free additive convolution: R-transforms add.
inline Distribution free_add_convolve(const Distribution& a, const Distribution& b) {
  detail::require_same_k(a, b);
  return Distribution(r_to_moments(add(moments_to_r(a.moments), moments_to_r(b.moments))));
}

/// Boolean convolution: eta-series add.
inline Distribution boolean_convolve(const Distribution& a, const Distribution& b) {
  detail::require_same_k(a, b);
  return Distribution(eta_to_moments(add(moments_to_eta(a.moments), moments_to_eta(b.moments))));
}

/// Free multiplicative convolution: R_{a [x] b} = R_a * R_b (boxed convolution).
inline Distribution free_mult_convolve(const Distribution& a, const Distribution& b) {
  detail::require_same_k(a, b);
  return Distribution(r_to_moments(boxed_convolution(moments_to_r(a.moments), moments_to_r(b.moments))));
}

inline Distribution free_power(const Distribution& a, const Rational& t) {
  detail::require_positive(t, "free_power");
  return Distribution(r_to_moments(scale(moments_to_r(a.moments), t)));
}

inline Distribution boolean_power(const Distribution& a, const Rational& t) {
  detail::require_positive(t, "boolean_power");
  return Distribution(eta_to_moments(scale(moments_to_eta(a.moments), t)));
}

/// Per-word constants C'_w such that, for integers N >= 1, the moments of
/// free_power(boolean_power(a, 1/N), N) differ from those of bp_map(a) by at
/// most C'_w / N. With f = eta_a and C = reta_tail_bound(f):
///   C'_w = sum over pi in NC(n) of prod_B (|f_B| + C_B) - prod_B |f_B|.
inline NCSeries bp_limit_tail_bound(const Distribution& a) {
  const NCSeries f = moments_to_eta(a.moments);
  const NCSeries c = reta_tail_bound(f);
  const detail::Dense abs_f(abs_coefficients(f));
  const detail::Dense widened(add(abs_coefficients(f), c));
  detail::Dense out(f.k(), f.degree());
  std::vector<int> letters;
  for (int n = 1; n <= f.degree(); ++n) {
    for (std::size_t code = 0; code < out.words(n); ++code) {
      out.decode(code, n, letters);
      Rational sum(0);
      for (const NcEntry& e : nc_table(n)) {
        sum += widened.block_product(letters, e.blocks) - abs_f.block_product(letters, e.blocks);
      }
      out.at(n, code) = sum;
    }
  }
  return out.to_series();
}

enum class PsdStatus { positive_semidefinite, indefinite };

inline const char* to_string(PsdStatus s) {
  return s == PsdStatus::positive_semidefinite ? "positive_semidefinite" : "indefinite";
}

/// Result of the truncated positivity check mu(P^* P) >= 0. The Gram matrix
/// is indexed by `basis`: the empty word followed by every word of length
/// 1..degree_cap in degree-lex order. `matrix_dim` counts the nonempty words.
struct GramReport {
  int degree_cap = 0;
  std::size_t matrix_dim = 0;
  PsdStatus min_eigen_sign = PsdStatus::positive_semidefinite;
  std::optional<std::vector<Rational>> witness; // x with x^T G x < 0
  std::optional<Rational> witness_value;
  std::vector<Word> basis;
};

inline std::vector<Word> gram_basis(int k, int degree_cap) {
  std::vector<Word> basis{Word{}};
  for (int n = 1; n <= degree_cap; ++n) for_each_word(k, n, [&](const Word& w) { basis.push_back(w); });
  return basis;
}

/// G[u][v] = mu(reverse(u) v), with mu of the empty word equal to 1.
inline std::vector<std::vector<Rational>> gram_matrix(const Distribution& a, const std::vector<Word>& basis) {
  const std::size_t dim = basis.size();
  std::vector<std::vector<Rational>> g(dim, std::vector<Rational>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      Word w(basis[i].rbegin(), basis[i].rend());
      w.insert(w.end(), basis[j].begin(), basis[j].end());
      g[i][j] = w.empty() ? Rational(1) : a.moments.coefficient(w);
      g[j][i] = g[i][j];
    }
  }
  return g;
}

/// Exact congruence elimination with diagonal pivots. The Gram matrix is
/// PSD iff no negative pivot appears and every remaining block with a zero
/// diagonal is zero; otherwise a witness vector is reported.
inline GramReport gram_check(const Distribution& a, int degree_cap) {
  if (degree_cap < 1 || 2 * degree_cap > a.degree()) {
    throw domain_error("gram_check: degree cap " + std::to_string(degree_cap) +
                       " needs moments up to degree " + std::to_string(2 * degree_cap) + ", have " +
                       std::to_string(a.degree()));
  }
  GramReport report;
  report.degree_cap = degree_cap;
  for (int j = 1; j <= degree_cap; ++j) report.matrix_dim += detail::int_pow(a.k(), j);
  if (report.matrix_dim + 1 > static_cast<std::size_t>(limits().gram_matrix_dim)) {
    throw size_error("gram_check: matrix dimension " + std::to_string(report.matrix_dim + 1) +
                     " exceeds limit");
  }
  report.basis = gram_basis(a.k(), degree_cap);
  auto m = gram_matrix(a, report.basis);
  const std::size_t dim = m.size();

  // invariant: m[i][j] = b_i^T G b_j for the working basis vectors b_i
  std::vector<std::vector<Rational>> basis(dim, std::vector<Rational>(dim));
  for (std::size_t i = 0; i < dim; ++i) basis[i][i] = 1;
  std::vector<bool> done(dim, false);

  auto fail = [&](std::vector<Rational> x, Rational value) {
    report.min_eigen_sign = PsdStatus::indefinite;
    report.witness = std::move(x);
    report.witness_value = std::move(value);
    return report;
  };

  for (std::size_t step = 0; step < dim; ++step) {
    std::optional<std::size_t> pivot;
    for (std::size_t i = 0; i < dim; ++i) {
      if (done[i]) continue;
      if (m[i][i] < 0) return fail(basis[i], m[i][i]);
      if (m[i][i] > 0 && !pivot) pivot = i;
    }
    if (!pivot) {
      // all remaining diagonals vanish: any nonzero off-diagonal is a witness
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
          if (done[i] || done[j] || m[i][j] == 0) continue;
          const Rational s = m[i][j] > 0 ? Rational(-1) : Rational(1);
          std::vector<Rational> x(dim);
          for (std::size_t c = 0; c < dim; ++c) x[c] = basis[i][c] + s * basis[j][c];
          return fail(std::move(x), 2 * s * m[i][j]);
        }
      }
      break;
    }
    const std::size_t p = *pivot;
    done[p] = true;
    std::vector<Rational> factor(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (!done[i]) factor[i] = m[i][p] / m[p][p];
    }
    // Schur complement on the remaining indices; row p is left untouched
    for (std::size_t i = 0; i < dim; ++i) {
      if (done[i] || factor[i] == 0) continue;
      for (std::size_t c = 0; c < dim; ++c) basis[i][c] -= factor[i] * basis[p][c];
      for (std::size_t j = 0; j < dim; ++j) {
        if (!done[j]) m[i][j] -= factor[i] * m[p][j];
      }
    }
    for (std::size_t i = 0; i < dim; ++i) {
      if (!done[i]) m[i][p] = m[p][i] = 0;
    }
  }
  return report;
}

/// Per-degree max of |m_w|^{1/n}; purely diagnostic.
struct GrowthReport {
  double gamma_min = 0.0;
  std::vector<std::pair<int, double>> per_degree;
};

inline GrowthReport growth_report(const Distribution& a) {
  GrowthReport report;
  std::vector<double> best(static_cast<std::size_t>(a.degree()) + 1, 0.0);
  for (const auto& [w, c] : a.moments.terms()) {
    const double n = static_cast<double>(w.size());
    const double v = std::pow(abs(c).convert_to<double>(), 1.0 / n);
    best[w.size()] = std::max(best[w.size()], v);
  }
  for (int n = 1; n <= a.degree(); ++n) {
    report.per_degree.emplace_back(n, best[n]);
    report.gamma_min = std::max(report.gamma_min, best[n]);
  }
  return report;
}

} // namespace nckit
