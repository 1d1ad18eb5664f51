#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nckit/error.hpp"
#include "nckit/nc_table.hpp"
#include "nckit/partitions.hpp"
#include "nckit/rational.hpp"

namespace nckit {

/// A word (i_1, ..., i_n) over the letters {1..k}; the index of a coefficient.
using Word = std::vector<int>;

/// Degree first, then lexicographic.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// "1,2,1"
inline std::string word_key(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

/// Truncated non-commutative power series in z_1..z_k with zero constant
/// term and exact rational coefficients. Only nonzero coefficients of words
/// of length 1..degree are stored.
class NCSeries {
public:
  using Terms = std::map<Word, Rational, WordOrder>;

  NCSeries(int k, int degree) : k_(k), degree_(degree) {
    if (k < 1) throw domain_error("series needs at least one indeterminate");
    if (degree < 1) throw domain_error("series truncation degree must be positive");
  }

  NCSeries(int k, int degree, std::initializer_list<std::pair<Word, Rational>> terms)
      : NCSeries(k, degree) {
    for (const auto& [w, c] : terms) set(w, c);
  }

  int k() const { return k_; }
  int degree() const { return degree_; }
  const Terms& terms() const& { return terms_; }
  // by value on temporaries, so `for (... : subtract(f, g).terms())` is safe
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }

  void check_word(const Word& w) const {
    if (w.empty()) throw domain_error("empty word (constant terms are not represented)");
    if (static_cast<int>(w.size()) > degree_) {
      throw domain_error("word " + word_key(w) + " longer than truncation degree " +
                         std::to_string(degree_));
    }
    for (int letter : w) {
      if (letter < 1 || letter > k_) {
        throw domain_error("letter " + std::to_string(letter) + " outside {1.." +
                           std::to_string(k_) + "}");
      }
    }
  }

  Rational coefficient(const Word& w) const {
    check_word(w);
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void set(const Word& w, const Rational& c) {
    check_word(w);
    if (c == 0) terms_.erase(w);
    else terms_[w] = c;
  }

  void add_to(const Word& w, const Rational& c) {
    check_word(w);
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend bool operator==(const NCSeries&, const NCSeries&) = default;

private:
  int k_ = 1;
  int degree_ = 1;
  Terms terms_;
};

/// The series z_1 + ... + z_k, the two-sided unit of boxed convolution.
inline NCSeries delta(int k, int degree) {
  NCSeries out(k, degree);
  for (int i = 1; i <= k; ++i) out.set({i}, 1);
  return out;
}

/// Drops all words longer than `degree` (which must not exceed f.degree()).
inline NCSeries truncate(const NCSeries& f, int degree) {
  if (degree > f.degree()) throw domain_error("cannot truncate to a higher degree");
  NCSeries out(f.k(), degree);
  for (const auto& [w, c] : f.terms()) {
    if (static_cast<int>(w.size()) <= degree) out.set(w, c);
  }
  return out;
}

/// Calls visit(word) for every word of length n over {1..k}, lexicographically.
template <typename Visitor>
void for_each_word(int k, int n, Visitor&& visit) {
  Word w(static_cast<std::size_t>(n), 1);
  while (true) {
    visit(std::as_const(w));
    int i = n - 1;
    while (i >= 0 && w[i] == k) w[i--] = 1;
    if (i < 0) return;
    ++w[i];
  }
}

namespace detail {

inline std::size_t int_pow(int base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

// Dense per-degree coefficient table; words are indexed by their base-k code
// with 0-based letters, most significant letter first.
class Dense {
public:
  Dense(int k, int degree) : k_(k), degree_(degree), by_degree_(static_cast<std::size_t>(degree) + 1) {
    std::size_t total = 0;
    for (int n = 1; n <= degree; ++n) {
      const std::size_t words = int_pow(k, n);
      total += words;
      if (total > (std::size_t{1} << 22)) {
        throw size_error("series with k=" + std::to_string(k) + ", degree=" +
                         std::to_string(degree) + " has too many words for dense evaluation");
      }
      by_degree_[n].assign(words, Rational(0));
    }
  }

  explicit Dense(const NCSeries& f) : Dense(f.k(), f.degree()) {
    for (const auto& [w, c] : f.terms()) by_degree_[w.size()][encode(w)] = c;
  }

  int k() const { return k_; }
  int degree() const { return degree_; }
  std::size_t words(int n) const { return by_degree_[n].size(); }

  const Rational& at(int n, std::size_t code) const { return by_degree_[n][code]; }
  Rational& at(int n, std::size_t code) { return by_degree_[n][code]; }

  std::size_t encode(std::span<const int> w) const {
    std::size_t code = 0;
    for (int letter : w) code = code * static_cast<std::size_t>(k_) + static_cast<std::size_t>(letter - 1);
    return code;
  }

  void decode(std::size_t code, int n, std::vector<int>& letters) const {
    letters.resize(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
      letters[i] = static_cast<int>(code % static_cast<std::size_t>(k_));
      code /= static_cast<std::size_t>(k_);
    }
  }

  /// Product over blocks of the coefficient of the restricted word; the
  /// letters are 0-based as produced by decode().
  Rational block_product(const std::vector<int>& letters, const std::vector<Block>& blocks) const {
    Rational prod(1);
    for (const Block& b : blocks) {
      std::size_t code = 0;
      for (int e : b) code = code * static_cast<std::size_t>(k_) + static_cast<std::size_t>(letters[e - 1]);
      const Rational& c = by_degree_[b.size()][code];
      if (c == 0) return Rational(0);
      prod *= c;
    }
    return prod;
  }

  NCSeries to_series() const {
    NCSeries out(k_, degree_);
    std::vector<int> letters;
    for (int n = 1; n <= degree_; ++n) {
      for (std::size_t code = 0; code < by_degree_[n].size(); ++code) {
        if (by_degree_[n][code] == 0) continue;
        decode(code, n, letters);
        Word w(letters.begin(), letters.end());
        for (int& l : w) ++l;
        out.set(w, by_degree_[n][code]);
      }
    }
    return out;
  }

private:
  int k_;
  int degree_;
  std::vector<std::vector<Rational>> by_degree_;
};

inline void require_same_k(const NCSeries& f, const NCSeries& g) {
  if (f.k() != g.k()) {
    throw domain_error("series over different numbers of indeterminates (" + std::to_string(f.k()) +
                       " vs " + std::to_string(g.k()) + ")");
  }
}

} // namespace detail

inline Rational coefficient(const NCSeries& f, const Word& w) { return f.coefficient(w); }

/// w restricted to the positions of `block` (1-based, ascending).
inline Word restrict_word(const Word& w, std::span<const int> block) {
  Word out;
  out.reserve(block.size());
  for (int e : block) out.push_back(w[static_cast<std::size_t>(e - 1)]);
  return out;
}

/// Product over blocks B of p of the coefficient of w|B.
inline Rational generalized_coefficient(const NCSeries& f, const Word& w, const Partition& p) {
  f.check_word(w);
  if (p.size() != static_cast<int>(w.size())) {
    throw domain_error("partition of " + std::to_string(p.size()) + " elements for a word of length " +
                       std::to_string(w.size()));
  }
  Rational prod(1);
  for (const Block& b : p.blocks()) {
    prod *= f.coefficient(restrict_word(w, b));
    if (prod == 0) break;
  }
  return prod;
}

inline NCSeries add(const NCSeries& f, const NCSeries& g) {
  detail::require_same_k(f, g);
  NCSeries out(f.k(), std::min(f.degree(), g.degree()));
  for (const auto* s : {&f, &g}) {
    for (const auto& [w, c] : s->terms()) {
      if (static_cast<int>(w.size()) <= out.degree()) out.add_to(w, c);
    }
  }
  return out;
}

inline NCSeries scale(const NCSeries& f, const Rational& t) {
  NCSeries out(f.k(), f.degree());
  if (t == 0) return out;
  for (const auto& [w, c] : f.terms()) out.set(w, c * t);
  return out;
}

/// Coefficientwise absolute value.
inline NCSeries abs_coefficients(const NCSeries& f) {
  NCSeries out(f.k(), f.degree());
  for (const auto& [w, c] : f.terms()) out.set(w, abs(c));
  return out;
}

inline NCSeries subtract(const NCSeries& f, const NCSeries& g) { return add(f, scale(g, -1)); }

/// Concatenation product, truncated at the smaller degree.
inline NCSeries multiply(const NCSeries& f, const NCSeries& g) {
  detail::require_same_k(f, g);
  NCSeries out(f.k(), std::min(f.degree(), g.degree()));
  const std::size_t cap = static_cast<std::size_t>(out.degree());
  for (const auto& [u, a] : f.terms()) {
    if (u.size() >= cap) break; // terms are ordered by length
    for (const auto& [v, b] : g.terms()) {
      if (u.size() + v.size() > cap) break;
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      out.add_to(uv, a * b);
    }
  }
  return out;
}

/// sign=+1: f/(1+f) = f - f^2 + f^3 - ...; sign=-1: f/(1-f) = f + f^2 + ...
/// Exact at the truncation degree since f^j has no words shorter than j.
inline NCSeries geometric_ratio(const NCSeries& f, int sign) {
  if (sign != 1 && sign != -1) throw domain_error("geometric_ratio: sign must be +1 or -1");
  NCSeries out = f;
  NCSeries power = f;
  for (int j = 2; j <= f.degree() && !power.is_zero(); ++j) {
    power = multiply(power, f);
    const bool negate = sign == 1 && j % 2 == 0;
    out = add(out, negate ? scale(power, -1) : power);
  }
  return out;
}

/// Cf_w(f * g) = sum over pi in NC(n) of Cf_{w;pi}(f) Cf_{w;K(pi)}(g).
inline NCSeries boxed_convolution(const NCSeries& f, const NCSeries& g) {
  detail::require_same_k(f, g);
  const int degree = std::min(f.degree(), g.degree());
  const detail::Dense df(truncate(f, degree));
  const detail::Dense dg(truncate(g, degree));
  detail::Dense out(f.k(), degree);
  std::vector<int> letters;
  for (int n = 1; n <= degree; ++n) {
    const auto& table = nc_table(n);
    for (std::size_t code = 0; code < out.words(n); ++code) {
      out.decode(code, n, letters);
      Rational sum(0);
      for (const NcEntry& e : table) {
        const Rational a = df.block_product(letters, e.blocks);
        if (a == 0) continue;
        sum += a * dg.block_product(letters, e.kreweras_blocks);
      }
      out.at(n, code) = sum;
    }
  }
  return out.to_series();
}

/// Generalized coefficient of f * g at (w, q): the sum over pi <= q of
/// Cf_{w;pi}(f) Cf_{w;K_q(pi)}(g).
inline Rational boxed_convolution_generalized(const NCSeries& f, const NCSeries& g, const Word& w,
                                              const Partition& q) {
  detail::require_same_k(f, g);
  detail::require_noncrossing(q, "boxed_convolution_generalized");
  const int n = static_cast<int>(w.size());
  if (q.size() != n) throw domain_error("boxed_convolution_generalized: partition/word size mismatch");
  f.check_word(w);
  g.check_word(w);
  Rational sum(0);
  for (const NcEntry& e : nc_table(n)) {
    if (!refines(e.partition, q)) continue;
    const Rational a = generalized_coefficient(f, w, e.partition);
    if (a == 0) continue;
    sum += a * generalized_coefficient(g, w, relative_kreweras(e.partition, q));
  }
  return sum;
}

} // namespace nckit
