#pragma once

#include <cstdint>
#include <random>

#include "nckit/ncseries.hpp"
#include "nckit/transforms.hpp"

namespace nckit {

/// Deterministic generator for test series: every coefficient is a/b with
/// a uniform on {-9..9} and b uniform on {1..4}, drawn from std::mt19937_64.
class SeriesGenerator {
public:
  explicit SeriesGenerator(std::uint64_t seed) : rng_(seed) {}

  Rational coefficient() {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    const int a = num(rng_);
    const int b = den(rng_);
    return Rational(a, b);
  }

  /// Draws a coefficient for every word of length 1..degree, degree-lex order.
  NCSeries dense(int k, int degree) {
    NCSeries out(k, degree);
    for (int n = 1; n <= degree; ++n) {
      for_each_word(k, n, [&](const Word& w) { out.set(w, coefficient()); });
    }
    return out;
  }

  Distribution distribution(int k, int degree) { return Distribution(dense(k, degree)); }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

} // namespace nckit
