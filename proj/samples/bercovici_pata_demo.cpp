// Watches the free N-th power of the Boolean 1/N-th power of a random pair
// approach its Boolean Bercovici-Pata image, coefficient by coefficient.

#include <iostream>

#include "nckit/nckit.hpp"

int main() {
  using namespace nckit;

  SeriesGenerator gen(7);
  const Distribution mu = gen.distribution(2, 4);
  const Distribution limit = bp_map(mu);
  const NCSeries bound = bp_limit_tail_bound(mu);

  const Word w{1, 2, 2, 1};
  std::cout << "word " << word_key(w) << ", B(mu) coefficient " << to_string(limit.moments.coefficient(w))
            << ", bound C'_w = " << to_string(bound.coefficient(w)) << "\n\n";

  for (int n : {1, 2, 5, 10, 50, 100}) {
    const Distribution approx = free_power(boolean_power(mu, Rational(1, n)), n);
    const Rational err = abs(approx.moments.coefficient(w) - limit.moments.coefficient(w));
    std::cout << "N=" << n << "  error " << err.convert_to<double>() << "  C'_w/N "
              << (bound.coefficient(w) / n).convert_to<double>() << '\n';
  }

  // the semicircle law is the free central limit: R = z^2
  const SeriesDocument semicircle{NCSeries(1, 6, {{{1, 1}, 1}, {{1, 1, 1, 1}, 2}, {{1, 1, 1, 1, 1, 1}, 5}}),
                                  SeriesKind::moments};
  std::cout << "\nR-transform of the semicircle:\n"
            << to_json({moments_to_r(semicircle.series), SeriesKind::r_transform});
}
