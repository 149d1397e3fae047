#pragma once

// Seeded random value generators shared by the property tests. Everything is
// driven by std::mt19937_64 with explicit seeds so failures reproduce.

#include "fourfold/exactnum.hpp"

#include <random>

namespace fourfold_test {

inline fourfold::Rational rand_rational(std::mt19937_64& rng, long max_abs_num = 1000000,
                                        long max_den = 1000000) {
  std::uniform_int_distribution<long> num(-max_abs_num, max_abs_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return fourfold::Rational(num(rng), den(rng));
}

inline fourfold::exactnum::ExactReal rand_exact(std::mt19937_64& rng, int max_abs_deg = 6,
                                                int max_terms = 4) {
  using fourfold::exactnum::ExactReal;
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> deg(-max_abs_deg, max_abs_deg);
  ExactReal acc;
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) acc += ExactReal::pi_term(deg(rng), rand_rational(rng));
  return acc;
}

}  // namespace fourfold_test
