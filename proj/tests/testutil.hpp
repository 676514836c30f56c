// testutil.hpp
//
// Small helpers shared by the test binaries: a seeded RNG and random
// matrix generators so the property tests are reproducible run to run.

#ifndef STRAT_TESTUTIL_HPP
#define STRAT_TESTUTIL_HPP

#include <random>

#include "strat/matrix.hpp"

namespace strat::testutil {

inline std::mt19937 rng(unsigned seed = 12345) { return std::mt19937(seed); }

inline Mat rand_mat(std::mt19937& g, int rows, int cols, Field f = Field::rationals(),
                    int lo = -4, int hi = 4) {
  std::uniform_int_distribution<int> d(lo, hi);
  Mat m(rows, cols, f);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = f.canon(Scalar(d(g)));
  return m;
}

}  // namespace strat::testutil

#endif
