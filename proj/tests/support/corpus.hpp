#pragma once

#include <random>
#include <set>

#include "qrd/tuples.hpp"

namespace qrd_test {

// Random tuples with m in [2,5], s in [2,6], a_i in [0,30], b_i in [1,30].
// Half the draws align the points a_i/b_i on a coarse grid so that the
// overlap machinery is exercised; uniform draws alone are almost always
// pairwise disjoint.
inline qrd::StandardTuple random_tuple(std::mt19937& rng) {
  std::size_t m = 2 + rng() % 4;
  qrd::StandardTuple t;
  t.s = 2 + static_cast<int>(rng() % 5);
  bool clustered = rng() % 2 == 0;
  std::set<std::pair<long long, long long>> seen;
  while (t.a.size() < m) {
    long long av, bv;
    if (clustered) {
      bv = 1 + static_cast<long long>(rng() % 12);
      long long w = static_cast<long long>(rng() % (30 / bv + 1));
      av = w * bv;
      if (bv % 2 == 0 && rng() % 2) av += bv / 2;  // half-integer point
      if (av > 30) av = w * bv;
    } else {
      av = static_cast<long long>(rng() % 31);
      bv = static_cast<long long>(rng() % 30) + 1;
    }
    if (seen.insert({av, bv}).second) {
      t.a.push_back(qrd::Int(av));
      t.b.push_back(qrd::Int(bv));
    }
  }
  return t;
}

}  // namespace qrd_test
