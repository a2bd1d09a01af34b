#include <doctest.h>

#include <bit>
#include <random>

#include "qrd/errors.hpp"
#include "qrd/gf2.hpp"

using namespace qrd;

namespace {

// Oracle: enumerate all N over the universe and test the parity constraints.
bool brute_nonempty(const std::vector<std::set<Int>>& odd,
                    const std::vector<std::set<Int>>& even,
                    const PrimeUniverse& u) {
  std::size_t n = u.size();
  auto mask_of = [&](const std::set<Int>& s) {
    std::uint64_t m = 0;
    for (const Int& p : s) m |= std::uint64_t(1) << u.index_of(p);
    return m;
  };
  std::vector<std::uint64_t> om, em;
  for (const auto& s : odd) om.push_back(mask_of(s));
  for (const auto& s : even) em.push_back(mask_of(s));
  for (std::uint64_t N = 0; N < (std::uint64_t(1) << n); ++N) {
    bool ok = true;
    for (auto m : om)
      if (std::popcount(N & m) % 2 == 0) ok = false;
    for (auto m : em)
      if (std::popcount(N & m) % 2 == 1) ok = false;
    if (ok) return true;
  }
  return false;
}

PrimeUniverse uni(std::initializer_list<int> primes) {
  std::set<Int> s;
  for (int p : primes) s.insert(Int(p));
  return PrimeUniverse::from(s);
}

}  // namespace

TEST_CASE("vector encoding") {
  PrimeUniverse u = uni({2, 3, 5});
  CHECK(vector_of({}, u).is_zero());
  Gf2Vector v23 = vector_of({Int(2), Int(3)}, u);
  CHECK(v23.get(0));
  CHECK(v23.get(1));
  CHECK(!v23.get(2));
  Gf2Vector v5 = vector_of({Int(5)}, u);
  CHECK(!v5.get(0));
  CHECK(v5.get(2));
  CHECK_THROWS_AS(vector_of({Int(7)}, u), domain_error);
}

TEST_CASE("rank") {
  PrimeUniverse u = uni({2, 3});
  Gf2Vector v2 = vector_of({Int(2)}, u);
  Gf2Vector v3 = vector_of({Int(3)}, u);
  Gf2Vector v23 = vector_of({Int(2), Int(3)}, u);
  CHECK(rank({}) == 0);
  CHECK(rank({v2, v23}) == 2);
  CHECK(rank({v2, v3, v23}) == 2);
  CHECK(is_independent_set({v2, v23}));
  CHECK(!is_independent_set({v2, v3, v23}));
  CHECK(is_independent_set({v2}));
  CHECK(!is_independent_set({vector_of({}, u)}));
}

TEST_CASE("rank is permutation and span invariant") {
  std::mt19937 rng(5);
  PrimeUniverse u = uni({2, 3, 5, 7, 11});
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Gf2Vector> vecs;
    std::size_t count = 1 + rng() % 5;
    for (std::size_t i = 0; i < count; ++i) {
      std::set<Int> s;
      for (const Int& p : u.elements)
        if (rng() % 2) s.insert(p);
      vecs.push_back(vector_of(s, u));
    }
    std::size_t r = rank(vecs);
    std::shuffle(vecs.begin(), vecs.end(), rng);
    CHECK(rank(vecs) == r);
    // appending the xor of everything stays inside the span
    Gf2Vector sum = vector_of({}, u);
    for (const auto& v : vecs) sum.xor_with(v);
    vecs.push_back(sum);
    CHECK(rank(vecs) == r);
  }
}

TEST_CASE("symdiff criterion examples") {
  CHECK(symdiff_criterion({{Int(2)}}, {}));
  CHECK(!symdiff_criterion({{Int(2)}, {Int(3)}, {Int(2), Int(3)}}, {}));
  CHECK(symdiff_criterion({}, {{Int(2), Int(5)}}));
  CHECK_THROWS_AS(symdiff_criterion({{}}, {}), domain_error);
  CHECK_THROWS_AS(symdiff_criterion({{Int(2)}}, {{Int(2)}}), domain_error);
}

TEST_CASE("symdiff criterion agrees with brute force on random instances") {
  std::mt19937 rng(17);
  const int universe_primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = 1 + rng() % 8;
    std::set<Int> primes;
    for (std::size_t i = 0; i < n; ++i) primes.insert(Int(universe_primes[i]));
    PrimeUniverse u = PrimeUniverse::from(primes);

    std::set<std::set<Int>> odd, even;
    std::size_t nsets = 1 + rng() % 6;
    for (std::size_t i = 0; i < nsets; ++i) {
      std::set<Int> s;
      for (const Int& p : u.elements)
        if (rng() % 2) s.insert(p);
      if (rng() % 2) {
        if (!s.empty() && !even.count(s)) odd.insert(s);
      } else {
        if (!odd.count(s)) even.insert(s);
      }
    }
    std::vector<std::set<Int>> ov(odd.begin(), odd.end());
    std::vector<std::set<Int>> ev(even.begin(), even.end());
    REQUIRE(symdiff_criterion(ov, ev) == brute_nonempty(ov, ev, u));
  }
}

TEST_CASE("solution count examples") {
  PrimeUniverse u2 = uni({2});
  CHECK(solution_count({{Int(2)}}, {}, u2) == 1);
  PrimeUniverse u23 = uni({2, 3});
  CHECK(solution_count({}, {}, u23) == 4);
  CHECK(solution_count({{Int(2)}, {Int(3)}, {Int(2), Int(3)}}, {}, u23) == 0);
}

TEST_CASE("solution count dichotomy matches brute force") {
  std::mt19937 rng(23);
  const int universe_primes[] = {2, 3, 5, 7, 11, 13};
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + rng() % 6;
    std::set<Int> primes;
    for (std::size_t i = 0; i < n; ++i) primes.insert(Int(universe_primes[i]));
    PrimeUniverse u = PrimeUniverse::from(primes);
    std::set<std::set<Int>> odd, even;
    std::size_t nsets = rng() % 5;
    for (std::size_t i = 0; i < nsets; ++i) {
      std::set<Int> s;
      for (const Int& p : u.elements)
        if (rng() % 2) s.insert(p);
      if (rng() % 2) {
        if (!s.empty() && !even.count(s)) odd.insert(s);
      } else {
        if (!odd.count(s)) even.insert(s);
      }
    }
    std::vector<std::set<Int>> ov(odd.begin(), odd.end());
    std::vector<std::set<Int>> ev(even.begin(), even.end());
    Int count = solution_count(ov, ev, u);  // brute-force path (n <= 24)
    // dichotomy path: 0 or 2^(n-d)
    std::vector<Gf2Vector> vecs;
    std::set<std::set<Int>> all(ov.begin(), ov.end());
    all.insert(ev.begin(), ev.end());
    for (const auto& s : all)
      if (!s.empty()) vecs.push_back(vector_of(s, u));
    Int expected = symdiff_criterion(ov, ev)
                       ? Int(Int(1) << (n - rank(vecs)))
                       : Int(0);
    REQUIRE(count == expected);
  }
}
