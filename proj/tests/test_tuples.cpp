#include <doctest.h>

#include <random>
#include <set>

#include "qrd/arith.hpp"
#include "qrd/errors.hpp"
#include "qrd/tuples.hpp"

using namespace qrd;

namespace {

StandardTuple make(std::vector<long long> a, std::vector<long long> b, int s) {
  StandardTuple t;
  for (long long x : a) t.a.push_back(Int(x));
  for (long long x : b) t.b.push_back(Int(x));
  t.s = s;
  return t;
}

Rational rat(long long n, long long d) { return Rational(Int(n), Int(d)); }

}  // namespace

TEST_CASE("build_structure reference tuple") {
  TupleStructure st = build_structure(make({1, 9}, {2, 6}, 2));
  CHECK(st.k() == 2);
  CHECK(st.B == std::vector<Int>{2, 6});
  CHECK(st.Q_of(1) == std::set<Rational>{rat(1, 2)});
  CHECK(st.Q_of(2) == std::set<Rational>{rat(3, 2)});
  CHECK(st.S_of(1) == std::set<Rational>{rat(1, 2), rat(3, 2)});
  CHECK(st.S_of(2) == std::set<Rational>{rat(3, 2), rat(5, 2)});
  CHECK(st.sigma == std::vector<Int>{2, 6});
}

TEST_CASE("build_structure merges equal point sets") {
  TupleStructure st = build_structure(make({2, 4}, {1, 2}, 2));
  CHECK(st.k() == 2);
  CHECK(st.Q_of(1) == std::set<Rational>{rat(2, 1)});
  CHECK(st.Q_of(2) == std::set<Rational>{rat(2, 1)});
  CHECK(st.S_of(1) == st.S_of(2));
  CHECK(st.S_of(1) == std::set<Rational>{rat(2, 1), rat(3, 1)});
  CHECK(st.sigma == std::vector<Int>{1, 2});
}

TEST_CASE("build_structure square differences") {
  TupleStructure st = build_structure(make({0, 0}, {4, 9}, 3));
  CHECK(st.sigma == std::vector<Int>{1, 1});
}

TEST_CASE("build_structure groups repeated differences") {
  TupleStructure st = build_structure(make({1, 3, 3}, {2, 2, 6}, 2));
  CHECK(st.k() == 2);
  CHECK(st.B == std::vector<Int>{2, 6});
  CHECK(st.A_of[0] == std::set<Int>{1, 3});
  CHECK(st.A_of[1] == std::set<Int>{3});
}

TEST_CASE("tuple validation names the violated invariant") {
  CHECK_THROWS_AS(build_structure(make({1}, {2}, 2)), invalid_tuple_error);
  CHECK_THROWS_AS(build_structure(make({1, 1}, {2, 2}, 2)), invalid_tuple_error);
  CHECK_THROWS_AS(build_structure(make({1, 2}, {2, 0}, 2)), invalid_tuple_error);
  CHECK_THROWS_AS(build_structure(make({1, 2}, {2, 3}, 1)), invalid_tuple_error);
}

TEST_CASE("kmax on the reference tuple") {
  TupleStructure st = build_structure(make({1, 9}, {2, 6}, 2));
  KMaxFamily fam = kmax_direct(st);
  CHECK(fam.members ==
        std::set<std::set<int>>{{1}, {1, 2}, {2}});
}

TEST_CASE("kmax with identical point sets") {
  TupleStructure st = build_structure(make({2, 4}, {1, 2}, 2));
  CHECK(kmax_direct(st).members == std::set<std::set<int>>{{1, 2}});
}

TEST_CASE("kmax with disjoint point sets is all singletons") {
  TupleStructure st = build_structure(make({1, 100}, {2, 3}, 2));
  for (const auto& K : kmax_direct(st).members) CHECK(K.size() == 1);
}

TEST_CASE("kmax patterns have witnesses") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t m = 2 + rng() % 4;
    StandardTuple t;
    t.s = 2 + static_cast<int>(rng() % 5);
    std::set<std::pair<long long, long long>> seen;
    while (t.a.size() < m) {
      long long av = static_cast<long long>(rng() % 31);
      long long bv = static_cast<long long>(rng() % 30) + 1;
      if (seen.insert({av, bv}).second) {
        t.a.push_back(Int(av));
        t.b.push_back(Int(bv));
      }
    }
    TupleStructure st = build_structure(t);
    for (const auto& K : kmax_direct(st).members) {
      bool witnessed = false;
      std::set<Rational> all;
      for (const auto& s : st.S) all.insert(s.begin(), s.end());
      for (const Rational& point : all) {
        std::set<int> pattern;
        for (int i = 1; i <= st.k(); ++i)
          if (st.S_of(i).count(point)) pattern.insert(i);
        if (pattern == K) witnessed = true;
      }
      REQUIRE(witnessed);
    }
  }
}

TEST_CASE("admissibility") {
  CHECK(is_admissible(make({1, 9}, {2, 6}, 2)));
  CHECK(!is_admissible(make({1, 2}, {2, 4}, 2)));   // 1*4 - 2*2 = 0
  CHECK(!is_admissible(make({1, 2}, {2, 2}, 2)));   // repeated difference
}

TEST_CASE("chain generator example") {
  StandardTuple t = generate_chain({Int(1)}, {Int(1), Int(2)}, {Int(3)}, 2);
  CHECK(t.a == std::vector<Int>{1, 9});
  CHECK(t.b == std::vector<Int>{2, 6});
  CHECK(t.a[1] * t.b[0] - t.a[0] * t.b[1] == Int(1) * t.b[0] * t.b[1]);
  CHECK(is_admissible(t));
  CHECK_THROWS_AS(generate_chain({Int(1)}, {Int(1), Int(2)}, {Int(1)}, 2),
                  domain_error);
  CHECK_THROWS_AS(generate_chain({Int(0)}, {Int(1), Int(2)}, {Int(2)}, 2),
                  domain_error);
}

TEST_CASE("chain generator cross identity holds exactly") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t k = 2 + rng() % 7;
    std::vector<Int> gaps, mult;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      gaps.push_back(Int(1 + rng() % 10));
      mult.push_back(Int(2 + rng() % 6));
    }
    StandardTuple t = generate_chain(
        gaps, {Int(1 + rng() % 20), Int(1 + rng() % 20)}, mult, 2);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        Int gap_sum = 0;
        for (std::size_t r = j; r < i; ++r) gap_sum += gaps[r];
        REQUIRE(t.a[i] * t.b[j] - t.a[j] * t.b[i] == gap_sum * t.b[i] * t.b[j]);
      }
    REQUIRE(is_admissible(t));
  }
}

TEST_CASE("prime chain generator has nested squarefree supports") {
  StandardTuple t = generate_chain_primes({Int(1), Int(2), Int(1)}, 2);
  CHECK(t.b == std::vector<Int>{2, 6, 30, 210});
  std::set<Int> prev;
  for (const Int& b : t.b) {
    CHECK(squarefree_part(b) == b);
    std::set<Int> support = pi_odd(b);
    CHECK(prev.size() < support.size());
    for (const Int& p : prev) CHECK(support.count(p));
    prev = support;
  }
}

TEST_CASE("prime chain generator stays exact at length 20") {
  std::vector<Int> gaps(20, Int(1));
  StandardTuple t = generate_chain_primes(gaps, 2);
  CHECK(t.a.size() == 21);
  for (std::size_t i = 0; i < t.a.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Int gap_sum = Int(i - j);  // all gaps are 1
      REQUIRE(t.a[i] * t.b[j] - t.a[j] * t.b[i] == gap_sum * t.b[i] * t.b[j]);
    }
}

TEST_CASE("gap merging for prescribed blocks") {
  CHECK(gaps_for_quotient_spec({{Int(1)}}, 2) == std::vector<Int>{1});
  CHECK(gaps_for_quotient_spec({{Int(1)}, {Int(1)}}, 2) ==
        std::vector<Int>{1, 2, 1});
  CHECK(gaps_for_quotient_spec({{Int(3), Int(2), Int(2)}}, 8) ==
        std::vector<Int>{3, 2, 2});
  CHECK_THROWS_AS(gaps_for_quotient_spec({{Int(2)}}, 2), domain_error);
  CHECK_THROWS_AS(gaps_for_quotient_spec({{}}, 2), domain_error);
}
