#include "qrd/gf2.hpp"

#include <algorithm>
#include <bit>

#include "qrd/errors.hpp"

namespace qrd {

std::size_t PrimeUniverse::index_of(const Int& p) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), p);
  if (it == elements.end() || *it != p)
    throw domain_error("PrimeUniverse: " + p.str() + " is not in the universe");
  return static_cast<std::size_t>(it - elements.begin());
}

bool PrimeUniverse::contains(const Int& p) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), p);
  return it != elements.end() && *it == p;
}

Gf2Vector vector_of(const std::set<Int>& primeset, const PrimeUniverse& universe) {
  Gf2Vector v;
  v.universe = &universe;
  v.words.assign((universe.size() + 63) / 64, 0);
  for (const Int& p : primeset) v.set(universe.index_of(p));
  return v;
}

std::size_t rank(const std::vector<Gf2Vector>& vectors) {
  if (vectors.empty()) return 0;
  for (const Gf2Vector& v : vectors)
    if (v.universe && vectors.front().universe &&
        !(*v.universe == *vectors.front().universe))
      throw domain_error("rank: vectors from mixed universes");
  std::vector<std::vector<std::uint64_t>> basis;
  std::size_t r = 0;
  for (const Gf2Vector& v : vectors) {
    std::vector<std::uint64_t> w = v.words;
    for (const auto& b : basis) {
      // reduce by the basis row whose leading bit w still has
      std::size_t lead = 0;
      for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i]) {
          lead = i * 64 + static_cast<std::size_t>(std::countr_zero(b[i]));
          break;
        }
      if ((w[lead / 64] >> (lead % 64)) & 1)
        for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= b[i];
    }
    bool zero = true;
    for (auto x : w)
      if (x) zero = false;
    if (!zero) {
      basis.push_back(std::move(w));
      ++r;
    }
  }
  return r;
}

bool is_independent_set(const std::vector<Gf2Vector>& vectors) {
  for (const Gf2Vector& v : vectors)
    if (v.is_zero()) return false;
  return rank(vectors) == vectors.size();
}

namespace {

constexpr std::size_t kFamilyCap = 20;

std::set<Int> family_union(const std::vector<std::set<Int>>& fam) {
  std::set<Int> u;
  for (const auto& s : fam) u.insert(s.begin(), s.end());
  return u;
}

}  // namespace

bool symdiff_criterion(const std::vector<std::set<Int>>& odd_family,
                       const std::vector<std::set<Int>>& even_family) {
  std::set<std::set<Int>> odd(odd_family.begin(), odd_family.end());
  std::set<std::set<Int>> even(even_family.begin(), even_family.end());
  if (odd.count(std::set<Int>{}))
    throw domain_error("symdiff_criterion: empty set in the odd family");
  for (const auto& s : odd)
    if (even.count(s))
      throw domain_error("symdiff_criterion: families are not disjoint");
  even.insert(std::set<Int>{});

  std::vector<std::set<Int>> members(odd.begin(), odd.end());
  std::size_t even_start = members.size();
  members.insert(members.end(), even.begin(), even.end());
  std::size_t f = members.size();
  if (f > kFamilyCap + 1)
    throw size_limit_error("symdiff_criterion: family size " +
                           std::to_string(f - 1) + " exceeds the cap of " +
                           std::to_string(kFamilyCap));

  std::set<Int> primes = family_union(odd_family);
  for (const auto& s : even_family) primes.insert(s.begin(), s.end());
  PrimeUniverse u = PrimeUniverse::from(primes);
  std::vector<Gf2Vector> vecs;
  vecs.reserve(f);
  for (const auto& s : members) vecs.push_back(vector_of(s, u));

  std::size_t nwords = vecs.empty() ? 0 : vecs.front().words.size();
  std::vector<std::uint64_t> acc(nwords);
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << f); ++mask) {
    if (std::popcount(mask) % 2 == 0) continue;
    std::uint64_t even_part = mask >> even_start;
    if (std::popcount(even_part) % 2 == 1) continue;
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t i = 0; i < f; ++i)
      if ((mask >> i) & 1)
        for (std::size_t w = 0; w < nwords; ++w) acc[w] ^= vecs[i].words[w];
    bool zero = true;
    for (auto x : acc)
      if (x) zero = false;
    if (zero) return false;
  }
  return true;
}

Int solution_count(const std::vector<std::set<Int>>& odd_family,
                   const std::vector<std::set<Int>>& even_family,
                   const PrimeUniverse& universe) {
  std::size_t n = universe.size();
  std::set<std::set<Int>> all(odd_family.begin(), odd_family.end());
  all.insert(even_family.begin(), even_family.end());

  if (n <= 24) {
    std::vector<std::uint64_t> odd_masks, even_masks;
    auto mask_of = [&](const std::set<Int>& s) {
      std::uint64_t m = 0;
      for (const Int& p : s) m |= std::uint64_t(1) << universe.index_of(p);
      return m;
    };
    for (const auto& s : odd_family) odd_masks.push_back(mask_of(s));
    for (const auto& s : even_family) even_masks.push_back(mask_of(s));
    Int count = 0;
    for (std::uint64_t N = 0; N < (std::uint64_t(1) << n); ++N) {
      bool ok = true;
      for (auto m : odd_masks)
        if (std::popcount(N & m) % 2 == 0) {
          ok = false;
          break;
        }
      if (ok)
        for (auto m : even_masks)
          if (std::popcount(N & m) % 2 == 1) {
            ok = false;
            break;
          }
      if (ok) ++count;
    }
    return count;
  }

  // Large universe: the count is 0 or 2^(n-d).
  if (!symdiff_criterion(odd_family, even_family)) return 0;
  std::vector<Gf2Vector> vecs;
  for (const auto& s : all) {
    if (s.empty()) continue;  // drop the empty set before taking the span
    vecs.push_back(vector_of(s, universe));
  }
  std::size_t d = rank(vecs);
  return Int(1) << (n - d);
}

}  // namespace qrd
