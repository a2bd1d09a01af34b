#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "qrd/rational.hpp"

namespace qrd {

// Ascending universe of distinct primes; vectors over the 2-element field are
// indexed by position in this list.
struct PrimeUniverse {
  std::vector<Int> elements;

  static PrimeUniverse from(const std::set<Int>& primes) {
    PrimeUniverse u;
    u.elements.assign(primes.begin(), primes.end());
    return u;
  }

  std::size_t size() const { return elements.size(); }
  std::size_t index_of(const Int& p) const;
  bool contains(const Int& p) const;

  friend bool operator==(const PrimeUniverse& a, const PrimeUniverse& b) {
    return a.elements == b.elements;
  }
};

// Bit vector over a PrimeUniverse.
struct Gf2Vector {
  const PrimeUniverse* universe = nullptr;
  std::vector<std::uint64_t> words;

  bool is_zero() const {
    for (auto w : words)
      if (w) return false;
    return true;
  }
  bool get(std::size_t i) const { return (words[i / 64] >> (i % 64)) & 1; }
  void set(std::size_t i) { words[i / 64] |= std::uint64_t(1) << (i % 64); }
  void xor_with(const Gf2Vector& o) {
    for (std::size_t i = 0; i < words.size(); ++i) words[i] ^= o.words[i];
  }
  friend bool operator==(const Gf2Vector& a, const Gf2Vector& b) {
    return a.words == b.words;
  }
};

// Characteristic vector of a prime set within the universe.
Gf2Vector vector_of(const std::set<Int>& primeset, const PrimeUniverse& universe);

// Rank over the 2-element field; 0 for an empty collection.
std::size_t rank(const std::vector<Gf2Vector>& vectors);

// True iff rank equals cardinality; a zero vector makes the set dependent.
bool is_independent_set(const std::vector<Gf2Vector>& vectors);

// Decides whether some N exists with |N ∩ S| odd for every S in odd_family
// and |N ∩ T| even for every T in even_family, using the repeated
// symmetric-difference criterion: for every odd-cardinality subset U of
// odd_family ∪ even_family ∪ {∅}, either |U ∩ (even_family ∪ {∅})| is odd or
// the repeated symmetric difference over U is nonempty.
bool symdiff_criterion(const std::vector<std::set<Int>>& odd_family,
                       const std::vector<std::set<Int>>& even_family);

// Exact number of solution sets N ⊆ universe: brute force for small
// universes, otherwise 0 or 2^(n-d) with the criterion deciding which.
Int solution_count(const std::vector<std::set<Int>>& odd_family,
                   const std::vector<std::set<Int>>& even_family,
                   const PrimeUniverse& universe);

}  // namespace qrd
