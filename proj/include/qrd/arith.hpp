#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "qrd/rational.hpp"

namespace qrd {

// Prime factorization with primes strictly increasing and exponents >= 1.
struct Factorization {
  std::vector<std::pair<Int, unsigned>> factors;

  Int value() const {
    Int v = 1;
    for (const auto& [p, e] : factors)
      for (unsigned i = 0; i < e; ++i) v *= p;
    return v;
  }
};

struct PrimeTable {
  std::uint64_t bound = 0;
  std::vector<std::uint64_t> primes;  // all primes <= bound, ascending
};

// All primes <= bound; bound < 2 is rejected.
PrimeTable sieve_primes(std::uint64_t bound);

// Trial-division factorization. Intended for desk-scale inputs; numbers whose
// second-largest prime factor exceeds ~10^7 are rejected rather than churned.
Factorization factorize(const Int& n);

// Product of the primes dividing n to odd multiplicity; n / result is a
// perfect square.
Int squarefree_part(const Int& n);

// Prime support of squarefree_part(z); empty iff z is a perfect square.
std::set<Int> pi_odd(const Int& z);

// Legendre symbol of z modulo the odd prime p, via Euler's criterion.
// Returns 0 iff p | z, +1 for nonzero residues, -1 for non-residues.
int legendre(const Int& z, std::uint64_t p);
int legendre(std::int64_t z, std::uint64_t p);

// Memory budget for residue tables, in bytes. Defaults to 16 MiB (p up to
// 2^24); override with the QRD_MEMORY_MB environment variable.
std::uint64_t residue_table_budget_bytes();

// table[z] = legendre(z, p) for z in [1, p-1]; table[0] = 0. Exactly
// (p-1)/2 entries equal +1.
std::vector<std::int8_t> residue_table(std::uint64_t p);

}  // namespace qrd
