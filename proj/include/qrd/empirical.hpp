#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qrd/density.hpp"
#include "qrd/tuples.hpp"

namespace qrd {

struct EmpiricalReport {
  std::uint64_t prime_bound = 0;
  std::uint64_t primes_considered = 0;  // odd primes up to the bound
  std::uint64_t allowable_count = 0;
  std::uint64_t pi_plus_count = 0;
  Dyadic theoretical_density;
  double estimated() const {
    return allowable_count == 0
               ? 0.0
               : static_cast<double>(pi_plus_count) / static_cast<double>(allowable_count);
  }
  double absolute_error() const {
    double err = estimated() - theoretical_density.approx();
    return err < 0 ? -err : err;
  }
};

struct QCountReport {
  std::uint64_t p = 0;
  int epsilon = 1;
  std::uint64_t q_count = 0;
  Rational predicted;  // p / (b * 2^kappa)
  bool in_pi_plus = false;
  double ratio() const {
    Rational r = predicted;
    double pred = r.num.convert_to<double>() / r.den.convert_to<double>();
    return pred == 0.0 ? 0.0 : static_cast<double>(q_count) / pred;
  }
};

// True iff the odd prime p divides no distinct difference value.
bool is_allowable(std::uint64_t p, const TupleStructure& st);

// True iff for every K in the family the symbol of the differences is
// constant over K; equivalently every even-cardinality product over K is a
// residue.
bool in_pi_plus(std::uint64_t p, const KMaxFamily& kmax, const TupleStructure& st);

// The same predicate evaluated directly on all even-cardinality products;
// used as an independent cross-check for small K.
bool in_pi_plus_by_products(std::uint64_t p, const KMaxFamily& kmax,
                            const TupleStructure& st);

// Sieves the odd primes up to the bound, counts allowable primes and members,
// and attaches the analyzed density.
EmpiricalReport empirical_density(const StandardTuple& t, std::uint64_t bound,
                                  const std::function<void(std::uint64_t, bool, bool)>&
                                      per_prime = nullptr);

// Counts starting points n for which the length-s union lies inside
// [1, p-1] and consists entirely of residues (epsilon = +1) or entirely of
// non-residues (epsilon = -1).
QCountReport q_epsilon_count(std::uint64_t p, const StandardTuple& t, int epsilon);

// Empirical frequency, over odd primes <= bound not dividing any listed
// integer, of the conjunction of required symbol signs.
struct SignConstraint {
  Int z;
  int sign;  // +1 or -1
};
Rational character_density_oracle(const std::vector<SignConstraint>& constraints,
                                  std::uint64_t bound);

}  // namespace qrd
