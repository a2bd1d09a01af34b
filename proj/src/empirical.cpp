#include "qrd/empirical.hpp"

#include <algorithm>
#include <bit>

#include "qrd/arith.hpp"
#include "qrd/errors.hpp"

namespace qrd {

bool is_allowable(std::uint64_t p, const TupleStructure& st) {
  if (p < 3 || p % 2 == 0)
    throw domain_error("is_allowable: p must be an odd prime");
  for (const Int& b : st.B)
    if (b % Int(p) == 0) return false;
  return true;
}

bool in_pi_plus(std::uint64_t p, const KMaxFamily& kmax, const TupleStructure& st) {
  if (!is_allowable(p, st))
    throw domain_error("in_pi_plus: p is not allowable for this tuple");
  std::vector<int> chi(static_cast<std::size_t>(st.k()));
  for (int i = 1; i <= st.k(); ++i)
    chi[static_cast<std::size_t>(i - 1)] = legendre(st.B_of(i), p);
  for (const std::set<int>& K : kmax.members) {
    int sign = 0;
    for (int i : K) {
      int c = chi[static_cast<std::size_t>(i - 1)];
      if (sign == 0)
        sign = c;
      else if (sign != c)
        return false;
    }
  }
  return true;
}

bool in_pi_plus_by_products(std::uint64_t p, const KMaxFamily& kmax,
                            const TupleStructure& st) {
  if (!is_allowable(p, st))
    throw domain_error("in_pi_plus_by_products: p is not allowable");
  for (const std::set<int>& K : kmax.members) {
    std::vector<int> idx(K.begin(), K.end());
    std::size_t n = idx.size();
    if (n > 20) throw size_limit_error("in_pi_plus_by_products: K too large");
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
      int c = std::popcount(mask);
      if (c % 2 != 0) continue;
      Int prod = 1;
      for (std::size_t j = 0; j < n; ++j)
        if ((mask >> j) & 1) prod *= st.B_of(idx[j]);
      if (legendre(prod, p) != 1) return false;
    }
  }
  return true;
}

EmpiricalReport empirical_density(
    const StandardTuple& t, std::uint64_t bound,
    const std::function<void(std::uint64_t, bool, bool)>& per_prime) {
  if (bound < 100) throw domain_error("empirical_density: bound must be >= 100");
  DensityAnalysis analysis = analyze(t);
  const TupleStructure& st = analysis.structure;

  EmpiricalReport report;
  report.prime_bound = bound;
  report.theoretical_density = analysis.density_plus;

  PrimeTable table = sieve_primes(bound);
  for (std::uint64_t p : table.primes) {
    if (p == 2) continue;
    ++report.primes_considered;
    bool allowed = is_allowable(p, st);
    bool member = allowed && in_pi_plus(p, analysis.kmax, st);
    if (allowed) {
      ++report.allowable_count;
      if (member) ++report.pi_plus_count;
    }
    if (per_prime) per_prime(p, allowed, member);
  }
  return report;
}

QCountReport q_epsilon_count(std::uint64_t p, const StandardTuple& t, int epsilon) {
  if (epsilon != 1 && epsilon != -1)
    throw domain_error("q_epsilon_count: epsilon must be +1 or -1");
  t.validate();
  DensityAnalysis analysis = analyze(t);
  const TupleStructure& st = analysis.structure;

  QCountReport report;
  report.p = p;
  report.epsilon = epsilon;

  // b * 2^kappa with b the largest difference and kappa the size of the
  // union of the point sets.
  Int b_max = *std::max_element(st.B.begin(), st.B.end());
  std::set<Rational> s_union;
  for (const auto& si : st.S) s_union.insert(si.begin(), si.end());
  Int denom = b_max << s_union.size();
  report.predicted = Rational(Int(p), denom);
  report.in_pi_plus = is_allowable(p, st) && in_pi_plus(p, analysis.kmax, st);

  // The union fits inside [1, p-1] iff the top element of every progression
  // does, which bounds the admissible n.
  Int bound = Int(p) - 1;
  std::optional<Int> n_max;
  for (std::size_t j = 0; j < t.a.size(); ++j) {
    if (t.a[j] + t.b[j] * Int(t.s) > bound) {  // not even n = 1 fits
      n_max = 0;
      break;
    }
    Int cap = (bound - t.a[j]) / t.b[j] - (t.s - 1);
    if (!n_max || cap < *n_max) n_max = cap;
  }
  if (*n_max < 1) return report;

  std::vector<std::int8_t> table = residue_table(p);
  std::uint64_t last = n_max->convert_to<std::uint64_t>();
  std::vector<std::uint64_t> a_small(t.a.size()), b_small(t.a.size());
  for (std::size_t j = 0; j < t.a.size(); ++j) {
    a_small[j] = t.a[j].convert_to<std::uint64_t>();
    b_small[j] = t.b[j].convert_to<std::uint64_t>();
  }
  for (std::uint64_t n = 1; n <= last; ++n) {
    bool all_match = true;
    for (std::size_t j = 0; j < a_small.size() && all_match; ++j)
      for (int i = 0; i < t.s; ++i)
        if (table[a_small[j] + b_small[j] * (n + static_cast<std::uint64_t>(i))] !=
            epsilon) {
          all_match = false;
          break;
        }
    if (all_match) ++report.q_count;
  }
  return report;
}

Rational character_density_oracle(const std::vector<SignConstraint>& constraints,
                                  std::uint64_t bound) {
  if (bound < 100)
    throw domain_error("character_density_oracle: bound must be >= 100");
  for (const auto& c : constraints)
    if (c.sign != 1 && c.sign != -1)
      throw domain_error("character_density_oracle: signs must be +1 or -1");
  PrimeTable table = sieve_primes(bound);
  Int matching = 0, considered = 0;
  for (std::uint64_t p : table.primes) {
    if (p == 2) continue;
    bool defined = true;
    bool match = true;
    for (const auto& c : constraints) {
      int chi = legendre(c.z, p);
      if (chi == 0) {
        defined = false;
        break;
      }
      if (chi != c.sign) match = false;
    }
    if (!defined) continue;
    ++considered;
    if (match) ++matching;
  }
  if (considered == 0) throw internal_error("character_density_oracle: no primes");
  return Rational(matching, considered);
}

}  // namespace qrd
