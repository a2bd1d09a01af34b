#pragma once

#include <set>
#include <vector>

#include "qrd/rational.hpp"

namespace qrd {

// m paired progressions: initial terms a (nonnegative), differences b
// (positive), with (a_i, b_i) pairwise distinct, plus the extracted
// sub-progression length s >= 2.
struct StandardTuple {
  std::vector<Int> a;
  std::vector<Int> b;
  int s = 2;

  std::size_t m() const { return a.size(); }
  // Throws invalid_tuple_error naming the violated invariant.
  void validate() const;
};

// Derived structure: the distinct difference values B (first-occurrence
// order, indexed 1..k), their initial-term sets A(b_i), the point sets
// Q_i = {a / b_i}, the square-free parts of the differences, and the
// length-s point unions S_i.
struct TupleStructure {
  StandardTuple tuple;
  std::vector<Int> B;                      // distinct differences, 1-based via index+1
  std::vector<std::set<Int>> A_of;         // initial terms per difference
  std::vector<std::set<Rational>> Q;       // Q_i
  std::set<Rational> Q_all;                // union of the Q_i
  std::vector<Int> sigma;                  // square-free parts of B
  std::vector<std::set<Rational>> S;       // S_i

  int k() const { return static_cast<int>(B.size()); }
  int s() const { return tuple.s; }
  // 1-based index lookups.
  const std::set<Rational>& Q_of(int i) const { return Q[static_cast<std::size_t>(i - 1)]; }
  const std::set<Rational>& S_of(int i) const { return S[static_cast<std::size_t>(i - 1)]; }
  const Int& sigma_of(int i) const { return sigma[static_cast<std::size_t>(i - 1)]; }
  const Int& B_of(int i) const { return B[static_cast<std::size_t>(i - 1)]; }
  // Indices i with q in Q_i.
  std::set<int> indices_of_point(const Rational& q) const;
};

// Family of index sets K (1-based, subsets of [1,k]) whose point sets have a
// common element not shared with any other S_i.
struct KMaxFamily {
  std::set<std::set<int>> members;
};

TupleStructure build_structure(const StandardTuple& t);

// The membership patterns {i : t in S_i} as t ranges over the union of the
// S_i; any witness of a realizable pattern lies in some S_i, so this
// candidate set is exhaustive.
KMaxFamily kmax_direct(const TupleStructure& st);

// k >= 2, differences pairwise distinct, and all cross products
// a_i b_j - a_j b_i nonzero.
bool is_admissible(const StandardTuple& t);

// Builds the 2k-tuple from the recurrence a_{i+1} = t_i (a_i + d_i b_i),
// b_{i+1} = t_i b_i.  The result satisfies
// a_i b_j - a_j b_i = (sum of d_j..d_{i-1}) * b_i b_j exactly and is
// admissible.  All multipliers must be >= 2 and the seed positive.
StandardTuple generate_chain(const std::vector<Int>& gaps,
                             const std::pair<Int, Int>& seed,
                             const std::vector<Int>& multipliers, int s);

// Same recurrence with b_1 = 2, a_1 = 1 and the multipliers taken as the
// successive odd primes, so the differences are square-free with strictly
// nested prime supports.
StandardTuple generate_chain_primes(const std::vector<Int>& gaps, int s);

// Merges per-block gap sequences into one gap tuple, inserting the value s
// between blocks so that the generated tuple's quotient diagram has exactly
// the prescribed blocks.  Every per-block gap must be <= s-1 and every block
// must have at least two rows.
std::vector<Int> gaps_for_quotient_spec(
    const std::vector<std::vector<Int>>& block_gap_sequences, int s);

}  // namespace qrd
