#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qrd/diagrams.hpp"
#include "qrd/dyadic.hpp"
#include "qrd/tuples.hpp"

namespace qrd {

// One representative per distinct value set S(I): the even-cardinality index
// set I, its square-free values S, and the canonical index choice Z (minimal
// index per value).
struct FamilyRep {
  std::set<int> I;
  std::set<Int> S;
  std::set<int> Z;
  bool has_one = false;  // 1 in S
};

struct RepFamily {
  std::vector<FamilyRep> reps;

  bool empty() const { return reps.empty(); }
  std::size_t size() const { return reps.size(); }
};

// Enumerates even-cardinality subsets I of every K in the family, drops
// those with fewer than two distinct square-free values, and keeps the
// lexicographically smallest I per distinct value set.
RepFamily representative_family(const KMaxFamily& kmax, const TupleStructure& st);

// Union of the Z(I).
std::set<int> sigma_from_reps(const RepFamily& lp);

// Column form of the same index set: union of K(C) over essential columns.
std::set<int> sigma_from_columns(const TupleStructure& st);

// Partition of Sigma into components linked through the representatives'
// index sets (i ~ j iff a chain of Z(I) sets connects them).
std::vector<std::set<int>> sigma_classes(const std::set<int>& Sigma,
                                         const RepFamily& lp);

// Diagnostic variant linked through essential columns instead (i ~ j iff a
// chain of K(C) sets with C essential connects them).  Agrees with
// sigma_classes whenever the square-free parts are injective on Sigma.
std::vector<std::set<int>> sigma_classes_by_columns(const std::set<int>& Sigma,
                                                    const TupleStructure& st);

// Components of the representatives under nonempty Z-intersection chains.
std::vector<std::vector<std::size_t>> rep_classes(const RepFamily& lp);

// True iff the square-free parts are pairwise distinct on Sigma and no
// nonempty sub-product of the non-unit values is a perfect square
// (equivalently, the support vectors form an independent set).
bool independence_condition(const std::set<int>& Sigma, const TupleStructure& st);

// The closed-form parameters used when the independence condition holds.
struct EpsilonParams {
  std::vector<std::size_t> M1;          // reps whose value set contains 1
  std::optional<int> i0;                // the unique index with value 1
  std::optional<std::set<int>> varpi0;  // its Sigma-class
  std::vector<std::size_t> phi_varpi0;  // reps contained in that class
  int epsilon = 1;                      // 1 unless M1 is a proper nonempty part
};

EpsilonParams epsilon_params(const RepFamily& lp,
                             const std::vector<std::set<int>>& classes,
                             const TupleStructure& st);

enum class M1Case { kEmpty, kEqualsPhi, kProper };

// Density under the independence condition: 2^(mu-sigma) when M1 is empty or
// equals Phi(varpi0), else 2^(1-sigma) (2^mu - 1).
Dyadic closed_form_density(int mu, int sigma_count, M1Case m1_case);

// Same value assembled from the pieces 2^-d (1 + eps + 2 |Pempty|) with the
// closed-form partition counts; must agree with closed_form_density exactly.
Dyadic partition_sum_density(int mu, int sigma_count, M1Case m1_case);

// Exhaustive count of unordered 2-block partitions {P1, P2} of the reps
// outside M1 for which (union of Z over M1 and P1) is disjoint from
// (union of Z over P2) under some labeling.
Int pempty_count_brute(const RepFamily& lp, const std::vector<std::size_t>& M1);

// Exact density of the set of primes p for which every member of the family
// (nonempty sets of square-free positive integers) is either all residues or
// all non-residues of p.  Evaluated by the disjoint sign-pattern
// decomposition with solvability decided by symdiff_criterion.
Dyadic exact_family_density(const std::vector<std::set<Int>>& family);

// Parameters for the dispatch used when the independence condition fails.
struct GeneralParams {
  int mu = 0;
  int d = 0;
  int omega = 0;               // classes meeting M1 (0 when M1 empty)
  Int alpha = 0;
  Int beta = 0;
  bool m1_empty = true;
  bool m1_equals_omega_union = false;
  int epsilon_formula = 1;     // the stated characterization
  int epsilon_exact = 1;       // solvability of the sign system, decided exactly
  Int pempty_closed = 0;       // 2^(mu-omega) family closed form
  Int pempty_brute = 0;
};

GeneralParams general_parameters(const RepFamily& lp,
                                 const std::vector<std::vector<std::size_t>>& classes,
                                 const TupleStructure& st);

// The three-case general dispatch value.
Dyadic general_density(const GeneralParams& p);

struct DensityAnalysis {
  TupleStructure structure;
  KMaxFamily kmax;
  RepFamily lambda;

  std::set<int> Sigma;          // from the Z(I)
  std::set<int> Sigma_columns;  // column form
  bool sigma_forms_agree = true;

  std::vector<std::set<int>> classes;          // Sigma-classes via reps
  std::vector<std::set<int>> classes_columns;  // via essential columns
  bool class_forms_agree = true;
  std::vector<std::vector<std::size_t>> lambda_classes;

  int sigma_count = 0;
  int mu = 0;
  int d = 0;
  bool independence = false;

  EpsilonParams eps;             // meaningful on the closed-form path
  std::optional<Int> alpha, beta;
  std::optional<int> omega;
  std::optional<int> epsilon;

  std::string formula_path;      // all-squares | mu-zero | theorem-3.7 | general
  Dyadic density_plus;
  Dyadic density_minus;

  std::optional<Dyadic> density_cross;   // assembled partition sum, closed-form path
  std::optional<Dyadic> density_exact;   // exact_family_density of the S(I)
  bool exact_agrees = true;
};

// Full pipeline.  run_cross_checks additionally re-derives every quantity
// along its second route and throws internal_error on any mismatch.
DensityAnalysis analyze(const StandardTuple& t, bool run_cross_checks = false);

}  // namespace qrd
