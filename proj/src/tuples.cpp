#include "qrd/tuples.hpp"

#include <algorithm>
#include <map>

#include "qrd/arith.hpp"
#include "qrd/errors.hpp"

namespace qrd {

void StandardTuple::validate() const {
  if (a.size() != b.size())
    throw invalid_tuple_error("tuple: a and b must have equal length");
  if (a.size() < 2)
    throw invalid_tuple_error("tuple: m >= 2 progressions required");
  if (s < 2) throw invalid_tuple_error("tuple: s >= 2 required");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0)
      throw invalid_tuple_error("tuple: initial terms must be nonnegative");
    if (b[i] < 1)
      throw invalid_tuple_error("tuple: differences must be positive");
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] == a[j] && b[i] == b[j])
        throw invalid_tuple_error(
            "tuple: pairs (a_i, b_i) must be pairwise distinct");
}

std::set<int> TupleStructure::indices_of_point(const Rational& q) const {
  std::set<int> out;
  for (int i = 1; i <= k(); ++i)
    if (Q_of(i).count(q)) out.insert(i);
  return out;
}

TupleStructure build_structure(const StandardTuple& t) {
  t.validate();
  TupleStructure st;
  st.tuple = t;
  // Distinct differences in first-occurrence order.
  for (std::size_t i = 0; i < t.b.size(); ++i) {
    auto it = std::find(st.B.begin(), st.B.end(), t.b[i]);
    std::size_t idx;
    if (it == st.B.end()) {
      st.B.push_back(t.b[i]);
      st.A_of.emplace_back();
      idx = st.B.size() - 1;
    } else {
      idx = static_cast<std::size_t>(it - st.B.begin());
    }
    st.A_of[idx].insert(t.a[i]);
  }
  for (std::size_t i = 0; i < st.B.size(); ++i) {
    st.sigma.push_back(squarefree_part(st.B[i]));
    std::set<Rational> qi;
    for (const Int& av : st.A_of[i]) qi.insert(Rational(av, st.B[i]));
    std::set<Rational> si;
    for (const Rational& q : qi)
      for (int j = 0; j < t.s; ++j) si.insert(q + Rational(Int(j)));
    st.Q_all.insert(qi.begin(), qi.end());
    st.Q.push_back(std::move(qi));
    st.S.push_back(std::move(si));
  }
  return st;
}

KMaxFamily kmax_direct(const TupleStructure& st) {
  std::set<Rational> candidates;
  for (const auto& si : st.S) candidates.insert(si.begin(), si.end());
  KMaxFamily fam;
  for (const Rational& t : candidates) {
    std::set<int> pattern;
    for (int i = 1; i <= st.k(); ++i)
      if (st.S_of(i).count(t)) pattern.insert(i);
    fam.members.insert(std::move(pattern));
  }
  return fam;
}

bool is_admissible(const StandardTuple& t) {
  t.validate();
  std::set<Int> distinct(t.b.begin(), t.b.end());
  if (distinct.size() != t.b.size()) return false;
  if (t.b.size() < 2) return false;
  for (std::size_t i = 0; i < t.a.size(); ++i)
    for (std::size_t j = i + 1; j < t.a.size(); ++j)
      if (t.a[i] * t.b[j] - t.a[j] * t.b[i] == 0) return false;
  return true;
}

StandardTuple generate_chain(const std::vector<Int>& gaps,
                             const std::pair<Int, Int>& seed,
                             const std::vector<Int>& multipliers, int s) {
  if (gaps.empty()) throw domain_error("generate_chain: at least one gap required");
  if (multipliers.size() != gaps.size())
    throw domain_error("generate_chain: need exactly one multiplier per gap");
  if (seed.first < 1 || seed.second < 1)
    throw domain_error("generate_chain: seed coordinates must be positive");
  for (const Int& g : gaps)
    if (g < 1) throw domain_error("generate_chain: gaps must be positive");
  for (const Int& t : multipliers)
    if (t < 2) throw domain_error("generate_chain: multipliers must be >= 2");

  StandardTuple out;
  out.s = s;
  out.a.push_back(seed.first);
  out.b.push_back(seed.second);
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    out.a.push_back(multipliers[i] * (out.a.back() + gaps[i] * out.b.back()));
    out.b.push_back(multipliers[i] * out.b[i]);
  }
  return out;
}

StandardTuple generate_chain_primes(const std::vector<Int>& gaps, int s) {
  // Enough odd primes for the requested length.
  std::uint64_t need = gaps.size();
  std::uint64_t bound = 16;
  PrimeTable table = sieve_primes(bound);
  while (table.primes.size() < need + 1) {
    bound *= 2;
    table = sieve_primes(bound);
  }
  std::vector<Int> multipliers;
  for (std::size_t i = 0; i < gaps.size(); ++i)
    multipliers.push_back(Int(table.primes[i + 1]));  // 3, 5, 7, ...
  return generate_chain(gaps, {Int(1), Int(2)}, multipliers, s);
}

std::vector<Int> gaps_for_quotient_spec(
    const std::vector<std::vector<Int>>& block_gap_sequences, int s) {
  if (block_gap_sequences.empty())
    throw domain_error("gaps_for_quotient_spec: at least one block required");
  std::vector<Int> merged;
  bool first = true;
  for (const auto& block : block_gap_sequences) {
    if (block.empty())
      throw domain_error(
          "gaps_for_quotient_spec: each block needs at least two rows");
    if (!first) merged.push_back(Int(s));
    first = false;
    for (const Int& g : block) {
      if (g < 1)
        throw domain_error("gaps_for_quotient_spec: gaps must be positive");
      if (g >= s)
        throw domain_error("gaps_for_quotient_spec: block gap " + g.str() +
                           " must be at most s-1 = " + std::to_string(s - 1));
      merged.push_back(g);
    }
  }
  return merged;
}

}  // namespace qrd
