#include "qrd/density.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "qrd/arith.hpp"
#include "qrd/errors.hpp"
#include "qrd/gf2.hpp"

namespace qrd {

namespace {

constexpr std::size_t kKCap = 20;
constexpr std::size_t kRepCap = 12;
constexpr std::size_t kSigmaCap = 16;

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

bool lex_less(const std::set<int>& a, const std::set<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::set<Int> value_set(const std::set<int>& I, const TupleStructure& st) {
  std::set<Int> vals;
  for (int i : I) vals.insert(st.sigma_of(i));
  return vals;
}

std::vector<std::size_t> concat(std::vector<std::size_t> a,
                                const std::vector<std::size_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

RepFamily representative_family(const KMaxFamily& kmax, const TupleStructure& st) {
  std::map<std::set<Int>, std::set<int>> best;  // value set -> lex-min I
  for (const std::set<int>& K : kmax.members) {
    if (K.size() > kKCap)
      throw size_limit_error("representative_family: |K| = " +
                             std::to_string(K.size()) + " exceeds the cap of " +
                             std::to_string(kKCap));
    std::vector<int> idx(K.begin(), K.end());
    std::size_t n = idx.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
      int c = std::popcount(mask);
      if (c % 2 != 0 || c < 2) continue;
      std::set<int> I;
      for (std::size_t j = 0; j < n; ++j)
        if ((mask >> j) & 1) I.insert(idx[j]);
      std::set<Int> vals = value_set(I, st);
      if (vals.size() < 2) continue;
      auto it = best.find(vals);
      if (it == best.end() || lex_less(I, it->second)) best[vals] = I;
    }
  }
  RepFamily fam;
  for (auto& [vals, I] : best) {
    FamilyRep rep;
    rep.I = I;
    rep.S = vals;
    for (const Int& v : vals) {  // minimal index per distinct value
      for (int i : I)
        if (st.sigma_of(i) == v) {
          rep.Z.insert(i);
          break;
        }
    }
    rep.has_one = vals.count(Int(1)) > 0;
    fam.reps.push_back(std::move(rep));
  }
  std::sort(fam.reps.begin(), fam.reps.end(),
            [](const FamilyRep& a, const FamilyRep& b) { return lex_less(a.I, b.I); });
  return fam;
}

std::set<int> sigma_from_reps(const RepFamily& lp) {
  std::set<int> sigma;
  for (const FamilyRep& rep : lp.reps) sigma.insert(rep.Z.begin(), rep.Z.end());
  return sigma;
}

std::set<int> sigma_from_columns(const TupleStructure& st) {
  std::set<int> sigma;
  for (const auto& R : r_partition(st.Q_all, st.s())) {
    BlockDiagram d = block_diagram_of(R, st.s());
    for (const Column& c : columns_of(d, st))
      if (c.essential) sigma.insert(c.K.begin(), c.K.end());
  }
  return sigma;
}

namespace {

std::vector<std::set<int>> components_of_sigma(
    const std::set<int>& Sigma, const std::vector<std::set<int>>& cliques) {
  std::vector<int> elems(Sigma.begin(), Sigma.end());
  std::map<int, std::size_t> pos;
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = i;
  UnionFind uf(elems.size());
  for (const std::set<int>& clique : cliques) {
    std::optional<std::size_t> first;
    for (int i : clique) {
      auto it = pos.find(i);
      if (it == pos.end()) continue;
      if (!first)
        first = it->second;
      else
        uf.unite(*first, it->second);
    }
  }
  std::map<std::size_t, std::set<int>> by_root;
  for (std::size_t i = 0; i < elems.size(); ++i) by_root[uf.find(i)].insert(elems[i]);
  std::vector<std::set<int>> out;
  for (auto& [root, cls] : by_root) out.push_back(std::move(cls));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return *a.begin() < *b.begin(); });
  return out;
}

}  // namespace

std::vector<std::set<int>> sigma_classes(const std::set<int>& Sigma,
                                         const RepFamily& lp) {
  std::vector<std::set<int>> cliques;
  for (const FamilyRep& rep : lp.reps) cliques.push_back(rep.Z);
  return components_of_sigma(Sigma, cliques);
}

std::vector<std::set<int>> sigma_classes_by_columns(const std::set<int>& Sigma,
                                                    const TupleStructure& st) {
  std::vector<std::set<int>> cliques;
  for (const auto& R : r_partition(st.Q_all, st.s())) {
    BlockDiagram d = block_diagram_of(R, st.s());
    for (const Column& c : columns_of(d, st))
      if (c.essential) cliques.push_back(c.K);
  }
  return components_of_sigma(Sigma, cliques);
}

std::vector<std::vector<std::size_t>> rep_classes(const RepFamily& lp) {
  UnionFind uf(lp.size());
  for (std::size_t i = 0; i < lp.size(); ++i)
    for (std::size_t j = i + 1; j < lp.size(); ++j) {
      const auto& zi = lp.reps[i].Z;
      const auto& zj = lp.reps[j].Z;
      bool meet = std::any_of(zi.begin(), zi.end(),
                              [&](int x) { return zj.count(x) > 0; });
      if (meet) uf.unite(i, j);
    }
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t i = 0; i < lp.size(); ++i) by_root[uf.find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, cls] : by_root) out.push_back(std::move(cls));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

namespace {

PrimeUniverse support_universe(const std::set<int>& Sigma, const TupleStructure& st) {
  std::set<Int> primes;
  for (int i : Sigma)
    for (const Int& p : pi_odd(st.sigma_of(i))) primes.insert(p);
  return PrimeUniverse::from(primes);
}

// rank of the distinct nonzero support vectors {v(pi(sigma_i)) : i in Sigma}
int support_rank(const std::set<int>& Sigma, const TupleStructure& st) {
  PrimeUniverse u = support_universe(Sigma, st);
  std::set<std::set<Int>> supports;
  for (int i : Sigma) {
    std::set<Int> s = pi_odd(st.sigma_of(i));
    if (!s.empty()) supports.insert(std::move(s));
  }
  std::vector<Gf2Vector> vecs;
  for (const auto& s : supports) vecs.push_back(vector_of(s, u));
  return static_cast<int>(rank(vecs));
}

std::vector<std::size_t> phi_of_class(const RepFamily& lp, const std::set<int>& cls) {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < lp.size(); ++r) {
    const auto& Z = lp.reps[r].Z;
    if (std::all_of(Z.begin(), Z.end(), [&](int i) { return cls.count(i) > 0; }))
      out.push_back(r);
  }
  return out;
}

}  // namespace

bool independence_condition(const std::set<int>& Sigma, const TupleStructure& st) {
  std::set<Int> seen;
  for (int i : Sigma)
    if (!seen.insert(st.sigma_of(i)).second) return false;
  PrimeUniverse u = support_universe(Sigma, st);
  std::vector<Gf2Vector> vecs;
  for (int i : Sigma) {
    std::set<Int> s = pi_odd(st.sigma_of(i));
    if (!s.empty()) vecs.push_back(vector_of(s, u));
  }
  return is_independent_set(vecs);
}

EpsilonParams epsilon_params(const RepFamily& lp,
                             const std::vector<std::set<int>>& classes,
                             const TupleStructure& st) {
  EpsilonParams out;
  for (std::size_t r = 0; r < lp.size(); ++r)
    if (lp.reps[r].has_one) out.M1.push_back(r);
  if (out.M1.empty()) {
    out.epsilon = 1;
    return out;
  }
  std::set<int> Sigma = sigma_from_reps(lp);
  std::vector<int> unit_indices;
  for (int i : Sigma)
    if (st.sigma_of(i) == 1) unit_indices.push_back(i);
  if (unit_indices.size() != 1)
    throw internal_error(
        "epsilon_params: expected exactly one unit square-free part in Sigma, "
        "found " +
        std::to_string(unit_indices.size()));
  out.i0 = unit_indices.front();
  for (const auto& cls : classes)
    if (cls.count(*out.i0)) {
      out.varpi0 = cls;
      break;
    }
  if (!out.varpi0) throw internal_error("epsilon_params: i0 not in any class");
  out.phi_varpi0 = phi_of_class(lp, *out.varpi0);
  out.epsilon = (out.M1 == out.phi_varpi0) ? 1 : 0;
  return out;
}

Dyadic closed_form_density(int mu, int sigma_count, M1Case m1_case) {
  if (m1_case == M1Case::kProper) {
    Dyadic factor = Dyadic::from_int((Int(1) << mu) - 1);
    return Dyadic::pow2(1 - sigma_count) * factor;
  }
  return Dyadic::pow2(mu - sigma_count);
}

Dyadic partition_sum_density(int mu, int sigma_count, M1Case m1_case) {
  // Closed-form partition count; at mu = 1 the kEqualsPhi branch evaluates to
  // the exact dyadic -1/2, making the assembled sum an identity in all cases.
  Dyadic pempty;
  int epsilon = 0;
  int d = sigma_count;
  switch (m1_case) {
    case M1Case::kEmpty:
      pempty = Dyadic::pow2(mu - 1) - Dyadic::from_int(1);
      epsilon = 1;
      d = sigma_count;
      break;
    case M1Case::kProper:
      pempty = Dyadic::pow2(mu - 1) - Dyadic::from_int(1);
      epsilon = 0;
      d = sigma_count - 1;
      break;
    case M1Case::kEqualsPhi:
      pempty = Dyadic::pow2(mu - 2) - Dyadic::from_int(1);
      epsilon = 1;
      d = sigma_count - 1;
      break;
  }
  Dyadic sum = Dyadic::from_int(1 + epsilon) + Dyadic::from_int(2) * pempty;
  return Dyadic::pow2(-d) * sum;
}

namespace {

std::set<int> z_union(const RepFamily& lp, const std::vector<std::size_t>& reps) {
  std::set<int> u;
  for (std::size_t r : reps) u.insert(lp.reps[r].Z.begin(), lp.reps[r].Z.end());
  return u;
}

bool disjoint(const std::set<int>& a, const std::set<int>& b) {
  return std::none_of(a.begin(), a.end(), [&](int x) { return b.count(x) > 0; });
}

// Visits every unordered 2-block partition {P1, P2} of `pool` exactly once.
template <typename F>
void for_each_partition(const std::vector<std::size_t>& pool, F&& visit) {
  std::size_t n = pool.size();
  if (n < 2) return;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (n - 1)); ++mask) {
    std::vector<std::size_t> P1{pool[0]}, P2;
    for (std::size_t j = 1; j < n; ++j)
      ((mask >> (j - 1)) & 1 ? P1 : P2).push_back(pool[j]);
    if (P2.empty()) continue;
    visit(P1, P2);
  }
}

}  // namespace

Int pempty_count_brute(const RepFamily& lp, const std::vector<std::size_t>& M1) {
  std::vector<std::size_t> M0;
  std::set<std::size_t> m1set(M1.begin(), M1.end());
  for (std::size_t r = 0; r < lp.size(); ++r)
    if (!m1set.count(r)) M0.push_back(r);
  if (M0.size() > kRepCap)
    throw size_limit_error("pempty_count_brute: family too large");
  std::set<int> zm1 = z_union(lp, M1);
  Int count = 0;
  for_each_partition(M0, [&](const std::vector<std::size_t>& P1,
                             const std::vector<std::size_t>& P2) {
    std::set<int> z1 = z_union(lp, P1), z2 = z_union(lp, P2);
    if (!disjoint(z1, z2)) return;
    if (disjoint(zm1, z2) || disjoint(zm1, z1)) ++count;
  });
  return count;
}

Dyadic exact_family_density(const std::vector<std::set<Int>>& family) {
  if (family.size() > kRepCap)
    throw size_limit_error("exact_family_density: family size " +
                           std::to_string(family.size()) + " exceeds " +
                           std::to_string(kRepCap));
  for (const auto& S : family) {
    if (S.empty()) throw domain_error("exact_family_density: empty member set");
    for (const Int& z : S)
      if (z < 1 || squarefree_part(z) != z)
        throw domain_error("exact_family_density: " + z.str() +
                           " is not a square-free positive integer");
  }

  std::vector<std::size_t> M0, M1;
  std::vector<std::vector<std::set<Int>>> supports(family.size());
  std::set<std::set<Int>> all_supports;
  for (std::size_t i = 0; i < family.size(); ++i) {
    (family[i].count(Int(1)) ? M1 : M0).push_back(i);
    for (const Int& z : family[i]) {
      std::set<Int> s = pi_odd(z);
      supports[i].push_back(s);
      all_supports.insert(std::move(s));
    }
  }
  std::set<Int> universe_primes;
  for (const auto& s : all_supports) universe_primes.insert(s.begin(), s.end());
  PrimeUniverse u = PrimeUniverse::from(universe_primes);
  std::vector<Gf2Vector> vecs;
  for (const auto& s : all_supports)
    if (!s.empty()) vecs.push_back(vector_of(s, u));
  int d = static_cast<int>(rank(vecs));

  // With no all-or-nothing freedom left the only sign pattern is all-residues.
  if (M0.empty()) return Dyadic::pow2(-d);

  auto merged = [&](const std::vector<std::size_t>& idx) {
    std::set<std::set<Int>> out;
    for (std::size_t i : idx) out.insert(supports[i].begin(), supports[i].end());
    return out;
  };
  // Is some N compatible with "even on every support of even_idx, odd on
  // every support of odd_idx"?
  auto solvable = [&](const std::vector<std::size_t>& even_idx,
                      const std::vector<std::size_t>& odd_idx) {
    std::set<std::set<Int>> even = merged(even_idx), odd = merged(odd_idx);
    for (const auto& s : odd)
      if (even.count(s)) return false;  // one support forced both parities
    if (odd.count(std::set<Int>{})) return false;
    return symdiff_criterion({odd.begin(), odd.end()},
                             {even.begin(), even.end()});
  };

  Int terms = 1;  // the all-residues pattern
  if (solvable(M1, M0)) ++terms;
  std::vector<std::size_t> pool = M0;
  for_each_partition(pool, [&](const std::vector<std::size_t>& P1,
                               const std::vector<std::size_t>& P2) {
    if (solvable(concat(M1, P1), P2)) ++terms;
    if (solvable(concat(M1, P2), P1)) ++terms;
  });
  return Dyadic::pow2(-d) * Dyadic::from_int(terms);
}

namespace {

// Distinct support sets {pi(sigma_i) : i in Sigma}, optionally with the empty
// set adjoined.
struct ValueFamily {
  std::vector<std::set<Int>> members;
  PrimeUniverse universe;
  std::vector<Gf2Vector> vectors;

  static ValueFamily build(const std::set<int>& Sigma, const TupleStructure& st,
                           bool adjoin_empty) {
    std::set<std::set<Int>> distinct;
    for (int i : Sigma) distinct.insert(pi_odd(st.sigma_of(i)));
    if (adjoin_empty) distinct.insert(std::set<Int>{});
    ValueFamily vf;
    std::set<Int> primes;
    for (const auto& s : distinct) primes.insert(s.begin(), s.end());
    vf.universe = PrimeUniverse::from(primes);
    for (const auto& s : distinct) {
      vf.members.push_back(s);
      vf.vectors.push_back(vector_of(s, vf.universe));
    }
    return vf;
  }
};

// Does some odd-cardinality subfamily U with empty repeated symmetric
// difference have an even number of members inside `inside`?
bool bad_subfamily_exists(const ValueFamily& vf,
                          const std::set<std::set<Int>>& inside) {
  std::size_t f = vf.members.size();
  if (f > kSigmaCap + 1)
    throw size_limit_error("general parameters: support family too large");
  std::size_t nwords = (vf.universe.size() + 63) / 64 + 1;
  std::vector<std::uint64_t> acc(nwords);
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << f); ++mask) {
    if (std::popcount(mask) % 2 == 0) continue;
    int in_count = 0;
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t i = 0; i < f; ++i)
      if ((mask >> i) & 1) {
        if (inside.count(vf.members[i])) ++in_count;
        for (std::size_t w = 0; w < vf.vectors[i].words.size(); ++w)
          acc[w] ^= vf.vectors[i].words[w];
      }
    if (in_count % 2 != 0) continue;
    bool zero = std::all_of(acc.begin(), acc.end(),
                            [](std::uint64_t x) { return x == 0; });
    if (zero) return true;
  }
  return false;
}

std::set<std::set<Int>> supports_of_reps(const RepFamily& lp,
                                         const std::vector<std::size_t>& reps) {
  std::set<std::set<Int>> out;
  for (std::size_t r : reps)
    for (const Int& v : lp.reps[r].S) out.insert(pi_odd(v));
  return out;
}

}  // namespace

GeneralParams general_parameters(
    const RepFamily& lp, const std::vector<std::vector<std::size_t>>& classes,
    const TupleStructure& st) {
  if (lp.size() > kRepCap)
    throw size_limit_error("general_parameters: representative family too large");
  GeneralParams out;
  out.mu = static_cast<int>(classes.size());

  std::set<int> Sigma = sigma_from_reps(lp);
  if (Sigma.size() > kSigmaCap)
    throw size_limit_error("general_parameters: Sigma too large");
  out.d = support_rank(Sigma, st);

  std::vector<std::size_t> M1, M0;
  for (std::size_t r = 0; r < lp.size(); ++r)
    (lp.reps[r].has_one ? M1 : M0).push_back(r);
  out.m1_empty = M1.empty();

  std::set<std::size_t> m1set(M1.begin(), M1.end());
  std::vector<std::size_t> omega_classes;
  bool exhausts = true;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    bool meets = std::any_of(classes[c].begin(), classes[c].end(),
                             [&](std::size_t r) { return m1set.count(r) > 0; });
    if (meets) {
      omega_classes.push_back(c);
      for (std::size_t r : classes[c])
        if (!m1set.count(r)) exhausts = false;
    }
  }
  out.omega = static_cast<int>(omega_classes.size());
  out.m1_equals_omega_union = !M1.empty() && exhausts;

  // alpha over partitions of the whole family with disjoint index unions:
  // by their structure these are exactly the unions of rep classes.
  ValueFamily vf_with_empty = ValueFamily::build(Sigma, st, true);
  std::size_t mu = classes.size();
  std::vector<std::size_t> class_ids(mu);
  std::iota(class_ids.begin(), class_ids.end(), std::size_t{0});
  for_each_partition(class_ids, [&](const std::vector<std::size_t>& C1,
                                    const std::vector<std::size_t>& C2) {
    std::vector<std::size_t> P1, P2;
    for (std::size_t c : C1) P1.insert(P1.end(), classes[c].begin(), classes[c].end());
    for (std::size_t c : C2) P2.insert(P2.end(), classes[c].begin(), classes[c].end());
    auto s1 = supports_of_reps(lp, P1);
    auto s2 = supports_of_reps(lp, P2);
    s1.insert(std::set<Int>{});
    s2.insert(std::set<Int>{});
    if (bad_subfamily_exists(vf_with_empty, s1) ||
        bad_subfamily_exists(vf_with_empty, s2))
      out.alpha += 1;
  });

  // Exact solvability of the sign system for the split M0 | M1.
  {
    auto even = supports_of_reps(lp, M1);
    auto odd = supports_of_reps(lp, M0);
    bool clash = std::any_of(odd.begin(), odd.end(),
                             [&](const auto& s) { return even.count(s) > 0; });
    if (clash || odd.count(std::set<Int>{}))
      out.epsilon_exact = 0;
    else
      out.epsilon_exact = symdiff_criterion({odd.begin(), odd.end()},
                                            {even.begin(), even.end()})
                              ? 1
                              : 0;
  }

  ValueFamily vf_plain = ValueFamily::build(Sigma, st, false);
  if (out.m1_empty) {
    out.epsilon_formula = out.epsilon_exact;
  } else {
    bool no_bad_u = !bad_subfamily_exists(vf_plain, supports_of_reps(lp, M1));
    out.epsilon_formula = (out.m1_equals_omega_union && no_bad_u) ? 1 : 0;
  }

  // beta over partitions of M0 with M1 glued to one admissible side.
  if (!out.m1_empty) {
    std::set<int> zm1 = z_union(lp, M1);
    for_each_partition(M0, [&](const std::vector<std::size_t>& P1,
                               const std::vector<std::size_t>& P2) {
      std::set<int> z1 = z_union(lp, P1), z2 = z_union(lp, P2);
      if (!disjoint(z1, z2)) return;
      bool counted = false;
      if (disjoint(zm1, z2) &&
          bad_subfamily_exists(vf_plain, supports_of_reps(lp, concat(M1, P1))))
        counted = true;
      if (!counted && disjoint(zm1, z1) &&
          bad_subfamily_exists(vf_plain, supports_of_reps(lp, concat(M1, P2))))
        counted = true;
      if (counted) out.beta += 1;
    });
  }

  if (!out.m1_empty && !out.m1_equals_omega_union) {
    out.pempty_closed = (Int(1) << (out.mu - out.omega)) - 1;
  } else if (!out.m1_empty && out.mu == out.omega) {
    out.pempty_closed = 0;
  } else {
    int e = out.mu - out.omega - 1;  // omega = 0 when M1 is empty
    out.pempty_closed = e >= 0 ? Int((Int(1) << e) - 1) : Int(0);
  }
  out.pempty_brute = pempty_count_brute(lp, M1);
  return out;
}

Dyadic general_density(const GeneralParams& p) {
  if (p.m1_empty) {
    Dyadic inner = Dyadic::pow2(p.mu - 1) - Dyadic::from_int(p.alpha);
    return Dyadic::pow2(1 - p.d) * inner;
  }
  if (!p.m1_equals_omega_union) {
    Dyadic inner =
        Dyadic::pow2(p.mu - p.omega + 1) - Dyadic::from_int(2 * p.beta + 1);
    return Dyadic::pow2(-p.d) * inner;
  }
  Dyadic inner = Dyadic::pow2(p.mu - p.omega) -
                 Dyadic::from_int(2 * p.beta + 1 - p.epsilon_formula);
  return Dyadic::pow2(-p.d) * inner;
}

namespace {

void verify_class_bijection(const RepFamily& lp,
                            const std::vector<std::set<int>>& classes,
                            const std::vector<std::vector<std::size_t>>& rep_cls) {
  if (classes.size() != rep_cls.size())
    throw internal_error("class bijection: class counts differ");
  std::set<std::vector<std::size_t>> rep_cls_set(rep_cls.begin(), rep_cls.end());
  std::set<std::vector<std::size_t>> images;
  for (const auto& cls : classes) {
    std::vector<std::size_t> phi = phi_of_class(lp, cls);
    if (phi.empty()) throw internal_error("class bijection: empty image");
    if (!rep_cls_set.count(phi))
      throw internal_error("class bijection: image is not a representative class");
    if (!images.insert(phi).second)
      throw internal_error("class bijection: image repeated");
    // inverse: union of the members recovers the class
    std::set<int> back = z_union(lp, phi);
    if (back != cls)
      throw internal_error("class bijection: inverse union mismatch");
  }
}

Int pempty_closed_independent(int mu, M1Case m1_case) {
  // Partition counts under the independence condition; only used for
  // cross-checking against the exhaustive count on nondegenerate inputs.
  if (m1_case == M1Case::kEqualsPhi) {
    return mu >= 2 ? Int((Int(1) << (mu - 2)) - 1) : Int(0);
  }
  return mu >= 1 ? Int((Int(1) << (mu - 1)) - 1) : Int(0);
}

}  // namespace

DensityAnalysis analyze(const StandardTuple& t, bool run_cross_checks) {
  DensityAnalysis a;
  a.structure = build_structure(t);
  const TupleStructure& st = a.structure;

  a.kmax = kmax_direct(st);
  KMaxFamily via_columns = kmax_via_columns(st);
  if (!(a.kmax.members == via_columns.members))
    throw internal_error("kmax: direct and column computations disagree");

  a.lambda = representative_family(a.kmax, st);
  if (a.lambda.size() > kRepCap)
    throw size_limit_error("analyze: representative family of size " +
                           std::to_string(a.lambda.size()) + " exceeds " +
                           std::to_string(kRepCap));
  a.Sigma = sigma_from_reps(a.lambda);
  if (a.Sigma.size() > kSigmaCap)
    throw size_limit_error("analyze: Sigma of size " +
                           std::to_string(a.Sigma.size()) + " exceeds " +
                           std::to_string(kSigmaCap));
  a.Sigma_columns = sigma_from_columns(st);
  a.sigma_forms_agree = (a.Sigma == a.Sigma_columns);
  a.sigma_count = static_cast<int>(a.Sigma.size());

  bool sigma_globally_distinct =
      std::set<Int>(st.sigma.begin(), st.sigma.end()).size() == st.sigma.size();
  if (sigma_globally_distinct && !a.sigma_forms_agree)
    throw internal_error("Sigma: set and column forms disagree on distinct parts");

  a.classes = sigma_classes(a.Sigma, a.lambda);
  a.classes_columns = sigma_classes_by_columns(a.Sigma, st);
  a.class_forms_agree = (a.classes == a.classes_columns);
  a.lambda_classes = rep_classes(a.lambda);
  a.mu = static_cast<int>(a.classes.size());
  if (a.classes.size() != a.lambda_classes.size())
    throw internal_error("class counts disagree between Sigma and representatives");

  a.d = support_rank(a.Sigma, st);
  a.independence = independence_condition(a.Sigma, st);

  bool sigma_distinct_on_Sigma = [&] {
    std::set<Int> seen;
    for (int i : a.Sigma)
      if (!seen.insert(st.sigma_of(i)).second) return false;
    return true;
  }();
  if (sigma_distinct_on_Sigma && !a.class_forms_agree)
    throw internal_error("Sigma classes: set and column forms disagree");

  bool all_squares = std::all_of(st.sigma.begin(), st.sigma.end(),
                                 [](const Int& s) { return s == 1; });

  if (all_squares) {
    a.formula_path = "all-squares";
    a.density_plus = Dyadic::from_int(1);
  } else if (a.mu == 0) {
    a.formula_path = "mu-zero";
    a.density_plus = Dyadic::from_int(1);
  } else if (a.independence) {
    a.formula_path = "theorem-3.7";
    a.eps = epsilon_params(a.lambda, a.classes, st);
    M1Case m1_case = a.eps.M1.empty()
                         ? M1Case::kEmpty
                         : (a.eps.epsilon == 1 ? M1Case::kEqualsPhi : M1Case::kProper);
    a.epsilon = a.eps.epsilon;
    int expected_d = a.sigma_count - (a.eps.M1.empty() ? 0 : 1);
    if (a.d != expected_d)
      throw internal_error("support rank disagrees with the closed form");
    a.density_plus = closed_form_density(a.mu, a.sigma_count, m1_case);
    a.density_cross = partition_sum_density(a.mu, a.sigma_count, m1_case);
    if (!(*a.density_cross == a.density_plus))
      throw internal_error("closed form and partition sum disagree");
    if (run_cross_checks) {
      Int closed = pempty_closed_independent(a.mu, m1_case);
      Int brute = pempty_count_brute(a.lambda, a.eps.M1);
      bool degenerate = (m1_case == M1Case::kEqualsPhi && a.mu == 1);
      if (!degenerate && closed != brute)
        throw internal_error("partition count: closed form and enumeration disagree");
    }
  } else {
    a.formula_path = "general";
    GeneralParams gp = general_parameters(a.lambda, a.lambda_classes, st);
    a.alpha = gp.alpha;
    a.beta = gp.beta;
    a.omega = gp.m1_empty ? std::optional<int>{} : std::optional<int>{gp.omega};
    a.epsilon = gp.epsilon_formula;
    a.density_plus = general_density(gp);
    if (run_cross_checks && gp.pempty_brute != gp.pempty_closed)
      throw internal_error("partition count: omega closed form and enumeration disagree");
  }

  if (run_cross_checks)
    verify_class_bijection(a.lambda, a.classes, a.lambda_classes);

  // Exact density of the representative value sets along the sign-pattern
  // decomposition; an independent route kept alongside the formula value.
  std::vector<std::set<Int>> family;
  for (const FamilyRep& rep : a.lambda.reps) family.push_back(rep.S);
  a.density_exact = exact_family_density(family);
  a.exact_agrees = (*a.density_exact == a.density_plus);

  a.density_minus = Dyadic::from_int(1) - a.density_plus;
  return a;
}

}  // namespace qrd
