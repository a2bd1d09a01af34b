#include "qrd/json_io.hpp"

#include <limits>

#include "qrd/errors.hpp"

namespace qrd {

Json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw domain_error("expected an integer or a decimal string");
}

Json dyadic_to_json(const Dyadic& d) {
  Json j;
  j["num"] = int_to_json(d.num);
  j["log2_den"] = d.den_log2;
  return j;
}

Json rational_to_json(const Rational& r) {
  Json j;
  j["num"] = int_to_json(r.num);
  j["den"] = int_to_json(r.den);
  return j;
}

Json tuple_to_json(const StandardTuple& t) {
  Json j;
  j["a"] = Json::array();
  j["b"] = Json::array();
  for (const Int& v : t.a) j["a"].push_back(int_to_json(v));
  for (const Int& v : t.b) j["b"].push_back(int_to_json(v));
  j["s"] = t.s;
  return j;
}

StandardTuple tuple_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("s"))
    throw domain_error("tuple: expected {\"a\":[...],\"b\":[...],\"s\":N}");
  StandardTuple t;
  for (const Json& v : j.at("a")) t.a.push_back(int_from_json(v));
  for (const Json& v : j.at("b")) t.b.push_back(int_from_json(v));
  t.s = j.at("s").get<int>();
  t.validate();
  return t;
}

GeneratorConfig generator_from_json(const Json& j) {
  GeneratorConfig c;
  if (j.contains("s")) c.s = j.at("s").get<int>();
  if (j.contains("blocks")) {
    std::vector<std::vector<Int>> blocks;
    for (const Json& blk : j.at("blocks")) {
      std::vector<Int> gaps;
      for (const Json& g : blk) gaps.push_back(int_from_json(g));
      blocks.push_back(std::move(gaps));
    }
    c.blocks = std::move(blocks);
  } else if (j.contains("gaps")) {
    for (const Json& g : j.at("gaps")) c.gaps.push_back(int_from_json(g));
  } else {
    throw domain_error("generator: expected \"gaps\" or \"blocks\"");
  }
  if (j.contains("prime_mode") && j.at("prime_mode").get<bool>()) {
    c.prime_mode = true;
    return c;
  }
  if (!j.contains("seed") || !j.contains("multipliers"))
    throw domain_error("generator: need \"seed\" and \"multipliers\" unless prime_mode");
  const Json& seed = j.at("seed");
  if (!seed.is_array() || seed.size() != 2)
    throw domain_error("generator: seed must be [a1, b1]");
  c.seed = {int_from_json(seed[0]), int_from_json(seed[1])};
  for (const Json& m : j.at("multipliers")) c.multipliers.push_back(int_from_json(m));
  return c;
}

StandardTuple run_generator(const GeneratorConfig& config) {
  std::vector<Int> gaps = config.gaps;
  if (config.blocks) gaps = gaps_for_quotient_spec(*config.blocks, config.s);
  if (config.prime_mode) return generate_chain_primes(gaps, config.s);
  return generate_chain(gaps, *config.seed, config.multipliers, config.s);
}

namespace {

Json index_set_to_json(const std::set<int>& s) {
  Json arr = Json::array();
  for (int i : s) arr.push_back(i);
  return arr;
}

Json value_set_to_json(const std::set<Int>& s) {
  Json arr = Json::array();
  for (const Int& v : s) arr.push_back(int_to_json(v));
  return arr;
}

}  // namespace

Json analysis_to_json(const DensityAnalysis& a) {
  Json j;
  j["k"] = a.structure.k();
  Json parts = Json::array();
  for (const Int& v : a.structure.sigma) parts.push_back(int_to_json(v));
  j["squarefree_parts"] = parts;
  Json kmax = Json::array();
  for (const auto& K : a.kmax.members) kmax.push_back(index_set_to_json(K));
  j["kmax"] = kmax;
  Json lambda = Json::array();
  for (const FamilyRep& rep : a.lambda.reps) {
    Json r;
    r["I"] = index_set_to_json(rep.I);
    r["S"] = value_set_to_json(rep.S);
    r["Z"] = index_set_to_json(rep.Z);
    lambda.push_back(std::move(r));
  }
  j["lambda"] = lambda;
  j["Sigma"] = index_set_to_json(a.Sigma);
  j["Sigma_columns"] = index_set_to_json(a.Sigma_columns);
  j["sigma_forms_agree"] = a.sigma_forms_agree;
  Json classes = Json::array();
  for (const auto& cls : a.classes) classes.push_back(index_set_to_json(cls));
  j["classes"] = classes;
  j["mu"] = a.mu;
  j["sigma"] = a.sigma_count;
  j["d"] = a.d;
  j["epsilon"] = a.epsilon ? Json(*a.epsilon) : Json(nullptr);
  j["alpha"] = a.alpha ? int_to_json(*a.alpha) : Json(nullptr);
  j["beta"] = a.beta ? int_to_json(*a.beta) : Json(nullptr);
  j["omega"] = a.omega ? Json(*a.omega) : Json(nullptr);
  j["independence_condition"] = a.independence;
  j["formula_path"] = a.formula_path;
  j["density"] = dyadic_to_json(a.density_plus);
  j["density_minus"] = dyadic_to_json(a.density_minus);
  j["density_exact"] =
      a.density_exact ? dyadic_to_json(*a.density_exact) : Json(nullptr);
  j["exact_agrees"] = a.exact_agrees;
  return j;
}

Json empirical_to_json(const EmpiricalReport& r) {
  Json j;
  j["prime_bound"] = r.prime_bound;
  j["primes_considered"] = r.primes_considered;
  j["allowable_count"] = r.allowable_count;
  j["pi_plus_count"] = r.pi_plus_count;
  Json est;
  est["num"] = r.pi_plus_count;
  est["den"] = r.allowable_count;
  j["estimated_density"] = est;
  j["theoretical_density"] = dyadic_to_json(r.theoretical_density);
  j["estimated_value"] = r.estimated();
  j["absolute_error"] = r.absolute_error();
  return j;
}

Json qcount_to_json(const QCountReport& r) {
  Json j;
  j["p"] = r.p;
  j["epsilon"] = r.epsilon;
  j["q_count"] = r.q_count;
  j["predicted"] = rational_to_json(r.predicted);
  j["ratio"] = r.ratio();
  j["in_pi_plus"] = r.in_pi_plus;
  return j;
}

Json diagram_to_json(const QuotientDiagram& qd) {
  Json j;
  Json blocks = Json::array();
  for (const QuotientBlock& qb : qd.blocks) {
    Json b;
    Json labels = Json::array();
    for (const Rational& r : qb.diagram.labels) labels.push_back(r.str());
    b["labels"] = labels;
    Json cols = Json::array();
    for (const Column& c : qb.columns) {
      Json col;
      col["t"] = c.t.str();
      col["K"] = index_set_to_json(c.K);
      cols.push_back(std::move(col));
    }
    b["columns"] = cols;
    blocks.push_back(std::move(b));
  }
  j["blocks"] = blocks;
  return j;
}

}  // namespace qrd
