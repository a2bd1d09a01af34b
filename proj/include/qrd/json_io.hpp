#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "qrd/density.hpp"
#include "qrd/empirical.hpp"

namespace qrd {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits are emitted as JSON numbers, larger ones as
// decimal strings; parsing accepts both forms.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json dyadic_to_json(const Dyadic& d);
Json rational_to_json(const Rational& r);

Json tuple_to_json(const StandardTuple& t);
StandardTuple tuple_from_json(const Json& j);

struct GeneratorConfig {
  std::vector<Int> gaps;
  std::optional<std::vector<std::vector<Int>>> blocks;  // alternative to gaps
  std::optional<std::pair<Int, Int>> seed;
  std::vector<Int> multipliers;
  bool prime_mode = false;
  int s = 2;
};
GeneratorConfig generator_from_json(const Json& j);
StandardTuple run_generator(const GeneratorConfig& config);

Json analysis_to_json(const DensityAnalysis& a);
Json empirical_to_json(const EmpiricalReport& r);
Json qcount_to_json(const QCountReport& r);
Json diagram_to_json(const QuotientDiagram& qd);

}  // namespace qrd
