// Command-line front end: analyze tuples, print densities, run the sieve
// verifier, count qualifying progressions, generate tuples, render diagrams.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qrd/density.hpp"
#include "qrd/diagrams.hpp"
#include "qrd/empirical.hpp"
#include "qrd/errors.hpp"
#include "qrd/json_io.hpp"

namespace {

using qrd::Json;

std::string read_source(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return arg;
  std::ifstream in(arg);
  if (!in) throw qrd::domain_error("cannot open input file: " + arg);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw qrd::domain_error(std::string("malformed JSON input: ") + e.what());
  }
}

std::string tuple_summary(const qrd::StandardTuple& t) {
  std::ostringstream os;
  os << "a=(";
  for (std::size_t i = 0; i < t.a.size(); ++i)
    os << (i ? "," : "") << t.a[i].str();
  os << ") b=(";
  for (std::size_t i = 0; i < t.b.size(); ++i)
    os << (i ? "," : "") << t.b[i].str();
  os << ") s=" << t.s;
  return os.str();
}

void print_analysis_text(const qrd::DensityAnalysis& a) {
  std::cout << "tuple: " << tuple_summary(a.structure.tuple) << "\n";
  std::cout << "k = " << a.structure.k() << ", squarefree parts:";
  for (const auto& v : a.structure.sigma) std::cout << " " << v.str();
  std::cout << "\n";
  std::cout << "kmax:";
  for (const auto& K : a.kmax.members) {
    std::cout << " {";
    bool first = true;
    for (int i : K) {
      std::cout << (first ? "" : ",") << i;
      first = false;
    }
    std::cout << "}";
  }
  std::cout << "\n";
  std::cout << "mu = " << a.mu << "\n";
  std::cout << "sigma = " << a.sigma_count << "\n";
  std::cout << "d = " << a.d << "\n";
  if (a.epsilon)
    std::cout << "epsilon = " << *a.epsilon << "\n";
  std::string m1;
  if (a.formula_path == "theorem-3.7")
    m1 = a.eps.M1.empty() ? "empty"
                          : (a.eps.epsilon == 1 ? "equals Phi(varpi0)"
                                                : "proper nonempty part");
  else
    m1 = "n/a";
  std::cout << "M1 status: " << m1 << "\n";
  if (a.alpha) std::cout << "alpha = " << a.alpha->str() << "\n";
  if (a.beta) std::cout << "beta = " << a.beta->str() << "\n";
  if (a.omega) std::cout << "omega = " << *a.omega << "\n";
  std::cout << "formula path: " << a.formula_path << "\n";
  std::cout << "density of Pi+ = " << a.density_plus.fraction_str() << " = "
            << a.density_plus.decimal_str() << "\n";
  std::cout << "density of Pi- = " << a.density_minus.fraction_str() << " = "
            << a.density_minus.decimal_str() << "\n";
  if (a.density_exact && !a.exact_agrees)
    std::cout << "note: exact sign-pattern evaluation gives "
              << a.density_exact->fraction_str()
              << "; the closed formula above differs on this input\n";
}

int dispatch(const std::string& command, const std::string& tuple_source,
             std::uint64_t bound, std::uint64_t prime, const std::string& epsilon,
             const std::string& format, bool check, bool verbose) {
  bool json_mode = format == "json";

  if (command == "render") {
    Json j = parse_json(read_source(tuple_source));
    if (j.contains("gaps") && !j.contains("a")) {
      qrd::OverlapDiagram d;
      d.s = j.contains("s") ? j.at("s").get<int>() : 2;
      for (const Json& g : j.at("gaps")) d.gaps.push_back(g.get<long long>());
      std::cout << qrd::render_ascii(d);
      return 0;
    }
    qrd::StandardTuple t = qrd::tuple_from_json(j);
    qrd::TupleStructure st = qrd::build_structure(t);
    qrd::QuotientDiagram qd = qrd::quotient_diagram(st);
    if (json_mode)
      std::cout << qrd::diagram_to_json(qd).dump() << "\n";
    else
      std::cout << qrd::render_ascii(qd);
    return 0;
  }

  if (command == "generate") {
    Json j = parse_json(read_source(tuple_source));
    qrd::GeneratorConfig config = qrd::generator_from_json(j);
    qrd::StandardTuple t = qrd::run_generator(config);
    qrd::DensityAnalysis a = qrd::analyze(t, check);
    if (json_mode) {
      Json out;
      out["tuple"] = qrd::tuple_to_json(t);
      out["analysis"] = qrd::analysis_to_json(a);
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "tuple: " << qrd::tuple_to_json(t).dump() << "\n";
      print_analysis_text(a);
    }
    return 0;
  }

  qrd::StandardTuple t = qrd::tuple_from_json(parse_json(read_source(tuple_source)));

  if (command == "analyze" || command == "density") {
    qrd::DensityAnalysis a = qrd::analyze(t, check);
    if (command == "density") {
      if (json_mode) {
        std::cout << qrd::dyadic_to_json(a.density_plus).dump() << "\n";
      } else {
        std::cout << a.density_plus.fraction_str() << "\n"
                  << a.density_plus.decimal_str() << "\n";
      }
      return 0;
    }
    if (json_mode)
      std::cout << qrd::analysis_to_json(a).dump() << "\n";
    else {
      print_analysis_text(a);
      if (check) std::cout << "all cross-checks passed\n";
    }
    return 0;
  }

  if (command == "empirical") {
    if (bound < 100)
      throw qrd::domain_error("empirical: prime bound must be >= 100");
    std::ostringstream csv;
    auto per_prime = [&](std::uint64_t p, bool allowed, bool member) {
      if (verbose)
        csv << p << "," << (allowed ? 1 : 0) << "," << (member ? 1 : 0) << "\n";
    };
    qrd::EmpiricalReport r = qrd::empirical_density(t, bound, per_prime);
    if (json_mode)
      std::cout << qrd::empirical_to_json(r).dump() << "\n";
    else {
      std::cout << "primes considered: " << r.primes_considered << "\n";
      std::cout << "allowable: " << r.allowable_count << "\n";
      std::cout << "members: " << r.pi_plus_count << "\n";
      std::cout << "estimated density:  " << r.estimated() << "\n";
      std::cout << "theoretical density: " << r.theoretical_density.fraction_str()
                << " = " << r.theoretical_density.decimal_str() << "\n";
      std::cout << "absolute error: " << r.absolute_error() << "\n";
      if (verbose) std::cout << "p,allowable,member\n" << csv.str();
    }
    return 0;
  }

  if (command == "qcount") {
    if (prime == 0) throw qrd::domain_error("qcount: --prime is required");
    int eps = 1;
    if (epsilon == "-1")
      eps = -1;
    else if (epsilon != "+1" && epsilon != "1" && !epsilon.empty())
      throw qrd::domain_error("qcount: --epsilon must be +1 or -1");
    qrd::QCountReport r = qrd::q_epsilon_count(prime, t, eps);
    if (json_mode)
      std::cout << qrd::qcount_to_json(r).dump() << "\n";
    else {
      std::cout << "p = " << r.p << ", epsilon = " << (r.epsilon > 0 ? "+1" : "-1")
                << "\n";
      std::cout << "q_count = " << r.q_count << "\n";
      std::cout << "predicted = " << r.predicted.str() << "\n";
      std::cout << "ratio = " << r.ratio() << "\n";
      std::cout << "in_pi_plus = " << (r.in_pi_plus ? "true" : "false") << "\n";
    }
    return 0;
  }

  throw qrd::domain_error("unknown command: " + command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and empirical densities of primes whose residue or "
               "non-residue sets contain prescribed progression unions"};
  app.require_subcommand(1);

  std::string tuple_source, format = "text", epsilon = "+1";
  std::uint64_t bound = 1'000'000, prime = 0;
  bool check = false, verbose = false;

  auto add_common = [&](CLI::App* sub, bool needs_tuple = true) {
    auto* opt = sub->add_option("--tuple", tuple_source,
                                "tuple as inline JSON or a path to a JSON file");
    if (needs_tuple) opt->required();
    sub->add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* analyze = app.add_subcommand("analyze", "full density analysis");
  add_common(analyze);
  analyze->add_flag("--check", check, "run every internal cross-check");

  CLI::App* density = app.add_subcommand("density", "density only");
  add_common(density);

  CLI::App* empirical =
      app.add_subcommand("empirical", "sieve verification of the density");
  add_common(empirical);
  empirical->add_option("--bound", bound, "prime bound (default 10^6)");
  empirical->add_flag("-v,--verbose", verbose, "dump a CSV row per prime");

  CLI::App* qcount =
      app.add_subcommand("qcount", "count qualifying progression unions mod p");
  add_common(qcount);
  qcount->add_option("--prime", prime, "odd prime p")->required();
  qcount->add_option("--epsilon", epsilon, "+1 for residues, -1 for non-residues");

  CLI::App* generate =
      app.add_subcommand("generate", "build a tuple from a gap prescription");
  add_common(generate);

  CLI::App* render = app.add_subcommand("render", "ASCII diagram");
  add_common(render);

  CLI11_PARSE(app, argc, argv);

  std::string command;
  for (auto* sub : {analyze, density, empirical, qcount, generate, render})
    if (sub->parsed()) command = sub->get_name();

  try {
    return dispatch(command, tuple_source, bound, prime, epsilon, format, check,
                    verbose);
  } catch (const qrd::invalid_tuple_error& e) {
    std::cerr << "invalid tuple: " << e.what() << "\n";
    return 3;
  } catch (const qrd::size_limit_error& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return 4;
  } catch (const qrd::resource_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 5;
  } catch (const qrd::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const qrd::internal_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
