// Command-line front end for the floor-map analyzer: region classification,
// fixed points, basin decompositions, limit prediction, certified orbit
// simulation, cobweb/scan data, and the verification suites.
//
// Exit codes: 0 success; 1 verification failure or an exhausted orbit;
// 2 usage or parse errors.

#include "floormap/analysis.hpp"
#include "floormap/orbit.hpp"
#include "floormap/rational.hpp"
#include "floormap/serialize.hpp"
#include "floormap/verify.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fm = floormap;

namespace {

enum class Format { Plain, Json, Csv };

Format parse_format(const std::string& name, bool csv_flavored) {
  if (name == "json") return Format::Json;
  if (!csv_flavored && name == "plain") return Format::Plain;
  if (csv_flavored && name == "csv") return Format::Csv;
  throw std::invalid_argument("unsupported --format '" + name + "' for this subcommand");
}

// Grammar errors from Rational::parse surface as exit 2 via this wrapper's
// exceptions; the message names the offending argument.
fm::Rational parse_rational_arg(const std::string& text, const char* what) {
  try {
    return fm::Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  }
}

fm::Int parse_positive_int_arg(const std::string& text, const char* what) {
  fm::Rational r = parse_rational_arg(text, what);
  if (!r.is_integer() || r.num() < 1)
    throw std::invalid_argument(std::string(what) + ": expected a positive integer, got '" +
                                text + "'");
  return r.num();
}

int run_fixed_points(const std::string& lambda_text, Format format) {
  fm::Rational lambda = parse_rational_arg(lambda_text, "lambda");
  if (format == Format::Json) {
    std::cout << fm::fixed_points_json(lambda);
  } else {
    std::cout << fm::fixed_point_set_str(fm::fixed_points(lambda)) << "\n";
  }
  return 0;
}

int run_classify(const std::string& lambda_text, Format format) {
  fm::Rational lambda = parse_rational_arg(lambda_text, "lambda");
  if (format == Format::Json) {
    std::cout << fm::classify_json(lambda);
  } else {
    std::cout << fm::region_plain(fm::classify_lambda(lambda)) << "\n";
  }
  return 0;
}

int run_basins(const std::string& lambda_text, Format format) {
  fm::Rational lambda = parse_rational_arg(lambda_text, "lambda");
  fm::BasinDecomposition dec = fm::basin_decomposition(lambda);
  std::cout << (format == Format::Json ? fm::basins_json(dec) : fm::basins_plain(dec));
  return 0;
}

int run_predict(const std::string& lambda_text, const std::string& x0_text, Format format) {
  fm::Rational lambda = parse_rational_arg(lambda_text, "lambda");
  fm::Rational x0 = parse_rational_arg(x0_text, "x0");
  fm::LimitBehavior behavior = fm::predict_limit(lambda, x0);
  if (format == Format::Json) {
    std::cout << fm::behavior_json("x0", lambda, x0, behavior);
  } else {
    std::cout << fm::behavior_plain(behavior) << "\n";
  }
  return 0;
}

int run_omega(const std::string& lambda_text, const std::string& x0_text, Format format) {
  fm::Rational lambda = parse_rational_arg(lambda_text, "lambda");
  fm::Rational x0 = parse_rational_arg(x0_text, "x0");
  fm::LimitBehavior behavior = fm::omega_limit(lambda, x0);  // throws if exhausted -> exit 1
  if (format == Format::Json) {
    std::cout << fm::behavior_json("x0", lambda, x0, behavior);
  } else {
    std::cout << fm::behavior_plain(behavior) << "\n";
  }
  return 0;
}

int run_orbit(const std::string& lambda_text, const std::string& x0_text,
              const std::optional<std::string>& max_steps_text, Format format) {
  fm::Rational lambda = parse_rational_arg(lambda_text, "lambda");
  fm::Rational x0 = parse_rational_arg(x0_text, "x0");
  fm::Int budget =
      max_steps_text ? parse_positive_int_arg(*max_steps_text, "--max-steps")
                     : fm::default_max_steps(x0);
  fm::Orbit orbit = fm::simulate_orbit(lambda, x0, budget);
  std::cout << (format == Format::Json ? fm::orbit_json(orbit) : fm::orbit_plain(orbit));
  if (orbit.exhausted()) {
    std::cerr << "error: orbit exhausted its step budget without a decision\n";
    return 1;
  }
  return 0;
}

int run_cobweb(const std::string& lambda_text, const std::string& x0_text,
               const std::string& n_text, Format format) {
  fm::Rational lambda = parse_rational_arg(lambda_text, "lambda");
  fm::Rational x0 = parse_rational_arg(x0_text, "x0");
  fm::Int n = parse_positive_int_arg(n_text, "--n");
  auto points = fm::cobweb_points(lambda, x0, n);
  std::cout << (format == Format::Json ? fm::cobweb_json(lambda, x0, points)
                                       : fm::cobweb_csv(points));
  return 0;
}

int run_scan(const std::string& from_text, const std::string& to_text,
             const std::string& den_text, Format format) {
  fm::Rational from = parse_rational_arg(from_text, "--from");
  fm::Rational to = parse_rational_arg(to_text, "--to");
  fm::Int den = parse_positive_int_arg(den_text, "--den");
  if (to < from) throw std::invalid_argument("--to must not be less than --from");

  fm::Rational d(den);
  fm::Int p0 = (from * d).ceil();
  fm::Int p1 = (to * d).floor();
  std::vector<fm::ScanRow> rows;
  for (fm::Int p = p0; p <= p1; ++p) {
    fm::Rational lambda(p, den);
    rows.push_back({lambda, fm::classify_lambda(lambda)});
  }
  std::cout << (format == Format::Json ? fm::scan_json(rows) : fm::scan_csv(rows));
  return 0;
}

int run_verify(const std::optional<std::uint64_t>& seed, const std::optional<long long>& samples,
               const std::vector<std::string>& exhaustive, Format format) {
  fm::GridSpec grid = fm::default_grid();
  if (seed) grid.seed = *seed;
  if (samples) {
    if (*samples < 0) throw std::invalid_argument("--samples must be >= 0");
    grid.random_lambdas_per_family = static_cast<int>(*samples);
  }

  std::vector<std::pair<std::string, fm::VerifyReport>> sections;
  sections.emplace_back("lemma1", fm::verify_lemma1(grid));
  sections.emplace_back("theorems", fm::verify_theorems(grid));
  if (!exhaustive.empty()) {
    fm::Rational lambda = parse_rational_arg(exhaustive[0], "--exhaustive lambda");
    fm::Int bound = parse_positive_int_arg(exhaustive[1], "--exhaustive bound");
    sections.emplace_back("exhaustive", fm::verify_small_instance_exhaustive(lambda, bound));
  }

  bool all_passed = true;
  for (const auto& [name, rep] : sections) {
    all_passed = all_passed && rep.passed();
    std::cerr << name << ": " << rep.elapsed_seconds << "s\n";
  }

  if (format == Format::Json) {
    std::cout << fm::verify_json(sections);
  } else {
    for (const auto& [name, rep] : sections) std::cout << "[" << name << "]\n" << rep.render() << "\n";
    std::cout << "overall: " << (all_passed ? "PASS" : "FAIL") << "\n";
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact analyzer and simulator for the map f(x) = floor(lambda*x)"};
  app.require_subcommand(1);

  std::string lambda_text, x0_text, n_text, from_text, to_text, den_text;
  std::optional<std::string> max_steps_text;
  std::optional<std::uint64_t> seed;
  std::optional<long long> samples;
  std::vector<std::string> exhaustive;
  std::string format_name;

  CLI::App* fixed_sub = app.add_subcommand("fixed-points", "print Fix(f) for a parameter");
  fixed_sub->add_option("lambda", lambda_text, "parameter value")->required();
  fixed_sub->add_option("--format", format_name);

  CLI::App* classify_sub = app.add_subcommand("classify", "print the parameter region and index");
  classify_sub->add_option("lambda", lambda_text)->required();
  classify_sub->add_option("--format", format_name);

  CLI::App* basins_sub = app.add_subcommand("basins", "print the basin decomposition");
  basins_sub->add_option("lambda", lambda_text)->required();
  basins_sub->add_option("--format", format_name);

  CLI::App* predict_sub = app.add_subcommand("predict", "closed-form limit behavior of x0");
  predict_sub->add_option("lambda", lambda_text)->required();
  predict_sub->add_option("x0", x0_text)->required();
  predict_sub->add_option("--format", format_name);

  CLI::App* omega_sub = app.add_subcommand("omega", "simulated (certified) limit behavior of x0");
  omega_sub->add_option("lambda", lambda_text)->required();
  omega_sub->add_option("x0", x0_text)->required();
  omega_sub->add_option("--format", format_name);

  CLI::App* orbit_sub = app.add_subcommand("orbit", "simulate the orbit of x0");
  orbit_sub->add_option("lambda", lambda_text)->required();
  orbit_sub->add_option("x0", x0_text)->required();
  orbit_sub->add_option("--max-steps", max_steps_text, "step budget (default scales with x0)");
  orbit_sub->add_option("--format", format_name);

  CLI::App* cobweb_sub = app.add_subcommand("cobweb", "staircase plot data as CSV");
  cobweb_sub->add_option("lambda", lambda_text)->required();
  cobweb_sub->add_option("x0", x0_text)->required();
  cobweb_sub->add_option("--n", n_text, "number of map applications")->required();
  cobweb_sub->add_option("--format", format_name);

  CLI::App* scan_sub = app.add_subcommand("scan", "region/|Fix| staircase over a parameter grid");
  scan_sub->add_option("--from", from_text, "lower end of the parameter range")->required();
  scan_sub->add_option("--to", to_text, "upper end of the parameter range")->required();
  scan_sub->add_option("--den", den_text, "grid denominator D; rows step by 1/D")->required();
  scan_sub->add_option("--format", format_name);

  CLI::App* verify_sub = app.add_subcommand("verify", "run the verification suites");
  verify_sub->add_option("--seed", seed, "seed for the randomized grids");
  verify_sub->add_option("--samples", samples, "random parameters per region family");
  verify_sub
      ->add_option("--exhaustive", exhaustive,
                   "lambda and bound for the exhaustive small-instance oracle")
      ->expected(2);
  verify_sub->add_option("--format", format_name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*fixed_sub)
      return run_fixed_points(lambda_text,
                              parse_format(format_name.empty() ? "plain" : format_name, false));
    if (*classify_sub)
      return run_classify(lambda_text,
                          parse_format(format_name.empty() ? "plain" : format_name, false));
    if (*basins_sub)
      return run_basins(lambda_text,
                        parse_format(format_name.empty() ? "plain" : format_name, false));
    if (*predict_sub)
      return run_predict(lambda_text, x0_text,
                         parse_format(format_name.empty() ? "plain" : format_name, false));
    if (*omega_sub)
      return run_omega(lambda_text, x0_text,
                       parse_format(format_name.empty() ? "plain" : format_name, false));
    if (*orbit_sub)
      return run_orbit(lambda_text, x0_text, max_steps_text,
                       parse_format(format_name.empty() ? "plain" : format_name, false));
    if (*cobweb_sub)
      return run_cobweb(lambda_text, x0_text, n_text,
                        parse_format(format_name.empty() ? "csv" : format_name, true));
    if (*scan_sub)
      return run_scan(from_text, to_text, den_text,
                      parse_format(format_name.empty() ? "csv" : format_name, true));
    if (*verify_sub)
      return run_verify(seed, samples, exhaustive,
                        parse_format(format_name.empty() ? "plain" : format_name, false));
    std::cerr << "error: no subcommand selected\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
