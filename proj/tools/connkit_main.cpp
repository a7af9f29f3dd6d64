// Command-line front end: `verify` runs the identity suites against a config
// file, `evaluate` prints one geometric quantity at a point, and `catalog`
// lists the built-in fixture configs.  Exit codes: 0 success / all suites
// pass, 1 a suite failed, 2 configuration or usage error.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "connkit/cartan.hpp"
#include "connkit/catalog.hpp"
#include "connkit/config.hpp"
#include "connkit/errors.hpp"
#include "connkit/numfmt.hpp"
#include "connkit/suites.hpp"

namespace {

using namespace connkit;

std::string join_components(std::span<const double> xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += format_double(xs[i]);
  }
  out += "]";
  return out;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

struct UsageError {
  std::string msg;
};

Point parse_point(const std::string& spec, const Chart& chart) {
  std::vector<std::string> parts = split_csv(spec);
  if (static_cast<int>(parts.size()) != chart.dim)
    throw UsageError{"--point needs " + std::to_string(chart.dim) + " comma-separated values"};
  Point p;
  for (const std::string& s : parts) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end == nullptr || *end != '\0')
      throw UsageError{"cannot parse point component '" + s + "'"};
    p.x.push_back(v);
  }
  if (!chart.contains(p.x))
    throw UsageError{"point " + join_components(p.x) + " lies outside the chart box"};
  return p;
}

// Argument tokens: e<k> / dx<k> are the coordinate frame, b<k> / beta<k> the
// active frame; k is 1-based.
int parse_index(const std::string& tok, std::size_t prefix, int dim) {
  const std::string digits = tok.substr(prefix);
  if (digits.empty()) throw UsageError{"argument '" + tok + "' is missing its index"};
  for (char c : digits)
    if (c < '0' || c > '9') throw UsageError{"argument '" + tok + "' has a malformed index"};
  const int k = std::atoi(digits.c_str());
  if (k < 1 || k > dim)
    throw UsageError{"argument '" + tok + "' is out of range for dimension " +
                     std::to_string(dim)};
  return k - 1;
}

VectorField parse_vector_arg(const std::string& tok, const CompiledConfig& cc) {
  const int n = cc.G.dim();
  if (tok.size() >= 2 && tok[0] == 'e' && tok[1] >= '0' && tok[1] <= '9')
    return VectorField::coordinate_basis(n, parse_index(tok, 1, n));
  if (tok.size() >= 2 && tok[0] == 'b' && tok[1] >= '0' && tok[1] <= '9')
    return cc.active_frame.b[static_cast<std::size_t>(parse_index(tok, 1, n))];
  throw UsageError{"unknown vector argument '" + tok + "' (expected e<k> or b<k>)"};
}

FormField parse_form_arg(const std::string& tok, const CompiledConfig& cc) {
  const int n = cc.G.dim();
  if (tok.rfind("dx", 0) == 0) return FormField::coordinate_basis(n, parse_index(tok, 2, n));
  if (tok.rfind("beta", 0) == 0)
    return cc.active_frame.beta[static_cast<std::size_t>(parse_index(tok, 4, n))];
  throw UsageError{"unknown form argument '" + tok + "' (expected dx<k> or beta<k>)"};
}

int do_verify(const std::string& config_path, const std::vector<std::string>& suite_flags,
              int samples_flag, bool seed_set, std::uint64_t seed_flag,
              const std::string& format, const std::vector<std::string>& tol_specs) {
  SpecConfig cfg = load_config(config_path);
  CompiledConfig cc = compile_config(cfg);

  const int samples = samples_flag > 0 ? samples_flag : cfg.samples;
  const std::uint64_t seed = seed_set ? seed_flag : cfg.seed;

  std::vector<std::string> suites = suite_flags.empty() ? cfg.suites : suite_flags;
  if (suites.size() == 1 && suites[0] == "all") suites.clear();
  for (const std::string& s : suites)
    if (suite_ordinal(s) < 0) throw UsageError{"unknown suite '" + s + "'"};

  std::map<std::string, double> tols = cfg.tolerance_overrides;
  for (const std::string& spec : tol_specs) {
    const std::size_t eq = spec.find('=');
    if (eq == std::string::npos) throw UsageError{"--tol expects SUITE=VALUE, got '" + spec + "'"};
    const std::string name = spec.substr(0, eq);
    if (suite_ordinal(name) < 0) throw UsageError{"unknown suite '" + name + "' in --tol"};
    char* end = nullptr;
    const double v = std::strtod(spec.c_str() + eq + 1, &end);
    if (end == nullptr || *end != '\0' || !(v > 0.0))
      throw UsageError{"--tol value for '" + name + "' must be a positive number"};
    tols[name] = v;
  }

  Report rep = run_suites(cc, suites, samples, seed, tols);
  std::cout << (format == "json" ? report_to_json(rep) : report_to_text(rep));
  return rep.pass ? 0 : 1;
}

int do_evaluate(const std::string& config_path, const std::string& quantity,
                const std::string& point_spec, const std::string& args_spec) {
  SpecConfig cfg = load_config(config_path);
  CompiledConfig cc = compile_config(cfg);
  const Connection& G = cc.G;
  Point p = parse_point(point_spec, cc.chart);
  std::vector<std::string> args = split_csv(args_spec);

  const auto need = [&](std::size_t n, const char* shape) {
    if (args.size() != n)
      throw UsageError{std::string("quantity '") + quantity + "' needs --args " + shape};
  };

  std::string value;
  if (quantity == "nabla_v") {
    need(2, "<vector>,<vector>");
    Vector out =
        G.cov_deriv_vector(parse_vector_arg(args[0], cc), parse_vector_arg(args[1], cc)).at(p);
    value = join_components(out.c);
  } else if (quantity == "nabla_form") {
    need(2, "<vector>,<form>");
    Form out =
        G.cov_deriv_form(parse_vector_arg(args[0], cc), parse_form_arg(args[1], cc)).at(p);
    value = join_components(out.c);
  } else if (quantity == "gamma_plus" || quantity == "gamma_minus") {
    need(2, "<vector>,<form>");
    VectorField v = parse_vector_arg(args[0], cc);
    FormField w = parse_form_arg(args[1], cc);
    Form out = quantity == "gamma_plus" ? gamma_plus(G, v, w, cc.active_frame).at(p)
                                        : gamma_minus(G, v, w, cc.active_frame).at(p);
    value = join_components(out.c);
  } else if (quantity == "torsion") {
    need(2, "<vector>,<vector>");
    TorsionFamily tf = torsion_family(G, cc.active_frame);
    Vector out = tf.tau(parse_vector_arg(args[0], cc), parse_vector_arg(args[1], cc)).at(p);
    value = join_components(out.c);
  } else if (quantity == "theta") {
    need(1, "<form>");
    TorsionFamily tf = torsion_family(G, cc.active_frame);
    KForm out = tf.theta(parse_form_arg(args[0], cc), p);
    value = join_components(out.components());
  } else if (quantity == "rho") {
    need(3, "<vector>,<vector>,<vector>");
    CurvatureFamily cf = curvature_family(G, cc.active_frame);
    Vector out = cf.rho(parse_vector_arg(args[0], cc), parse_vector_arg(args[1], cc),
                        parse_vector_arg(args[2], cc))
                     .at(p);
    value = join_components(out.c);
  } else if (quantity == "omega") {
    need(2, "<vector>,<form>");
    CurvatureFamily cf = curvature_family(G, cc.active_frame);
    KForm out = cf.omega(parse_vector_arg(args[0], cc), parse_form_arg(args[1], cc), p);
    value = join_components(out.components());
  } else if (quantity == "curl") {
    need(1, "<form>");
    KForm out = covariant_curl(G, parse_form_arg(args[0], cc), p, cc.active_frame);
    value = join_components(out.components());
  } else {
    throw UsageError{"unknown quantity '" + quantity + "'"};
  }

  std::cout << quantity << "(" << args_spec << ") at " << join_components(p.x) << ":\n"
            << value << "\n";
  return 0;
}

int do_catalog(bool list, const std::string& show_name) {
  if (list) {
    for (const FixtureEntry& e : fixture_catalog())
      std::cout << e.name << "  -  " << e.description << "\n";
    return 0;
  }
  const FixtureEntry* e = find_fixture(show_name.c_str());
  if (e == nullptr) {
    std::cerr << "no fixture named '" << show_name << "'\n";
    return 2;
  }
  std::cout << e->text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification kernel for parallelism structures on coordinate charts"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run verification suites against a config");
  std::string config_path;
  verify->add_option("config", config_path, "config file")->required();
  std::vector<std::string> suite_flags;
  verify->add_option("--suite", suite_flags, "suites to run (default: all)")->delimiter(',');
  int samples_flag = -1;
  verify->add_option("--samples", samples_flag, "override the sample count")
      ->check(CLI::PositiveNumber);
  std::uint64_t seed_flag = 0;
  auto* seed_opt = verify->add_option("--seed", seed_flag, "override the seed");
  std::string format = "text";
  verify->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  std::vector<std::string> tol_specs;
  verify->add_option("--tol", tol_specs, "tolerance override SUITE=VALUE");

  auto* evaluate = app.add_subcommand("evaluate", "evaluate one quantity at a point");
  std::string eval_config, quantity, point_spec, args_spec;
  evaluate->add_option("config", eval_config, "config file")->required();
  evaluate
      ->add_option("--quantity", quantity,
                   "nabla_v | nabla_form | gamma_plus | gamma_minus | torsion | theta | rho | "
                   "omega | curl")
      ->required();
  evaluate->add_option("--point", point_spec, "comma-separated coordinates")->required();
  evaluate->add_option("--args", args_spec,
                       "comma-separated field arguments: e<k>, dx<k>, b<k>, beta<k>");

  auto* catalog = app.add_subcommand("catalog", "built-in fixture configs");
  auto* cat_list = catalog->add_subcommand("list", "list fixture names");
  auto* cat_show = catalog->add_subcommand("show", "print a fixture config");
  std::string show_name;
  cat_show->add_option("name", show_name, "fixture name")->required();
  catalog->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify)
      return do_verify(config_path, suite_flags, samples_flag, seed_opt->count() > 0, seed_flag,
                       format, tol_specs);
    if (*evaluate) return do_evaluate(eval_config, quantity, point_spec, args_spec);
    if (*catalog) return do_catalog(cat_list->parsed(), cat_show->parsed() ? show_name : "");
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.msg << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const SingularFrameError& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
