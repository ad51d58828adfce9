#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"

#include "ddo/cli.hpp"
#include "ddo/errors.hpp"
#include "ddo/spectra.hpp"
#include "ddo/verify.hpp"

namespace ddo::cli {

using nlohmann::json;

namespace {

std::string normalize_key(std::string key) {
  std::replace(key.begin(), key.end(), '_', '-');
  return key;
}

void set_mu(RunConfig& c, std::size_t axis, double v) {
  if (c.params.mu.size() <= axis) c.params.mu.resize(axis + 1, 0.0);
  c.params.mu[axis] = v;
}

template <typename T>
T get_as(const json& v, const std::string& key) {
  try {
    return v.get<T>();
  } catch (const json::exception&) {
    throw UsageError("config field '" + key + "' has the wrong type");
  }
}

// Opens config.output (or passes `out` through) for a command's payload.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file " + path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

bool keep(const RunConfig& c, const LevelRecord& r) {
  if (const auto* s = std::get_if<SectorNumbers>(&r.qn)) {
    if (c.epsilon && s->epsilon != *c.epsilon) return false;
    if (c.branch && s->branch != *c.branch) return false;
    return true;
  }
  if (const auto* q = std::get_if<CartesianNumbers>(&r.qn)) {
    if (c.epsilon && !q->parity.empty()) {
      int prod = 1;
      for (int e : q->parity) prod *= e;
      return prod == *c.epsilon;
    }
  }
  return true;
}

bool is_sector_model(ModelKind k) { return k == ModelKind::DunklLandau || k == ModelKind::DunklDarbouxLandau; }

void finalize(RunConfig& c, bool dim_given) {
  if (is_landau(c.model) && !dim_given) c.params.dim = 2;
  auto& mu = c.params.mu;
  const auto dim = static_cast<std::size_t>(std::max(c.params.dim, 1));
  if (mu.size() > dim) {
    for (std::size_t i = dim; i < mu.size(); ++i)
      if (mu[i] != 0.0) throw UsageError("mu given for axis " + std::to_string(i + 1) + " but dim is " + std::to_string(dim));
    mu.resize(dim);
  }
  if (std::all_of(mu.begin(), mu.end(), [](double v) { return v == 0.0; })) mu.clear();
  if (!mu.empty()) mu.resize(dim, 0.0);
}

}  // namespace

void apply_json(RunConfig& c, const json& j) {
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  for (const auto& [raw, v] : j.items()) {
    const std::string key = normalize_key(raw);
    if (key == "model") {
      const auto s = get_as<std::string>(v, key);
      const auto kind = parse_model_id(s);
      if (!kind) throw UsageError("unknown model '" + s + "'");
      c.model = *kind;
    } else if (key == "dim") {
      c.params.dim = get_as<int>(v, key);
    } else if (key == "lambda") {
      c.params.lambda = get_as<double>(v, key);
    } else if (key == "mu") {
      c.params.mu = get_as<std::vector<double>>(v, key);
    } else if (key == "mu-x") {
      set_mu(c, 0, get_as<double>(v, key));
    } else if (key == "mu-y") {
      set_mu(c, 1, get_as<double>(v, key));
    } else if (key == "mu-z") {
      set_mu(c, 2, get_as<double>(v, key));
    } else if (key == "omega") {
      c.params.omega = get_as<double>(v, key);
    } else if (key == "omega-c") {
      c.params.omega_c = get_as<double>(v, key);
    } else if (key == "hbar") {
      c.params.hbar = get_as<double>(v, key);
    } else if (key == "levels") {
      c.levels = get_as<int>(v, key);
    } else if (key == "epsilon") {
      if (v.is_null()) c.epsilon.reset(); else c.epsilon = get_as<int>(v, key);
    } else if (key == "branch") {
      if (v.is_null()) c.branch.reset(); else c.branch = get_as<int>(v, key);
    } else if (key == "format") {
      const auto s = get_as<std::string>(v, key);
      if (s == "csv") c.format = OutputFormat::Csv;
      else if (s == "json") c.format = OutputFormat::Json;
      else throw UsageError("format must be csv or json");
    } else if (key == "output") {
      c.output = get_as<std::string>(v, key);
    } else if (key == "check") {
      c.checks = v.is_array() ? get_as<std::vector<std::string>>(v, key)
                              : std::vector<std::string>{get_as<std::string>(v, key)};
    } else if (key == "basis") {
      c.basis = get_as<int>(v, key);
    } else if (key == "seed") {
      c.seed = get_as<unsigned>(v, key);
    } else if (key == "tolerance") {
      if (v.is_null()) c.tolerance.reset(); else c.tolerance = get_as<double>(v, key);
    } else if (key == "sweep") {
      c.sweep = get_as<std::string>(v, key);
    } else if (key == "values") {
      c.values = get_as<std::vector<double>>(v, key);
    } else if (key == "x-squared") {
      c.x_squared = get_as<std::vector<double>>(v, key);
    } else if (key != "config") {
      throw UsageError("unknown config field '" + raw + "'");
    }
  }
}

json config_to_json(const RunConfig& c) {
  json j;
  j["model"] = std::string(model_id(c.model));
  j["dim"] = c.params.dim;
  j["lambda"] = c.params.lambda;
  j["mu"] = c.params.mu;
  j["omega"] = c.params.omega;
  j["omega-c"] = c.params.omega_c;
  j["hbar"] = c.params.hbar;
  j["levels"] = c.levels;
  j["epsilon"] = c.epsilon ? json(*c.epsilon) : json(nullptr);
  j["branch"] = c.branch ? json(*c.branch) : json(nullptr);
  j["format"] = c.format == OutputFormat::Csv ? "csv" : "json";
  j["output"] = c.output;
  j["check"] = c.checks;
  j["basis"] = c.basis;
  j["seed"] = c.seed;
  j["tolerance"] = c.tolerance ? json(*c.tolerance) : json(nullptr);
  j["sweep"] = c.sweep;
  j["values"] = c.values;
  j["x-squared"] = c.x_squared;
  return j;
}

void validate(const RunConfig& c) {
  try {
    c.params.validate_for(c.model);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (c.levels < 0) throw UsageError("levels must be >= 0");
  if (c.epsilon) {
    if (*c.epsilon != 1 && *c.epsilon != -1) throw UsageError("epsilon must be +1 or -1");
    if (!has_reflections(c.model) || c.params.dim != 2)
      throw UsageError("epsilon filter needs a 2D model with reflections");
  }
  if (c.branch) {
    if (*c.branch != 1 && *c.branch != -1) throw UsageError("branch must be +1 or -1");
    if (!is_sector_model(c.model)) throw UsageError("branch filter needs dunkl-landau or dunkl-darboux-landau");
  }
  if (c.basis < 0 || (c.basis > 0 && c.basis < 16)) throw UsageError("basis must be 0 (default) or >= 16");
  if (c.sweep != "lambda" && c.sweep != "field") throw UsageError("sweep must be lambda or field");
  if (c.sweep == "field" && !is_landau(c.model)) throw UsageError("field sweep needs a model with a magnetic field");
  for (const auto& name : c.checks) {
    const auto& names = verify::suite_names();
    if (name != "all" && name != "acceptance" && std::find(names.begin(), names.end(), name) == names.end())
      throw UsageError("unknown check '" + name + "'");
  }
}

std::vector<LevelRecord> spectrum_records(const RunConfig& c) {
  auto records = spectra::enumerate_levels(c.model, c.params, c.levels);
  std::erase_if(records, [&](const LevelRecord& r) { return !keep(c, r); });
  spectra::sort_and_group(records);
  return records;
}

int cmd_spectrum(const RunConfig& c, std::ostream& out) {
  validate(c);
  const auto records = spectrum_records(c);
  Sink sink(c.output, out);
  if (c.format == OutputFormat::Json)
    sink.get() << records_to_json(records).dump(2) << '\n';
  else
    write_csv(sink.get(), records);
  return 0;
}

int cmd_levels_figure(const RunConfig& c, std::ostream& out) {
  validate(c);
  if (c.values.empty()) throw UsageError("levels-figure needs a nonempty --values list");
  const bool field = c.sweep == "field";
  for (double v : c.values)
    if (!(v >= 0.0)) throw UsageError("sweep values must be >= 0");
  RunConfig base = c;
  if (field) base.params.omega_c = 0.0;
  // sweep values are checked against the model before any work
  for (double v : c.values) {
    ModelParams p = base.params;
    (field ? p.omega_c : p.lambda) = field ? 0.5 * v : v;
    try {
      p.validate_for(c.model);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  auto records = spectra::sweep_levels(c.model, base.params,
                                       field ? spectra::SweepParameter::Field : spectra::SweepParameter::Lambda,
                                       c.values, c.levels);
  std::erase_if(records, [&](const LevelRecord& r) { return !keep(c, r); });
  Sink sink(c.output, out);
  auto value_of = [&](const LevelRecord& r) { return field ? 2.0 * r.params.omega_c : r.params.lambda; };
  if (c.format == OutputFormat::Json) {
    json arr = json::array();
    for (const auto& r : records) {
      json j = record_to_json(r);
      j["value"] = value_of(r);
      arr.push_back(j);
    }
    sink.get() << json{{"sweep", c.sweep}, {"values", c.values}, {"records", arr}}.dump(2) << '\n';
  } else {
    sink.get() << "sweep,value," << kCsvHeader << ",group\n";
    for (const auto& r : records)
      sink.get() << (field ? "B" : "lambda") << ',' << format_double(value_of(r)) << ',' << csv_row(r) << ','
                 << r.group << '\n';
  }
  return 0;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  validate(c);
  verify::Options opt;
  opt.tolerance = c.tolerance;
  opt.basis_size = c.basis;
  opt.epsilon = c.epsilon;
  opt.seed = c.seed;
  opt.max_level = c.levels + 1;

  std::vector<verify::CheckResult> checks;
  for (const auto& name : c.checks) {
    if (name == "acceptance") {
      for (int id = 1; id <= verify::kCriterionCount; ++id) {
        auto crit = verify::run_criterion(id, opt);
        for (auto& r : crit.checks) {
          r.name = "criterion " + std::to_string(id) + ": " + r.name;
          checks.push_back(std::move(r));
        }
      }
    } else {
      auto part = verify::run_suite(name, c.model, c.params, opt);
      checks.insert(checks.end(), part.begin(), part.end());
    }
  }

  int failed = 0;
  json list = json::array();
  for (const auto& r : checks) {
    if (!r.passed) ++failed;
    list.push_back({{"name", r.name},
                    {"tolerance", r.tolerance},
                    {"observed", std::isfinite(r.observed) ? json(r.observed) : json("inf")},
                    {"passed", r.passed},
                    {"detail", r.detail}});
  }
  json report{{"model", std::string(model_id(c.model))},
              {"config", config_to_json(c)},
              {"checks", list},
              {"total", checks.size()},
              {"failed", failed},
              {"passed", failed == 0}};

  if (c.format == OutputFormat::Json && c.output.empty()) {
    out << report.dump(2) << '\n';
  } else {
    for (const auto& r : checks) {
      char nums[64];
      std::snprintf(nums, sizeof nums, "observed=%.3g tolerance=%.3g", r.observed, r.tolerance);
      out << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  " << nums;
      if (!r.detail.empty()) out << "  [" << r.detail << "]";
      out << '\n';
    }
    out << checks.size() << " checks, " << failed << " failed\n";
    for (const auto& r : checks)
      if (!r.passed) out << "failed: " << r.name << '\n';
    if (!c.output.empty()) {
      Sink sink(c.output, out);
      sink.get() << report.dump(2) << '\n';
    }
  }
  return failed == 0 ? 0 : 1;
}

int cmd_curvature(const RunConfig& c, std::ostream& out) {
  validate(c);
  if (c.x_squared.empty()) throw UsageError("curvature needs a nonempty --x-squared list");
  for (double v : c.x_squared)
    if (!(v >= 0.0)) throw UsageError("x-squared values must be >= 0");
  Sink sink(c.output, out);
  if (c.format == OutputFormat::Json) {
    json rows = json::array();
    for (double v : c.x_squared)
      rows.push_back({{"x_squared", v},
                      {"metric_factor", spectra::metric_factor(c.params, v)},
                      {"scalar_curvature", spectra::scalar_curvature(c.params, v)}});
    sink.get() << json{{"rows", rows}}.dump(2) << '\n';
  } else {
    sink.get() << "x_squared,metric_factor,scalar_curvature\n";
    for (double v : c.x_squared)
      sink.get() << format_double(v) << ',' << format_double(spectra::metric_factor(c.params, v)) << ','
                 << format_double(spectra::scalar_curvature(c.params, v)) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------- argv

namespace {

struct Flags {
  std::string config, model, format, output, sweep;
  int dim = 1, levels = 5, epsilon = 1, branch = 1, basis = 0;
  unsigned seed = 0;
  double lambda = 0, mu_x = 0, mu_y = 0, mu_z = 0, omega = 1, omega_c = 0, hbar = 1, tolerance = 0;
  std::vector<double> mu, values, x_squared;
  std::vector<std::string> checks;
  std::map<std::string, CLI::Option*> opts;

  void attach(CLI::App* app) {
    opts["config"] = app->add_option("--config", config, "JSON config file (keys are the long flag names)");
    opts["model"] = app->add_option("--model", model,
                                    "darboux | dunkl | dunkl-darboux | darboux-landau | dunkl-landau | "
                                    "dunkl-darboux-landau");
    opts["dim"] = app->add_option("--dim", dim, "dimension N (field models are 2D)");
    opts["lambda"] = app->add_option("--lambda", lambda, "curvature parameter, >= 0");
    opts["mu"] = app->add_option("--mu", mu, "reflection parameters, one per axis")->delimiter(',');
    opts["mu-x"] = app->add_option("--mu-x", mu_x, "reflection parameter on axis 1");
    opts["mu-y"] = app->add_option("--mu-y", mu_y, "reflection parameter on axis 2");
    opts["mu-z"] = app->add_option("--mu-z", mu_z, "reflection parameter on axis 3");
    opts["omega"] = app->add_option("--omega", omega, "oscillator frequency (default 1)");
    opts["omega-c"] = app->add_option("--omega-c", omega_c, "Larmor frequency eB/2c (field B gives omega_c = B/2)");
    opts["hbar"] = app->add_option("--hbar", hbar, "Planck constant (default 1)");
    opts["levels"] = app->add_option("--levels", levels, "cap on the total index: sum n_i, 2n+|m| or 2k+2m'");
    opts["epsilon"] = app->add_option("--epsilon", epsilon, "keep only the parity sector e_x e_y = +1 or -1");
    opts["branch"] = app->add_option("--branch", branch, "keep only sigma branch +1 or -1");
    opts["format"] = app->add_option("--format", format, "csv (default) or json");
    opts["output"] = app->add_option("--output,-o", output, "output file (default stdout)");
  }
  void attach_verify(CLI::App* app) {
    opts["check"] = app->add_option("--check", checks,
                                    "suite: oracle, residual, gram, limits, implicit, angular, all, acceptance")
                        ->delimiter(',');
    opts["basis"] = app->add_option("--basis", basis, "oracle basis size (0: per-check default)");
    opts["seed"] = app->add_option("--seed", seed, "offset for residual sample points");
    opts["tolerance"] = app->add_option("--tolerance", tolerance, "override every check tolerance");
  }
  void attach_sweep(CLI::App* app) {
    opts["sweep"] = app->add_option("--sweep", sweep, "lambda or field (field values are B, omega_c = B/2)");
    opts["values"] = app->add_option("--values", values, "sweep values, comma separated")->delimiter(',');
  }
  void attach_curvature(CLI::App* app) {
    opts["x-squared"] = app->add_option("--x-squared", x_squared, "|x|^2 sample list")->delimiter(',');
  }

  bool given(const std::string& key) const {
    const auto it = opts.find(key);
    return it != opts.end() && it->second->count() > 0;
  }

  RunConfig build(bool need_model = true) const {
    RunConfig c;
    json file;
    if (given("config")) {
      std::ifstream in(config);
      if (!in) throw UsageError("cannot read config file " + config);
      try {
        file = json::parse(in);
      } catch (const json::exception& e) {
        throw UsageError("config file is not valid JSON");
      }
      apply_json(c, file);
    }
    json over = json::object();
    if (given("model")) over["model"] = model;
    if (given("dim")) over["dim"] = dim;
    if (given("lambda")) over["lambda"] = lambda;
    if (given("mu")) over["mu"] = mu;
    if (given("mu-x")) over["mu-x"] = mu_x;
    if (given("mu-y")) over["mu-y"] = mu_y;
    if (given("mu-z")) over["mu-z"] = mu_z;
    if (given("omega")) over["omega"] = omega;
    if (given("omega-c")) over["omega-c"] = omega_c;
    if (given("hbar")) over["hbar"] = hbar;
    if (given("levels")) over["levels"] = levels;
    if (given("epsilon")) over["epsilon"] = epsilon;
    if (given("branch")) over["branch"] = branch;
    if (given("format")) over["format"] = format;
    if (given("output")) over["output"] = output;
    if (given("check")) over["check"] = checks;
    if (given("basis")) over["basis"] = basis;
    if (given("seed")) over["seed"] = seed;
    if (given("tolerance")) over["tolerance"] = tolerance;
    if (given("sweep")) over["sweep"] = sweep;
    if (given("values")) over["values"] = values;
    if (given("x-squared")) over["x-squared"] = x_squared;
    apply_json(c, over);
    if (need_model && !given("model") && !file.contains("model")) throw UsageError("--model is required");
    finalize(c, given("dim") || file.contains("dim"));
    return c;
  }
};

constexpr const char* kFooter =
    "Defaults: hbar = omega = 1. A field strength B maps to the Larmor frequency\n"
    "omega_c = B/2 (e = c = 1), so B = 0.1 is --omega-c 0.05.";

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deformed oscillator spectra, level tables and verification"};
  app.footer(kFooter);
  app.require_subcommand(1);
  Flags spectrum_f, figure_f, verify_f, curvature_f;
  auto* spectrum = app.add_subcommand("spectrum", "closed-form levels as CSV or JSON records");
  spectrum_f.attach(spectrum);
  auto* figure = app.add_subcommand("levels-figure", "long-format level table over a lambda or field sweep");
  figure_f.attach(figure);
  figure_f.attach_sweep(figure);
  auto* verify_cmd = app.add_subcommand("verify", "run check suites; exit 0 iff every check passes");
  verify_f.attach(verify_cmd);
  verify_f.attach_verify(verify_cmd);
  auto* curvature = app.add_subcommand("curvature", "metric factor and scalar curvature at |x|^2 samples");
  curvature_f.attach(curvature);
  curvature_f.attach_curvature(curvature);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(spectrum_f.build(), out);
    if (figure->parsed()) return cmd_levels_figure(figure_f.build(), out);
    if (verify_cmd->parsed()) return cmd_verify(verify_f.build(), out);
    if (curvature->parsed()) {
      return cmd_curvature(curvature_f.build(false), out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace ddo::cli
