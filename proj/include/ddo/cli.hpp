#pragma once
// Command-line front end: run configuration, record serialization and the
// four subcommands. `run` is the whole program minus main().

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ddo/model.hpp"

namespace ddo::cli {

enum class OutputFormat { Csv, Json };

struct RunConfig {
  ModelKind model = ModelKind::Darboux;
  ModelParams params;
  int levels = 5;                 // cap on the total index (sum n_i, 2n+|m|, 2k+2m')
  std::optional<int> epsilon;     // sector filter, 2D reflection models only
  std::optional<int> branch;      // branch filter, 2D Dunkl sector models only
  OutputFormat format = OutputFormat::Csv;
  std::string output;             // empty: stdout
  std::vector<std::string> checks{"all"};
  int basis = 0;                  // 0: per-check default
  unsigned seed = 0;
  std::optional<double> tolerance;
  std::string sweep = "lambda";   // "lambda" or "field" (B, omega_c = B/2)
  std::vector<double> values;     // sweep list
  std::vector<double> x_squared;  // curvature samples
};

// Thrown for invalid flag combinations; the message is a single line.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Checks the model/parameter/filter combination. Throws UsageError.
void validate(const RunConfig& config);

// Config files use the long flag names as keys ("mu-x" or "mu_x" both work).
void apply_json(RunConfig& config, const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& config);

// ---- records
inline constexpr const char* kCsvHeader =
    "model,N,lambda,mu_x,mu_y,omega,omega_c,hbar,sector,branch,n,m,mprime,energy,Omega";

std::string format_double(double v);  // %.17g
std::string csv_row(const LevelRecord& r);
void write_csv(std::ostream& out, const std::vector<LevelRecord>& records);

nlohmann::json record_to_json(const LevelRecord& r);
LevelRecord record_from_json(const nlohmann::json& j);
nlohmann::json records_to_json(const std::vector<LevelRecord>& records);
std::vector<LevelRecord> records_from_json(const nlohmann::json& j);

// ---- commands (return the process exit code)
std::vector<LevelRecord> spectrum_records(const RunConfig& config);
int cmd_spectrum(const RunConfig& config, std::ostream& out);
int cmd_levels_figure(const RunConfig& config, std::ostream& out);
// Human-readable lines go to `out`; the JSON report goes to config.output when
// set, or replaces the text when format is JSON.
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_curvature(const RunConfig& config, std::ostream& out);

// Parses argv with CLI11 and dispatches. Exit codes: 0 success, 1 a check
// failed, 2 usage or domain error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ddo::cli
