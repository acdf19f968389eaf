#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fbmcusum/cusum.hpp"
#include "fbmcusum/types.hpp"

namespace fbmcusum {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes of the command line tool.
enum ExitCode : int { kExitOk = 0, kExitDegenerate = 1, kExitUsage = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file; `line` is 1-based.
class SeriesParseError : public std::runtime_error {
 public:
  SeriesParseError(const std::string& path, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class DataKind { Levels, Increments };

/// Parses a series: one number per row, an optional header row, and when a row
/// has two comma-separated fields the second is the value (the first is a
/// label and ignored). Levels give n = rows - 1; increments are cumulated
/// from Z_0 = 0 and give n = rows.
SamplePath parse_series(std::istream& in, DataKind kind, const std::string& name = "<stream>");
SamplePath read_series(const std::string& path, DataKind kind);

/// "t,level" rows with shortest round-trip formatting.
void write_path_csv(std::ostream& out, const SamplePath& path);

enum class Command { Simulate, Test, Breakpoint, Blocks, McSize, McPower, KsTable };
enum class OrderChoice { First, Second, Auto };
enum class OutputFormat { Json, Csv };

std::string to_string(Command command);

struct RunConfig {
  Command command = Command::KsTable;
  std::optional<std::string> input_path;
  DataKind data_kind = DataKind::Levels;
  double alpha = 0.05;
  OrderChoice order = OrderChoice::Auto;
  LrvConfig lrv;
  std::uint64_t seed = 1;
  OutputFormat format = OutputFormat::Json;
  std::optional<std::string> out_path;

  double hurst = 0.2;
  double sigma = 2.0;
  std::optional<double> hurst2;
  std::optional<double> sigma2;
  double theta = 0.5;
  Glue glue = Glue::IndependentPieces;
  std::size_t n = 100;
  std::size_t reps = 2000;
  std::size_t block_len = 0;
  double delta = 0.3;
  unsigned threads = 1;

  /// Throws UsageError when required inputs for the command are missing.
  void validate() const;
  nlohmann::json to_json() const;
};

/// Runs one command and returns the rendered report (JSON or CSV text).
std::string execute(const RunConfig& config);

/// Full command line entry point: parses `args` (without the program name),
/// writes the report to `out` or the --out file, messages to `err`, and
/// returns an ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::json to_json(const CusumResult& result, bool with_trace = false);

}  // namespace fbmcusum
