#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "prabhakar/numerics.hpp"

namespace prabhakar::cli {

enum class Command { EvalMl, EvalPrabhakar, EvalStable, EvalMixture, Density, Moments, Sample, Verify, CmCheck };
enum class Format { Csv, Json };

Command parse_command(const std::string& name);
const char* command_name(Command c);

struct RunConfig {
  Command command = Command::Verify;
  std::vector<double> alpha{0.5};
  std::vector<double> beta{1.0};
  std::vector<double> gamma{1.0};
  std::vector<double> theta{0.0};
  std::vector<double> lambda{1.0};
  std::vector<double> x{1.0};
  std::vector<double> t{1.0};
  std::vector<int> n{0, 1, 2, 3};
  std::vector<std::string> routes{"series", "mixture", "inversion"};
  QuadSpec spec;
  std::uint64_t seed = 0;
  std::size_t count = 1000;
  int max_order = 5;
  std::string function = "prabhakar";
  std::string suite = "all";
  Format format = Format::Csv;
  /// "-" for stdout; empty means $PRABHAKAR_OUTPUT_DIR/<command>.<ext> when
  /// that variable is set, stdout otherwise.
  std::string output;
  unsigned threads = 0;
};

/// "v", "a,b,c" or "start:stop:count" (inclusive, linear).
std::vector<double> parse_sweep(const std::string& text);
/// "a..b" (inclusive) or "a,b,c".
std::vector<int> parse_int_list(const std::string& text);

using Cell = std::variant<std::monostate, double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// CSV with a header row; doubles with 17 significant digits.
void write_csv(const Table& table, std::ostream& out);
/// Array of objects keyed by column; non-finite doubles become null.
void write_json(const Table& table, std::ostream& out);

struct RunOutcome {
  Table table;
  /// 0 all checks passed, 1 a check failed, 2 parameter error.
  int exit_code = 0;
  std::string message;
};

/// Evaluate a configuration into a table without touching any stream.
RunOutcome evaluate(const RunConfig& config);

/// Evaluate and write the table to `out` (or to the configured file).
/// Diagnostics go to `err`. Returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parse argv and run. Usage errors return 2.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace prabhakar::cli
