// Command-line front end: configuration record, argument parsing and command
// dispatch.  Kept apart from main() so tests can drive it directly.

#ifndef ERATE_CLI_HPP
#define ERATE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace erate::cli {

enum class Command { Riemann, Rate, Subsolution, Counterexample, Sweep, Profile };
enum class Format { Json, Csv, Text };

struct RunConfig {
  Command command = Command::Riemann;
  bool preset_paper = false;
  std::string data_path;
  std::string partition_path;
  std::string profile_path;
  std::string out_path;  // empty: stdout

  double c_v = 1.5;
  double rho1 = 14.0;
  double L = 1.0e4;
  double margin = 0.05;
  double epsilon = 0.0;  // 0: pick delta/2
  std::vector<double> cv_grid = {1.0, 1.25, 1.5};

  Format format = Format::Json;
};

// Runs one command; returns the process exit code (0 ok, 1 input error,
// 2 solver error) and writes the report to `out`, errors to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv into a RunConfig and runs it; the main() body.
int main_entry(int argc, char** argv);

} // namespace erate::cli

#endif
