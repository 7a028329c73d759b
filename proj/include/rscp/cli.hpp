#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rscp/states.hpp"

namespace rscp::cli {

enum ExitCode : int {
  kOk = 0,
  kValidation = 2,
  kVerification = 3,
  kIo = 4,
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "a:b:step" (inclusive of b within half a step) or a comma list "50,70".
std::vector<double> parse_levels(const std::string& text);

/// One unit of work in a sweep job.
struct RunSpec {
  std::string name;
  states::StateLabels labels;
  states::PotentialParams params;
  int n_points = 151;
  std::optional<double> extent;
  double coverage = 0.999;
  std::vector<std::string> outputs{"isosurface"};  // grid | isosurface | slice | verify
  std::vector<double> levels{50};                  // isosurface levels
  std::vector<double> slice_levels{10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
  bool cutaway = false;
  bool relative_grid = false;
};

struct JobSpec {
  std::filesystem::path output_dir = "rscp_out";
  unsigned workers = 1;
  std::vector<RunSpec> runs;
  bool statistics = false;
  std::vector<double> statistics_levels{10, 30, 50, 70, 90};
  bool statistics_grids = false;
};

/// Parses a JSON job description (see README). Throws rscp::Error(domain)
/// on malformed input.
JobSpec parse_job(const std::string& json_text);

/// Default artifact stem: "n2_l1_m0_Z1_b0.5_c0.5".
std::string default_run_name(const states::StateLabels& labels, const states::PotentialParams& params);

}  // namespace rscp::cli
