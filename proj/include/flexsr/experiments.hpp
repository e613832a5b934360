#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "flexsr/session.hpp"

namespace flexsr {

// Golden file format
// ------------------
// Lines starting with `#` are comments. A step starts with a command line:
//
//   $ <command>    output must equal the following lines exactly
//   $~ <command>   each following line must match some output line
//   $! <command>   command must fail; the following line is the ErrorCode name
//
// Expected lines run until the next command line. Inside an expected line the
// token `{lo..hi}` matches any integer in [lo, hi]; every other token is literal.

struct GoldenStep {
  enum class Mode { Exact, Subset, Error };

  Mode mode = Mode::Exact;
  std::string command;
  std::vector<std::string> expected;
  int line = 0;
};

/// Throws ParseError on expected lines before the first command or unknown markers.
std::vector<GoldenStep> parse_golden(std::string_view text);

/// Token-wise comparison honouring `{lo..hi}` ranges.
bool golden_line_matches(std::string_view expected, std::string_view actual);

struct StepOutcome {
  GoldenStep step;
  std::vector<std::string> actual;
  bool passed = false;
  std::string detail;
};

struct ExperimentReport {
  std::string id;
  std::vector<StepOutcome> steps;

  bool passed() const;
  std::vector<std::string> lines() const;
};

/// Runs every step against `session` in order. Never throws for step failures.
ExperimentReport run_golden(Session& session, const std::string& id, std::string_view text);

/// "1", "2", "3" or "controller"; throws InvalidArgument otherwise.
std::string golden_file_name(const std::string& id);

/// Reads `<dir>/<golden_file_name(id)>` and runs it on a copy of `sim`.
ExperimentReport run_experiment(const Simulator& sim, const std::string& id,
                                const std::string& golden_dir);

/// Built in at configure time; the CLI lets users override it.
std::string default_golden_dir();

}  // namespace flexsr
