#include "flexsr/experiments.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#ifndef FLEXSR_GOLDEN_DIR
#define FLEXSR_GOLDEN_DIR "goldens"
#endif

namespace flexsr {

namespace {

bool parse_int(std::string_view text, long long& out) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return !text.empty() && ec == std::errc{} && ptr == text.data() + text.size();
}

bool token_matches(std::string_view expected, std::string_view actual) {
  if (expected.size() > 4 && expected.front() == '{' && expected.back() == '}') {
    auto body = expected.substr(1, expected.size() - 2);
    auto dots = body.find("..");
    long long lo = 0, hi = 0, value = 0;
    if (dots != std::string_view::npos && parse_int(body.substr(0, dots), lo) &&
        parse_int(body.substr(dots + 2), hi)) {
      return parse_int(actual, value) && value >= lo && value <= hi;
    }
  }
  return expected == actual;
}

}  // namespace

std::vector<GoldenStep> parse_golden(std::string_view text) {
  std::vector<GoldenStep> steps;
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '$') {
      GoldenStep step;
      step.line = line_no;
      std::size_t skip = 1;
      if (line.size() > 1 && line[1] == '~') {
        step.mode = GoldenStep::Mode::Subset;
        skip = 2;
      } else if (line.size() > 1 && line[1] == '!') {
        step.mode = GoldenStep::Mode::Error;
        skip = 2;
      }
      if (line.size() <= skip || line[skip] != ' ') {
        fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad command marker");
      }
      step.command = line.substr(skip + 1);
      steps.push_back(std::move(step));
      continue;
    }
    if (steps.empty()) {
      fail(ErrorCode::ParseError,
           "line " + std::to_string(line_no) + ": expected output before any command");
    }
    steps.back().expected.push_back(line);
  }
  return steps;
}

bool golden_line_matches(std::string_view expected, std::string_view actual) {
  auto e = split_words(expected);
  auto a = split_words(actual);
  if (e.size() != a.size()) return false;
  // Leading indentation is significant in `show` output.
  auto indent = [](std::string_view s) { return s.find_first_not_of(' '); };
  if (indent(expected) != indent(actual)) return false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!token_matches(e[i], a[i])) return false;
  }
  return true;
}

bool ExperimentReport::passed() const {
  for (const auto& s : steps) {
    if (!s.passed) return false;
  }
  return !steps.empty();
}

std::vector<std::string> ExperimentReport::lines() const {
  std::vector<std::string> out;
  for (const auto& s : steps) {
    out.push_back(std::string(s.passed ? "ok   " : "FAIL ") + s.step.command);
    if (!s.passed) {
      out.push_back("  " + s.detail);
      for (const auto& l : s.step.expected) out.push_back("  expected: " + l);
      for (const auto& l : s.actual) out.push_back("  actual:   " + l);
    }
  }
  out.push_back("experiment " + id + ": " + (passed() ? "PASS" : "FAIL"));
  return out;
}

ExperimentReport run_golden(Session& session, const std::string& id, std::string_view text) {
  ExperimentReport report{id, {}};
  for (auto& step : parse_golden(text)) {
    StepOutcome outcome{step, {}, false, {}};
    try {
      outcome.actual = session.execute(split_words(step.command));
      switch (step.mode) {
        case GoldenStep::Mode::Error:
          outcome.detail = "expected an error, command succeeded";
          break;
        case GoldenStep::Mode::Exact:
          outcome.passed = outcome.actual.size() == step.expected.size();
          for (std::size_t i = 0; outcome.passed && i < step.expected.size(); ++i) {
            outcome.passed = golden_line_matches(step.expected[i], outcome.actual[i]);
          }
          if (!outcome.passed) outcome.detail = "output differs";
          break;
        case GoldenStep::Mode::Subset:
          outcome.passed = true;
          for (const auto& want : step.expected) {
            bool found = false;
            for (const auto& got : outcome.actual) found = found || golden_line_matches(want, got);
            if (!found) {
              outcome.passed = false;
              outcome.detail = "missing line: " + want;
              break;
            }
          }
          break;
      }
    } catch (const Error& e) {
      std::string code(to_string(e.code()));
      outcome.actual = {code + ": " + e.what()};
      if (step.mode == GoldenStep::Mode::Error) {
        outcome.passed = step.expected.size() == 1 && step.expected[0] == code;
        if (!outcome.passed) outcome.detail = "wrong error code";
      } else {
        outcome.detail = "command failed";
      }
    }
    report.steps.push_back(std::move(outcome));
  }
  return report;
}

std::string golden_file_name(const std::string& id) {
  if (id == "1" || id == "2" || id == "3") return "experiment" + id + ".golden";
  if (id == "controller") return "controller.golden";
  fail(ErrorCode::InvalidArgument, "unknown experiment '" + id + "' (1, 2, 3, controller)");
}

ExperimentReport run_experiment(const Simulator& sim, const std::string& id,
                                const std::string& golden_dir) {
  std::string path = golden_dir + "/" + golden_file_name(id);
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot read golden file " + path);
  std::stringstream text;
  text << in.rdbuf();
  Session session(sim);
  return run_golden(session, id, text.str());
}

std::string default_golden_dir() { return FLEXSR_GOLDEN_DIR; }

}  // namespace flexsr
