// Command-line front end: loads a scenario and runs commands against it.
//
//   flexsr [-s paper|<file>] [--goldens <dir>] <command> [; <command> ...]
//
// Without a command, one command per line is read from standard input.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "flexsr/api.hpp"
#include "flexsr/experiments.hpp"
#include "flexsr/scenario.hpp"
#include "flexsr/session.hpp"

namespace {

using flexsr::Error;
using flexsr::ErrorCode;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) flexsr::fail(ErrorCode::InvalidArgument, "cannot read " + path);
  std::stringstream text;
  text << in.rdbuf();
  return text.str();
}

flexsr::Simulator load(const std::string& source) {
  if (source == "paper") return flexsr::load_scenario(flexsr::paper_scenario_text());
  return flexsr::load_scenario(read_file(source));
}

struct Cli {
  flexsr::Session session;
  std::string golden_dir;

  /// Returns false when the command ran but reported failure.
  bool run(const std::vector<std::string>& words) {
    const std::string& cmd = words[0];
    if (cmd == "load") {
      if (words.size() != 2) flexsr::fail(ErrorCode::InvalidArgument, "usage: load <file|paper>");
      session = flexsr::Session(load(words[1]));
      std::cout << "loaded " << words[1] << "\n";
      return true;
    }
    if (cmd == "run-experiment") {
      if (words.size() != 2) {
        flexsr::fail(ErrorCode::InvalidArgument, "usage: run-experiment <1|2|3|controller|all>");
      }
      std::vector<std::string> ids{words[1]};
      if (words[1] == "all") ids = {"1", "2", "3", "controller"};
      bool ok = true;
      for (const auto& id : ids) {
        auto report = flexsr::run_experiment(session.simulator(), id, golden_dir);
        for (const auto& line : report.lines()) std::cout << line << "\n";
        ok = ok && report.passed();
      }
      return ok;
    }
    if (cmd == "serve") return serve(words);
    for (const auto& line : session.execute(words)) std::cout << line << "\n";
    return true;
  }

  bool serve(const std::vector<std::string>& words) {
    CLI::App app{"serve the controller API"};
    int port = 8080;
    std::string host = "127.0.0.1";
    std::string ui;
    app.add_option("--port", port, "TCP port")->check(CLI::Range(1, 65535));
    app.add_option("--host", host, "bind address");
    app.add_option("--ui", ui, "directory of static UI assets")->check(CLI::ExistingDirectory);
    std::vector<std::string> args(words.rbegin(), words.rend() - 1);
    try {
      app.parse(args);
    } catch (const CLI::ParseError& e) {
      flexsr::fail(ErrorCode::InvalidArgument, e.what());
    }
    flexsr::PathController controller(session.simulator());
    std::cout << "serving http://" << host << ":" << port << "/api" << std::endl;
    if (!flexsr::serve(controller, host, port, ui)) {
      flexsr::fail(ErrorCode::InvalidArgument, "cannot listen on " + host + ":" + std::to_string(port));
    }
    return true;
  }
};

/// Splits on standalone ";" tokens.
std::vector<std::vector<std::string>> split_commands(const std::vector<std::string>& words) {
  std::vector<std::vector<std::string>> out(1);
  for (const auto& w : words) {
    if (w == ";") {
      out.emplace_back();
    } else {
      out.back().push_back(w);
    }
  }
  std::erase_if(out, [](const auto& c) { return c.empty(); });
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SR-MPLS FlexAlgo simulator"};
  std::string scenario = "paper";
  std::string golden_dir = flexsr::default_golden_dir();
  app.add_option("-s,--scenario", scenario, "'paper' or a scenario file")->capture_default_str();
  app.add_option("--goldens", golden_dir, "directory of experiment golden files")
      ->capture_default_str();
  app.prefix_command();
  app.footer(
      "commands:\n"
      "  load <file|paper>\n"
      "  show topology | fads | spf <algo> <node> | fib <node> | lsdb <node>\n"
      "  traceroute <vrf> <dst> [from <node>]\n"
      "  paths <vrf> <dst> [from <node>]\n"
      "  flows <vrf> <src_prefix> <dst_prefix> <n> [from <node>]\n"
      "  set-delay <from>-><to> <us>\n"
      "  request-path <igp|te-metric|delay> <exclude-any|include-any|include-all> <colors> <color>\n"
      "  export\n"
      "  run-experiment <1|2|3|controller|all>\n"
      "  serve [--port <p>] [--host <addr>] [--ui <dir>]\n"
      "separate several commands with ';'");
  CLI11_PARSE(app, argc, argv);

  std::vector<std::vector<std::string>> commands = split_commands(app.remaining());
  bool from_stdin = commands.empty();

  try {
    Cli cli{flexsr::Session(load(scenario)), golden_dir};
    bool ok = true;
    auto run_one = [&](const std::vector<std::string>& words) {
      try {
        ok = cli.run(words) && ok;
      } catch (const Error& e) {
        std::cerr << "error: " << flexsr::to_string(e.code()) << ": " << e.what() << "\n";
        ok = false;
        return false;
      }
      return true;
    };
    if (from_stdin) {
      for (std::string line; std::getline(std::cin, line);) {
        auto words = flexsr::split_words(line);
        if (words.empty() || words[0].starts_with("#")) continue;
        run_one(words);
      }
    } else {
      for (const auto& words : commands) {
        if (!run_one(words)) break;
      }
    }
    return ok ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << flexsr::to_string(e.code()) << ": " << e.what() << "\n";
    return 2;
  }
}
