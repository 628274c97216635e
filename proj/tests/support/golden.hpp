#pragma once

// Golden-file cases for the command line: each manifest line is
//   <name> <subcommand> [@fixture] [flags...]
// and the expected stdout lives in golden/<name>.out.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace testing_support {

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
};

struct GoldenRun {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<GoldenCase> load_manifest(const std::string& golden_dir, const std::string& fixture_dir) {
  std::vector<GoldenCase> cases;
  std::istringstream lines(read_file(golden_dir + "/manifest.txt"));
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream words(line);
    GoldenCase c;
    if (!(words >> c.name)) continue;
    std::string w;
    while (words >> w) c.args.push_back(w.front() == '@' ? fixture_dir + "/" + w.substr(1) : w);
    cases.push_back(std::move(c));
  }
  return cases;
}

inline GoldenRun run_cli(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  GoldenRun r;
  r.exit_code = essentia::cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace testing_support
