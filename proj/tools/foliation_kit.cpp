// foliation-kit: runs .fol scripts against the folkit library and prints
// text or JSON reports.  Exit codes: 0 success, 1 usage or syntax error,
// 2 violated precondition, 3 failed certificate.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "folkit/errors.hpp"
#include "folkit/interpreter.hpp"
#include "folkit/script.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    std::exit(1);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_one(const std::string& path, const folkit::RunOptions& opts, bool json) {
  try {
    folkit::Script script = folkit::parse_script(read_file(path));
    folkit::RunOutcome outcome = folkit::run_script(script, opts);
    std::cout << (json ? outcome.json : outcome.text);
    return outcome.exit_code;
  } catch (const folkit::Error& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return static_cast<int>(e.error_class());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for polynomial vector fields and pencils of integrable forms"};
  app.require_subcommand(1);

  folkit::RunOptions opts;
  bool json = false;

  std::string script_path;
  CLI::App* run = app.add_subcommand("run", "execute a .fol script");
  run->add_option("script", script_path, "script file")->required();
  run->add_flag("--json", json, "emit the JSON report instead of text");
  run->add_option("--order", opts.order, "truncation order for series comparisons");
  run->add_option("--bound", opts.bound, "resonance search bound");
  run->add_option("--samples", opts.samples, "sample count echoed into reports");
  run->add_option("--seed", opts.seed, "seed echoed into reports");

  std::string corpus_dir = "corpus";
  CLI::App* corpus = app.add_subcommand("corpus", "run the shipped regression corpus");
  corpus->add_option("--dir", corpus_dir, "directory of .fol scripts");
  corpus->add_flag("--json", json, "emit JSON reports instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (run->parsed()) return run_one(script_path, opts, json);

  namespace fs = std::filesystem;
  std::vector<fs::path> scripts;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(corpus_dir, ec))
    if (entry.path().extension() == ".fol") scripts.push_back(entry.path());
  if (ec) {
    std::cerr << "cannot read corpus directory " << corpus_dir << "\n";
    return 1;
  }
  if (scripts.empty()) {
    std::cerr << "no .fol scripts in " << corpus_dir << "\n";
    return 1;
  }
  std::sort(scripts.begin(), scripts.end());

  int worst = 0;
  for (const fs::path& path : scripts) {
    std::cout << "=== " << path.filename().string() << " ===\n";
    worst = std::max(worst, run_one(path.string(), opts, json));
  }
  return worst;
}
