#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "coxeter/cli.hpp"

namespace {

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace coxeter::cli;

  CLI::App app{"Exact analysis of Coxeter systems through the Tits form"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string input_path;
  std::string basis_path;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input) sub->add_option("input", input_path, "system file")->required();
    sub->add_flag("--json", cfg.json, "machine-readable output");
    sub->add_option("--precision", cfg.precision, "decimal places for rendered values")->default_val(12);
  };

  auto* classify = app.add_subcommand("classify", "Tits form, signature and classification");
  add_common(classify, true);

  auto* repr = app.add_subcommand("repr", "matrices of the geometric representation");
  add_common(repr, true);
  repr->add_option("--basis", basis_path, "integer base-change matrix; its columns are the new basis");

  auto* enumerate = app.add_subcommand("enumerate", "breadth-first enumeration of group elements");
  add_common(enumerate, true);
  enumerate->add_option("--max-length", cfg.max_length, "maximum word length")->default_val(10);
  enumerate->add_option("--cap", cfg.cap, "maximum number of elements")->default_val(coxeter::kDefaultElementCap);
  enumerate->add_option("--workers", cfg.workers, "worker threads per breadth-first level")->default_val(1);

  auto* chamber = app.add_subcommand("chamber", "chamber point, samples and signature consequences");
  add_common(chamber, true);
  chamber->add_option("--seed", cfg.seed, "sampling seed")->default_val(0);
  chamber->add_option("--samples", cfg.samples, "number of sampled chamber points")->default_val(32);

  auto* verify = app.add_subcommand("verify-paper", "reproduce the worked computations");
  add_common(verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  cfg.command = *parse_command(name);

  std::string input;
  if (needs_input(cfg.command) && !read_file(input_path, input)) {
    std::cerr << "error: cannot read " << input_path << "\n";
    return kExitUsage;
  }
  if (!basis_path.empty()) {
    std::string text;
    if (!read_file(basis_path, text)) {
      std::cerr << "error: cannot read " << basis_path << "\n";
      return kExitUsage;
    }
    try {
      cfg.basis = parse_int_matrix(text);
    } catch (const coxeter::ParseError& e) {
      std::cerr << "parse error in " << basis_path << ": " << e.what() << "\n";
      return kExitUsage;
    }
  }
  return run(cfg, input, std::cout, std::cerr);
}
