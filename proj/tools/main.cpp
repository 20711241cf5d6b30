// mcat: monoidal-category process toolkit.
//
// Reads a JSON process document and answers decomposability, entanglement,
// law-verification, and diagram queries against it. Exit codes: 0 for a
// positive verdict or pass, 1 for a successful computation with a negative
// verdict, 2 for usage or input errors.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mcat/errors.hpp"
#include "mcat/run.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw mcat::UsageError("cannot open document '" + path + "'");
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

std::optional<double> tolerance_from_env() {
  const char* raw = std::getenv("MCAT_TOLERANCE");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const double value = std::strtod(raw, &end);
  if (end == raw || *end != '\0')
    throw mcat::UsageError(std::string("MCAT_TOLERANCE is not a number: '") + raw + "'");
  return value;
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw mcat::UsageError("cannot open output file '" + out_path + "'");
  file << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mcat: process decomposability in monoidal categories"};
  app.require_subcommand(1);

  std::string document_path;
  std::string morphism, policy_name = "nondegenerate", mode, split, rhs, show = "morphism";
  std::string format = "text", out_path;
  std::uint64_t seed = 1;
  std::size_t max_card = 8, trials = 200;
  std::optional<std::size_t> min_size, max_size;
  std::optional<double> tolerance_flag;

  auto add_common = [&](CLI::App* cmd, bool needs_morphism) {
    cmd->add_option("document", document_path, "document file, or - for stdin")->required();
    if (needs_morphism) cmd->add_option("--morphism", morphism, "morphism name");
    cmd->add_option("--policy", policy_name, "paper-literal | nondegenerate | essential");
    cmd->add_option("--seed", seed, "sampling seed");
    cmd->add_option("--format", format, "text | json");
    cmd->add_option("--out", out_path, "write the report here instead of stdout");
    cmd->add_option("--tolerance", tolerance_flag, "override the instance tolerance");
  };

  auto* check_laws = app.add_subcommand("check-laws", "verify the categorical laws by sampling");
  add_common(check_laws, false);
  check_laws->add_option("--trials", trials, "trials per law");
  check_laws->add_option("--min-size", min_size, "minimum object size");
  check_laws->add_option("--max-size", max_size, "maximum object size");

  auto* decompose_seq = app.add_subcommand("decompose-seq", "sequential decomposability");
  add_common(decompose_seq, true);

  auto* decompose_par = app.add_subcommand("decompose-par", "parallel decomposability");
  add_common(decompose_par, true);
  decompose_par->add_option("--mode", mode, "fixed | up-to-iso | search (instance dependent)");
  decompose_par->add_option("--split", split, "named split for fixed-split queries");
  decompose_par->add_option("--max-card", max_card, "search cap for --mode search");

  auto* entangled = app.add_subcommand("entangled", "Schmidt test for a state");
  add_common(entangled, true);
  entangled->add_option("--split", split, "named split giving the codomain factors");

  auto* coupling = app.add_subcommand("coupling", "operator coupling measure");
  add_common(coupling, true);
  coupling->add_option("--split", split, "named split giving the tensor factors");

  auto* solve = app.add_subcommand("solve", "invert a linear morphism against a state");
  add_common(solve, true);
  solve->add_option("--rhs", rhs, "column morphism naming the right-hand side");

  auto* diagram = app.add_subcommand("diagram", "emit a DOT diagram");
  add_common(diagram, true);
  diagram->add_option("--show", show, "morphism | seq | par");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    mcat::doc::Command command;
    command.name = app.get_subcommands().front()->get_name();
    command.morphism = morphism;
    if (policy_name == "paper-literal")
      command.policy = mcat::Policy::PaperLiteral;
    else if (policy_name == "nondegenerate")
      command.policy = mcat::Policy::Nondegenerate;
    else if (policy_name == "essential")
      command.policy = mcat::Policy::Essential;
    else
      throw mcat::UsageError("unknown --policy '" + policy_name + "'");
    command.mode = mode;
    command.split = split;
    command.rhs = rhs;
    command.show = show;
    command.seed = seed;
    command.max_card = max_card;
    command.trials = trials;
    command.min_size = min_size;
    command.max_size = max_size;
    if (format != "text" && format != "json")
      throw mcat::UsageError("unknown --format '" + format + "'");
    command.format = format;

    // Flag beats the environment variable; either beats the document.
    command.tolerance_override = tolerance_flag ? tolerance_flag : tolerance_from_env();

    const mcat::doc::Document document = mcat::doc::parse_document(read_input(document_path));
    const mcat::doc::Report report = mcat::doc::run(command, document);

    std::string text;
    if (command.name == "diagram")
      text = report.body.at("dot").get<std::string>();
    else
      text = format == "json" ? report.to_json_text() : report.to_text();
    write_output(out_path, text);

    const auto elapsed =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - started);
    std::cerr << "mcat: " << command.name << " finished in " << elapsed.count() / 1000.0
              << " ms\n";
    return report.exit_code;
  } catch (const mcat::Error& e) {
    std::cerr << "mcat: error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "mcat: internal error: " << e.what() << "\n";
    return 2;
  }
}
