#include "koszulcy/cli/commands.hpp"
#include "koszulcy/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw koszulcy::ParseError("cannot read " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::map<std::string, std::string> kSummaries = {
    {"dual", "quadratic dual A^! and its Hilbert dims"},
    {"hilbert", "graded dims of A"},
    {"koszul", "numerical Koszulity certificate up to --max-degree"},
    {"regular", "Frobenius test of A^!, global dimension"},
    {"nakayama", "Nakayama automorphism of A (and of A^!)"},
    {"skew", "skew extension A[z;sigma] and its dims"},
    {"superpotential", "twisted superpotential presenting A"},
    {"symmetrize", "cyclic symmetrization of that superpotential"},
    {"derivquot", "derivation quotients A(w) and A(w-hat)"},
    {"extiso", "Ext algebra of A[z;sigma] against the trivial extension"},
    {"cy", "Calabi-Yau verdict for A[z;sigma]"},
    {"pbw", "PBW deformation: curved dga, lambda, zeta, CY verdict"},
    {"thm5", "three CY conditions for deformations of a dimension 2 base"},
};

}  // namespace

int main(int argc, char** argv) {
  using namespace koszulcy::cli;
  CLI::App app{"Quadratic algebras, Koszul duals and Calabi-Yau verdicts"};
  app.require_subcommand(1, 1);

  std::string input;
  std::string output;
  std::string sigma = "nakayama";
  RunOptions options;
  bool no_fail_exit = false;
  bool no_timing = false;

  for (const auto& name : command_names()) {
    auto* sub = app.add_subcommand(name, kSummaries.at(name));
    sub->add_option("input", input, "algebra description (JSON), or - for stdin")->required();
    sub->add_option("--max-degree", options.max_degree, "bound for certificates")
        ->capture_default_str();
    sub->add_option("--seed", options.seed, "seed for randomized checks")->capture_default_str();
    sub->add_option("--sigma", sigma, "twist: id, nakayama or file (the document's sigma)")
        ->check(CLI::IsMember({"id", "nakayama", "file"}))
        ->capture_default_str();
    sub->add_option("--word-cap", options.word_cap, "resource guard on tensor words")
        ->capture_default_str();
    sub->add_flag("--no-fail-exit", no_fail_exit, "exit 0 even when a verdict fails");
    sub->add_flag("--no-timing", no_timing, "omit the timing block");
    sub->add_option("-o,--output", output, "write the report here instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  options.sigma = parse_sigma_choice(sigma);
  options.fail_on_verdict = !no_fail_exit;

  std::string document;
  try {
    document = slurp(input);
  } catch (const koszulcy::Error& e) {
    std::cerr << "koszulcy: " << e.what() << "\n";
    return kUsage;
  }

  const RunResult result = run(command, document, options);
  const std::string text =
      no_timing ? result.report.verdict_body() + "\n" : result.report.render();
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    out << text;
  }
  if (result.report.body.contains("error")) {
    std::cerr << "koszulcy: " << result.report.body["error"]["message"].get<std::string>() << "\n";
  }
  return result.exit_code;
}
