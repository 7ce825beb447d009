// pdnf: command-line front end.
//
//   pdnf <resonance|normalize|classify|integrals|embed|verify> --input FILE [options]
//
// Exit status: 0 success, 2 parse/usage error, 3 hypotheses not met,
// 4 internal invariant violated (including a failed `verify`).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "pdnf/report.hpp"

namespace {

constexpr int kParse = 2;
constexpr int kHypothesis = 3;
constexpr int kInvariant = 4;

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw pdnf::ParseError("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poincare-Dulac normal forms, integrability and first integrals"};
  app.require_subcommand(1, 1);

  std::string input, output, format = "json";
  pdnf::io::RunOptions opts;
  int degree = 0, order = 0;
  long long seed = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", input, "system file (JSON), or a report for verify")->required();
    sub->add_option("--output", output, "write the report here instead of stdout");
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--degree", degree, "lattice degree bound D")->check(CLI::Range(2, 255));
    sub->add_option("--order", order, "normalization order N")->check(CLI::Range(2, 254));
    sub->add_option("--seed", seed, "seed for independence sampling");
    sub->add_option("--trials", opts.trials, "independence sampling points")->check(CLI::Range(1, 1000));
    sub->add_option("--lie-order", opts.lie_order, "Lie series order for the time-one map")->check(CLI::Range(0, 64));
  };
  for (const char* name : {"resonance", "normalize", "classify", "integrals", "embed", "verify"}) {
    add_common(app.add_subcommand(name));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParse;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  if (degree) opts.degree_D = degree;
  if (order) opts.order_N = order;
  opts.seed = static_cast<std::uint64_t>(seed);

  using namespace pdnf;
  try {
    nlohmann::json report;
    int status = 0;
    if (command == "verify") {
      const auto outcome = io::verify_report(io::parse_file(input));
      report = outcome.report;
      if (!outcome.ok) status = kInvariant;
    } else {
      const auto sys = io::load_system(input);
      if (command == "resonance") report = io::run_resonance(sys, opts);
      if (command == "normalize") report = io::run_normalize(sys, opts);
      if (command == "classify") report = io::run_classify(sys, opts);
      if (command == "integrals") report = io::run_integrals(sys, opts);
      if (command == "embed") report = io::run_embed(sys, opts);
    }
    emit(format == "text" ? io::render_text(report) : io::dump(report), output);
    if (status == kInvariant) std::cerr << "pdnf: verification failed\n";
    return status;
  } catch (const ParseError& e) {
    std::cerr << "pdnf: parse error: " << e.what() << "\n";
    return kParse;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "pdnf: parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InvariantError& e) {
    std::cerr << "pdnf: internal invariant violated: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::invalid_argument& e) {
    // HypothesisError and other precondition failures on the input.
    std::cerr << "pdnf: hypotheses not met: " << e.what() << "\n";
    return kHypothesis;
  } catch (const std::exception& e) {
    std::cerr << "pdnf: internal error: " << e.what() << "\n";
    return kInvariant;
  }
}
