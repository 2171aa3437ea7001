#include "braidlink/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "braidlink/errors.hpp"
#include "braidlink/invariants.hpp"
#include "braidlink/io.hpp"
#include "braidlink/verify.hpp"
#include "braidlink/words.hpp"

namespace braidlink {
namespace {

struct InputOptions {
  std::string format = "json";
  std::optional<std::string> expr;
  std::string input_file;
  int samples = 512;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--format", in.format, "Input format")->check(CLI::IsMember({"loop", "word", "artin", "json"}));
  cmd->add_option("-e,--expr", in.expr, "Input text (word or JSON document)");
  cmd->add_option("--input", in.input_file, "Read input from FILE instead of stdin")->check(CLI::ExistingFile);
  cmd->add_option("--samples", in.samples, "Samples per letter or generator")->check(CLI::Range(32, 1 << 20));
}

std::string read_text(const InputOptions& opt, std::istream& in) {
  if (opt.expr) return *opt.expr;
  if (!opt.input_file.empty()) {
    std::ifstream file(opt.input_file);
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

SphericalBraid load_braid(const InputOptions& opt, std::istream& in) {
  const std::string text = read_text(opt, in);
  if (opt.format == "loop" || opt.format == "word") return realize_loop(parse_loop(text), opt.samples);
  if (opt.format == "artin") return realize_artin(parse_artin(text), opt.samples);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
  return realize(parse_document(j), opt.samples);
}

int report_error(std::ostream& err, const char* kind, const std::string& message, int code) {
  err << Json{{"error", kind}, {"message", message}}.dump() << '\n';
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linking numbers and the Hopf invariant of ordered spherical 4-braids", "braidlink"};
  app.require_subcommand(1);

  InputOptions input;
  InvariantSettings settings;
  auto* invariants = app.add_subcommand("invariants", "Compute Lk, LK, the Brunn gate and H");
  add_input_options(invariants, input);
  invariants->add_option("--tol", settings.quadrature.tol, "Quadrature convergence tolerance")
      ->check(CLI::PositiveNumber);
  invariants->add_option("--start-lambda", settings.start_lambda, "Initial value of both lambda profiles");

  auto* normalize_cmd = app.add_subcommand("normalize", "Emit the normalized strand-4 curve");
  add_input_options(normalize_cmd, input);

  auto* realize_cmd = app.add_subcommand("realize", "Emit the sampled braid document");
  add_input_options(realize_cmd, input);

  VerifyOptions verify;
  long long seed = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run the property sweeps");
  verify_cmd->add_option("--count", verify.count, "Cases per suite")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed, "Random seed")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--tol", verify.tol, "Quadrature convergence tolerance")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--samples", verify.samples, "Samples per letter or generator")->check(CLI::Range(32, 1 << 20));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return report_error(err, "usage", e.what(), kExitValidation);
  }

  try {
    if (invariants->parsed()) {
      out << report_to_json(hopf(load_braid(input, in), settings)).dump() << '\n';
    } else if (normalize_cmd->parsed()) {
      out << path_to_json(normalize(load_braid(input, in))).dump() << '\n';
    } else if (realize_cmd->parsed()) {
      out << braid_to_json(load_braid(input, in)).dump() << '\n';
    } else if (verify_cmd->parsed()) {
      verify.seed = static_cast<std::uint64_t>(seed);
      const auto suites = run_verify(verify);
      Json summary{{"count", verify.count}, {"seed", seed}, {"tol", verify.tol}, {"suites", Json::array()}};
      const SuiteResult* failed = nullptr;
      for (const auto& s : suites) {
        summary["suites"].push_back(Json{{"name", s.name},
                                         {"passed", s.passed},
                                         {"total", s.total},
                                         {"max_residual", round_significant(s.max_residual)}});
        if (!s.ok() && !failed) failed = &s;
      }
      summary["ok"] = failed == nullptr;
      if (failed && failed->counterexample) summary["counterexample"] = *failed->counterexample;
      out << summary.dump() << '\n';
      return failed ? kExitFailure : kExitOk;
    }
  } catch (const ValidationError& e) {
    return report_error(err, "validation", e.what(), kExitValidation);
  } catch (const GateError& e) {
    return report_error(err, "validation", e.what(), kExitValidation);
  } catch (const ConvergenceError& e) {
    err << Json{{"error", "convergence"}, {"message", e.what()}, {"values", {e.first(), e.second()}}}.dump()
        << '\n';
    return kExitConvergence;
  } catch (const std::invalid_argument& e) {
    return report_error(err, "usage", e.what(), kExitValidation);
  }
  return kExitOk;
}

}  // namespace braidlink
