// Command-line front end: classify pairs/triples of symplectic forms,
// reproduce the built-in example catalog, and run torus Moser flows.

#include <CLI11.hpp>

#include "recop/driver.hpp"

#include <iostream>
#include <optional>
#include <string>

namespace {

struct GlobalOptions {
  std::string mode;  // "", "exact" or "float"
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
  std::optional<std::size_t> steps;
  std::optional<std::size_t> samples;
};

int emit(const recop::Report& report) {
  std::cout << report.text;
  return report.exit_code;
}

void require_mode(const GlobalOptions& opts, const std::string& command, bool wants_float) {
  if (opts.mode.empty()) return;
  const bool is_float = opts.mode == "float";
  if (is_float != wants_float)
    throw recop::Error(command + " runs in " + (wants_float ? "float" : "exact") +
                       " mode; --mode " + opts.mode + " is not supported here");
}

void require_no_float_flags(const GlobalOptions& opts, const std::string& command) {
  if (opts.tolerance)
    throw recop::Error("--tolerance applies to float-mode commands only, not " + command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"recursion operators of symplectic form pairs and triples"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOptions opts;
  app.add_option("--mode", opts.mode, "arithmetic mode: exact (classification) or float (flows)")
      ->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--seed", opts.seed, "sample-point seed override (flow commands)");
  app.add_option("--tolerance", opts.tolerance,
                 "intertwining enforcement tolerance (float mode only, default 1e-9)");
  app.add_option("--steps", opts.steps, "RK4 step count override (flow commands)");
  app.add_option("--samples", opts.samples, "sample count override (flow commands)");

  std::string pair_file, triple_file, example_name, flow_file, study_file;
  std::size_t halvings = 1;

  auto* classify_pair = app.add_subcommand("classify-pair", "classify a pair of 2-forms");
  classify_pair->add_option("file", pair_file, "JSON input document")->required();

  auto* classify_triple = app.add_subcommand("classify-triple", "classify a triple of 2-forms");
  classify_triple->add_option("file", triple_file, "JSON input document")->required();

  auto* verify_example =
      app.add_subcommand("verify-example", "reproduce a built-in catalog example");
  verify_example->add_option("name", example_name, "catalog name, e.g. dotti-fino-8")->required();

  auto* verify_all = app.add_subcommand("verify-all", "reproduce the whole catalog");

  auto* moser_flow = app.add_subcommand("moser-flow", "integrate a simultaneous Moser isotopy");
  moser_flow->add_option("file", flow_file, "JSON family document")->required();

  auto* study = app.add_subcommand("convergence-study", "step-halving order check");
  study->add_option("file", study_file, "JSON family document")->required();
  study->add_option("--halvings", halvings, "number of step halvings (default 1)");

  CLI11_PARSE(app, argc, argv);

  const recop::RunOverrides overrides{opts.steps, opts.samples, opts.seed, opts.tolerance};
  std::string command = "recop";
  try {
    if (classify_pair->parsed()) {
      command = "classify-pair";
      require_mode(opts, command, false);
      require_no_float_flags(opts, command);
      return emit(recop::run_classify_pair(recop::parse_document_file(pair_file)));
    }
    if (classify_triple->parsed()) {
      command = "classify-triple";
      require_mode(opts, command, false);
      require_no_float_flags(opts, command);
      return emit(recop::run_classify_triple(recop::parse_document_file(triple_file)));
    }
    if (verify_example->parsed()) {
      command = "verify-example";
      require_mode(opts, command, false);
      require_no_float_flags(opts, command);
      return emit(recop::run_verify_example(example_name));
    }
    if (verify_all->parsed()) {
      command = "verify-all";
      require_mode(opts, command, false);
      require_no_float_flags(opts, command);
      return emit(recop::run_verify_all());
    }
    if (moser_flow->parsed()) {
      command = "moser-flow";
      require_mode(opts, command, true);
      return emit(recop::run_moser_flow(recop::parse_document_file(flow_file), overrides));
    }
    if (study->parsed()) {
      command = "convergence-study";
      require_mode(opts, command, true);
      return emit(
          recop::run_convergence_study(recop::parse_document_file(study_file), halvings, overrides));
    }
  } catch (const std::exception& e) {
    return emit(recop::error_report(command, e.what()));
  }
  return 1;
}
