#pragma once

#include "recop/catalog.hpp"
#include "recop/document.hpp"

#include <optional>
#include <string>

namespace recop {

/// Deterministic structured-text report plus the process exit status.
/// Exit codes: 0 all checks green, 1 error or failed expectation,
/// 2 input classified Generic (outside the recognized geometries).
struct Report {
  std::string text;
  int exit_code = 0;
};

struct RunOverrides {
  std::optional<std::size_t> steps;
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;  // intertwining enforcement, float mode
};

Report run_classify_pair(const InputDocument& doc);
Report run_classify_triple(const InputDocument& doc);
Report run_verify_example(const std::string& name);
Report run_verify_all();
Report run_moser_flow(const InputDocument& doc, const RunOverrides& overrides);
Report run_convergence_study(const InputDocument& doc, std::size_t halvings,
                             const RunOverrides& overrides);

/// Uncaught-error report with exit code 1 (used by the CLI wrapper).
Report error_report(const std::string& command, const std::string& message);

}  // namespace recop
