#pragma once

#include "recop/kform.hpp"
#include "recop/lie_algebra.hpp"
#include "recop/moser.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace recop {

/// Parse failure carrying every violation found, not just the first.
struct DocumentError : Error {
  explicit DocumentError(std::vector<std::string> violations);
  std::vector<std::string> violations;
};

struct FlowParams {
  double epsilon = 1.0;  // scales every primitive term
  std::size_t steps = 200;
  std::size_t samples = 64;
  std::uint64_t seed = 1;
};

struct InputDocument {
  enum class Mode { Pair, Triple, Flow };

  Mode mode = Mode::Pair;
  std::size_t dimension = 0;
  std::optional<LieAlgebra> algebra;
  std::vector<RForm> forms;                    // pair: 2 forms, triple: 3 forms
  std::optional<flow::FlowFamily> family;      // flow mode
  FlowParams params;
  std::uint64_t input_hash = 0;
};

/// Parse and validate a JSON input document; collects all violations.
InputDocument parse_document(const std::string& text);
InputDocument parse_document_file(const std::string& path);

/// FNV-1a, used for the report's input-hash echo.
std::uint64_t fnv1a_hash(const std::string& text);

}  // namespace recop
