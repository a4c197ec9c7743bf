#pragma once

#include "recop/lie_algebra.hpp"
#include "recop/triples.hpp"

#include <optional>
#include <string>
#include <vector>

namespace recop {

/// A named triple of left-invariant symplectic forms on a fixed algebra,
/// together with the classification it must reproduce.
struct ExampleCatalogEntry {
  std::string name;
  LieAlgebra algebra;
  std::vector<RForm> forms;  // three 2-forms
  TripleTag expected_tag = TripleTag::Generic;
  std::optional<Signature> expected_signature;  // metric cases only
};

/// Base entries: dotti-fino-8, nil3xR, hsp-8, triple-6, flat-hk-4.
/// Combinators: product(a,b,...) assembles block-diagonal products of
/// hyperholomorphic entries; a leading '-' on a factor negates its forms
/// (flipping the metric sign, hence swapping the signature).
ExampleCatalogEntry builtin_example(const std::string& name);

std::vector<std::string> catalog_names();

}  // namespace recop
