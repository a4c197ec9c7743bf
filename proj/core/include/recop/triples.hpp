#pragma once

#include "recop/kform.hpp"
#include "recop/matrix.hpp"
#include "recop/recursion.hpp"
#include "recop/subspace.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace recop {

/// Operators of a triple under the cyclic convention
/// i_X w_i = i_{A_{i+2} X} w_{i+1} (indices mod 3), so
/// A3 = rec(w1,w2), A1 = rec(w2,w3), A2 = rec(w3,w1).
struct TripleOperators {
  std::array<RMatrix, 3> a;
};

/// Computes the three operators and verifies all cyclic compositions
/// A3 A2 A1 = A2 A1 A3 = A1 A3 A2 = Id exactly (failure is an internal error).
TripleOperators triple_operators(const RForm& w1, const RForm& w2, const RForm& w3);

enum class TripleTag {
  HyperholomorphicSymplectic,
  Hypersymplectic,
  HolomorphicSymplecticPair,
  SymplecticTriple,
  Generic,
};

std::string to_string(TripleTag tag);

struct HyperholomorphicMetric {
  RMatrix g;  // g(X,Y) = w_1(X, A_1 Y), computed from slot 1
  Signature sig;
  bool independent_of_i = false;  // slots 2 and 3 reproduce g exactly
  bool symmetric = false;
  bool nondegenerate = false;
  std::array<bool, 3> invariant{};  // g(A_i X, A_i Y) = g(X, Y)
  bool definite = false;            // definite metric = the hyper-Kaehler case
  bool ok() const {
    return independent_of_i && symmetric && nondegenerate && invariant[0] && invariant[1] &&
           invariant[2];
  }
};

struct HypersymplecticMetric {
  RMatrix g;  // w_1(X, A_1 Y) after renumbering A_1^2 = -Id
  Signature sig;
  bool sign_chain = false;  // w1(X,A1 Y) = -w2(X,A2 Y) = -w3(X,A3 Y)
  bool symmetric = false;
  bool nondegenerate = false;
  bool invariant_a1 = false;               // g(A1 X, A1 Y) = g(X, Y)
  std::array<bool, 2> anti_invariant{};    // g(A_i X, A_i Y) = -g(X,Y), i = 2,3
  bool neutral = false;
  bool ok() const {
    return sign_chain && symmetric && nondegenerate && invariant_a1 && anti_invariant[0] &&
           anti_invariant[1] && neutral;
  }
};

/// Payload of the holomorphic-symplectic-pair case (canonical slots:
/// A1^2 = A2^2 = -Id, A3^2 = Id).
struct HspData {
  Subspace e_plus;   // +1 eigenspace of A3
  Subspace e_minus;  // -1 eigenspace of A3
  bool commute = false;
  bool product_relation = false;  // A2 A1 = A3
  bool leaf_dims_multiple_of_4 = false;
  // classification of (w2,w3) and (w3,w1) restricted to each eigenspace
  std::array<PairTag, 4> restriction_tags{};
  bool restrictions_holomorphic = false;
};

struct SymplecticTriplePair {
  std::array<int, 2> slots;  // canonical slot indices, 1-based
  PairTag tag = PairTag::Generic;
  std::size_t rank_sum = 0;   // rank(w_i + w_j)
  std::size_t rank_diff = 0;  // rank(w_i - w_j)
};

struct SymplecticTripleData {
  std::vector<SymplecticTriplePair> pairs;
  bool all_pairs_symplectic = false;
};

struct TripleClassification {
  TripleTag tag = TripleTag::Generic;
  /// canonical slot j (1-based) holds input form permutation[j-1]
  std::array<int, 3> permutation{1, 2, 3};
  std::vector<RForm> forms;       // canonical order
  std::vector<RMatrix> operators; // canonical order
  std::array<int, 3> squares{};   // +1 / -1 per slot, 0 when not +-Id
  bool cyclic_ok = false;
  bool anticommute = false;       // metric cases: A_i A_j = -A_j A_i for i != j
  int product_sign = 0;           // s with A2 A1 = s * A3 (0 if neither)
  std::optional<HyperholomorphicMetric> hyper_metric;
  std::optional<HypersymplecticMetric> hs_metric;
  std::optional<HspData> hsp;
  std::optional<SymplecticTripleData> symplectic_triple;
  std::array<std::size_t, 3> minimal_polynomial_degrees{};  // informative for Generic
};

/// g(X,Y) = w_i(X, A_i Y), required independent of i; all squares must be -Id.
std::pair<SymMatrix<Rational>, HyperholomorphicMetric> metric_hyperholomorphic(
    const std::vector<RForm>& forms, const std::array<RMatrix, 3>& ops);

/// Neutral metric of a hypersymplectic triple, for renumbered operators
/// A1^2 = -Id, A2^2 = A3^2 = Id.
std::pair<SymMatrix<Rational>, HypersymplecticMetric> metric_hypersymplectic(
    const std::vector<RForm>& forms, const std::array<RMatrix, 3>& ops);

/// Full classification with canonical renumbering (rotations only) and the
/// per-tag verification payloads.
TripleClassification classify_triple(const RForm& w1, const RForm& w2, const RForm& w3);

/// Pull a 2-form back to a subspace in its canonical basis coordinates.
RForm restrict_2form(const RForm& f, const Subspace& s);

}  // namespace recop
