#include "recop/triples.hpp"

namespace recop {

namespace {

int square_kind(const RMatrix& a) {
  const RMatrix a2 = a * a;
  const RMatrix id = RMatrix::identity(a.rows());
  if (a2 == id) return 1;
  if (a2 == -id) return -1;
  return 0;
}

bool is_plus_minus_identity(const RMatrix& a) {
  const RMatrix id = RMatrix::identity(a.rows());
  return a == id || a == -id;
}

RMatrix metric_from_slot(const RForm& w, const RMatrix& a) {
  return form_matrix(w).get() * a;
}

}  // namespace

TripleOperators triple_operators(const RForm& w1, const RForm& w2, const RForm& w3) {
  TripleOperators ops{{recursion_operator(w2, w3),    // A1
                       recursion_operator(w3, w1),    // A2
                       recursion_operator(w1, w2)}};  // A3
  const RMatrix id = RMatrix::identity(w1.dimension());
  const auto& [a1, a2, a3] = ops.a;
  if (!(a3 * a2 * a1 == id) || !(a2 * a1 * a3 == id) || !(a1 * a3 * a2 == id))
    throw Error("internal error: cyclic composition of recursion operators is not Id");
  return ops;
}

std::string to_string(TripleTag tag) {
  switch (tag) {
    case TripleTag::HyperholomorphicSymplectic: return "HyperholomorphicSymplectic";
    case TripleTag::Hypersymplectic: return "Hypersymplectic";
    case TripleTag::HolomorphicSymplecticPair: return "HolomorphicSymplecticPair";
    case TripleTag::SymplecticTriple: return "SymplecticTriple";
    case TripleTag::Generic: return "Generic";
  }
  return "?";
}

std::pair<SymMatrix<Rational>, HyperholomorphicMetric> metric_hyperholomorphic(
    const std::vector<RForm>& forms, const std::array<RMatrix, 3>& ops) {
  for (const auto& a : ops)
    if (square_kind(a) != -1) throw Error("metric_hyperholomorphic requires A_i^2 = -Id");
  HyperholomorphicMetric report;
  report.g = metric_from_slot(forms[0], ops[0]);
  report.independent_of_i = metric_from_slot(forms[1], ops[1]) == report.g &&
                            metric_from_slot(forms[2], ops[2]) == report.g;
  if (!report.independent_of_i)
    throw Error("internal error: hyperholomorphic metric depends on the slot");
  report.symmetric = report.g.is_symmetric();
  report.nondegenerate = determinant(report.g) != 0;
  for (int i = 0; i < 3; ++i)
    report.invariant[i] = ops[i].transpose() * report.g * ops[i] == report.g;
  report.sig = signature(report.g);
  report.definite = report.sig.definite();
  return {SymMatrix<Rational>(report.g), report};
}

std::pair<SymMatrix<Rational>, HypersymplecticMetric> metric_hypersymplectic(
    const std::vector<RForm>& forms, const std::array<RMatrix, 3>& ops) {
  if (square_kind(ops[0]) != -1 || square_kind(ops[1]) != 1 || square_kind(ops[2]) != 1)
    throw Error("metric_hypersymplectic requires A1^2 = -Id, A2^2 = A3^2 = Id");
  HypersymplecticMetric report;
  report.g = metric_from_slot(forms[0], ops[0]);
  // forced by the cyclic relations: M2 A2 = M3 A1 A2 = -M3 A3, so the chain
  // reads w1(X,A1 Y) = -w2(X,A2 Y) = +w3(X,A3 Y)
  report.sign_chain = metric_from_slot(forms[1], ops[1]) == -report.g &&
                      metric_from_slot(forms[2], ops[2]) == report.g;
  if (!report.sign_chain)
    throw Error("internal error: hypersymplectic sign chain fails");
  report.symmetric = report.g.is_symmetric();
  report.nondegenerate = determinant(report.g) != 0;
  report.invariant_a1 = ops[0].transpose() * report.g * ops[0] == report.g;
  report.anti_invariant[0] = ops[1].transpose() * report.g * ops[1] == -report.g;
  report.anti_invariant[1] = ops[2].transpose() * report.g * ops[2] == -report.g;
  report.sig = signature(report.g);
  report.neutral = report.sig.neutral();
  return {SymMatrix<Rational>(report.g), report};
}

RForm restrict_2form(const RForm& f, const Subspace& s) {
  const std::size_t d = s.dimension();
  const RMatrix m = form_matrix(f).get();
  RMatrix c(f.dimension(), d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < f.dimension(); ++i) c(i, j) = s.basis()[j][i];
  const RMatrix restricted = c.transpose() * m * c;
  return matrix_form(SkewMatrix<Rational>(restricted));
}

TripleClassification classify_triple(const RForm& w1, const RForm& w2, const RForm& w3) {
  TripleClassification out;
  std::vector<RForm> forms{w1, w2, w3};
  TripleOperators ops = triple_operators(w1, w2, w3);
  out.cyclic_ok = true;

  std::array<int, 3> squares{};
  for (int i = 0; i < 3; ++i) squares[i] = square_kind(ops.a[i]);

  int minus_count = 0;
  bool any_nonunit = false;
  for (int s : squares) {
    if (s == -1) ++minus_count;
    if (s == 0) any_nonunit = true;
  }

  // canonical slots are reached by rotating the input; rotations preserve
  // the cyclic defining convention, so operators rotate along with forms
  int rotation = 0;
  TripleTag tag = TripleTag::Generic;
  if (!any_nonunit) {
    switch (minus_count) {
      case 3:
        tag = TripleTag::HyperholomorphicSymplectic;
        break;
      case 1: {
        tag = TripleTag::Hypersymplectic;
        int minus_slot = 0;
        for (int i = 0; i < 3; ++i)
          if (squares[i] == -1) minus_slot = i;
        rotation = minus_slot;  // bring it to slot 1
        break;
      }
      case 2: {
        int plus_slot = 0;
        for (int i = 0; i < 3; ++i)
          if (squares[i] == 1) plus_slot = i;
        if (is_plus_minus_identity(ops.a[plus_slot])) {
          tag = TripleTag::Generic;  // degenerate: the pair member is trivial
        } else {
          tag = TripleTag::HolomorphicSymplecticPair;
          rotation = (plus_slot + 1) % 3;  // bring it to slot 3
        }
        break;
      }
      case 0: {
        bool all_nontrivial = true;
        for (const auto& a : ops.a)
          if (is_plus_minus_identity(a)) all_nontrivial = false;
        tag = all_nontrivial ? TripleTag::SymplecticTriple : TripleTag::Generic;
        break;
      }
    }
  }

  std::vector<RForm> canonical_forms;
  std::array<RMatrix, 3> canonical_ops;
  for (int j = 0; j < 3; ++j) {
    const int src = (j + rotation) % 3;
    canonical_forms.push_back(forms[src]);
    canonical_ops[j] = ops.a[src];
    out.permutation[j] = src + 1;
    out.squares[j] = squares[src];
  }
  if (rotation != 0) {
    // the rotated operator tuple must agree with recomputation from the
    // rotated forms; this pins the cyclic indexing convention
    TripleOperators check =
        triple_operators(canonical_forms[0], canonical_forms[1], canonical_forms[2]);
    for (int j = 0; j < 3; ++j)
      if (!(check.a[j] == canonical_ops[j]))
        throw Error("internal error: rotation broke the cyclic operator convention");
  }

  out.tag = tag;
  out.forms = canonical_forms;
  out.operators.assign(canonical_ops.begin(), canonical_ops.end());

  const auto commutator_sign = [&](int i, int j) {
    // +1 commute, -1 anticommute, 0 neither
    const RMatrix ij = canonical_ops[i] * canonical_ops[j];
    const RMatrix ji = canonical_ops[j] * canonical_ops[i];
    if (ij == ji) return 1;
    if (ij == -ji) return -1;
    return 0;
  };
  const auto product_sign = [&]() {
    const RMatrix p = canonical_ops[1] * canonical_ops[0];
    if (p == canonical_ops[2]) return 1;
    if (p == -canonical_ops[2]) return -1;
    return 0;
  };

  switch (tag) {
    case TripleTag::HyperholomorphicSymplectic: {
      out.anticommute = commutator_sign(0, 1) == -1 && commutator_sign(0, 2) == -1 &&
                        commutator_sign(1, 2) == -1;
      out.product_sign = product_sign();
      out.hyper_metric = metric_hyperholomorphic(canonical_forms, canonical_ops).second;
      break;
    }
    case TripleTag::Hypersymplectic: {
      out.anticommute = commutator_sign(0, 1) == -1 && commutator_sign(0, 2) == -1 &&
                        commutator_sign(1, 2) == -1;
      out.product_sign = product_sign();
      out.hs_metric = metric_hypersymplectic(canonical_forms, canonical_ops).second;
      break;
    }
    case TripleTag::HolomorphicSymplecticPair: {
      HspData data{
          Subspace::span(w1.dimension(),
                         null_space(canonical_ops[2] - RMatrix::identity(w1.dimension()))),
          Subspace::span(w1.dimension(),
                         null_space(canonical_ops[2] + RMatrix::identity(w1.dimension()))),
      };
      data.commute = commutator_sign(0, 1) == 1 && commutator_sign(0, 2) == 1 &&
                     commutator_sign(1, 2) == 1;
      out.product_sign = product_sign();
      data.product_relation = out.product_sign == 1;
      data.leaf_dims_multiple_of_4 =
          data.e_plus.dimension() % 4 == 0 && data.e_minus.dimension() % 4 == 0 &&
          data.e_plus.dimension() > 0 && data.e_minus.dimension() > 0;
      int slot = 0;
      for (const auto* space : {&data.e_plus, &data.e_minus}) {
        // A1 = rec(w2, w3) and A2 = rec(w3, w1) restrict to the leaves
        data.restriction_tags[slot++] =
            classify_pair(restrict_2form(canonical_forms[1], *space),
                          restrict_2form(canonical_forms[2], *space))
                .tag;
        data.restriction_tags[slot++] =
            classify_pair(restrict_2form(canonical_forms[2], *space),
                          restrict_2form(canonical_forms[0], *space))
                .tag;
      }
      data.restrictions_holomorphic = true;
      for (PairTag t : data.restriction_tags)
        if (t != PairTag::HolomorphicSymplectic) data.restrictions_holomorphic = false;
      out.hsp = std::move(data);
      break;
    }
    case TripleTag::SymplecticTriple: {
      SymplecticTripleData data;
      data.all_pairs_symplectic = true;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          SymplecticTriplePair facts;
          facts.slots = {i + 1, j + 1};
          facts.tag = classify_pair(canonical_forms[i], canonical_forms[j]).tag;
          facts.rank_sum = rank_2form(canonical_forms[i] + canonical_forms[j]);
          facts.rank_diff = rank_2form(canonical_forms[i] - canonical_forms[j]);
          if (facts.tag != PairTag::SymplecticPair) data.all_pairs_symplectic = false;
          data.pairs.push_back(facts);
        }
      out.symplectic_triple = std::move(data);
      break;
    }
    case TripleTag::Generic: {
      for (int i = 0; i < 3; ++i)
        out.minimal_polynomial_degrees[i] = minimal_polynomial_degree(canonical_ops[i]);
      break;
    }
  }
  return out;
}

}  // namespace recop
