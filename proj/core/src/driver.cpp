#include "recop/driver.hpp"

#include "recop/moser.hpp"
#include "recop/recursion.hpp"
#include "recop/triples.hpp"

#include <iomanip>
#include <sstream>

namespace recop {

namespace {

std::string hex_hash(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << v;
  return os.str();
}

class ReportBuilder {
 public:
  explicit ReportBuilder(const std::string& command) {
    os_ << "recop report\n";
    line("command", command);
  }

  void line(const std::string& key, const std::string& value) {
    os_ << key << ": " << value << "\n";
  }
  void raw(const std::string& text) { os_ << text << "\n"; }

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    os_ << "check " << name << ": " << (ok ? "ok" : "FAIL");
    if (!detail.empty()) os_ << " (" << detail << ")";
    os_ << "\n";
    all_ok_ &= ok;
  }

  void matrix(const std::string& title, const RMatrix& m) {
    os_ << title << ":\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
      os_ << " ";
      for (std::size_t j = 0; j < m.cols(); ++j) os_ << " " << format_rational(m(i, j));
      os_ << "\n";
    }
  }

  bool all_ok() const { return all_ok_; }

  Report finish(bool generic = false) {
    if (generic)
      os_ << "result: GENERIC\n";
    else
      os_ << "result: " << (all_ok_ ? "PASS" : "FAIL") << "\n";
    return Report{os_.str(), generic ? 2 : (all_ok_ ? 0 : 1)};
  }

 private:
  std::ostringstream os_;
  bool all_ok_ = true;
};

std::string signature_string(const Signature& s) {
  std::ostringstream os;
  os << "(" << s.positive << "," << s.negative << "," << s.zero << ")";
  return os.str();
}

std::string signature_display(const Signature& s) {
  std::ostringstream os;
  os << "(" << std::max(s.positive, s.negative) << "," << std::min(s.positive, s.negative) << ")";
  return os.str();
}

std::string squares_string(const std::array<int, 3>& squares) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < 3; ++i) {
    if (i) os << ",";
    if (squares[i] > 0) os << "+1";
    else if (squares[i] < 0) os << "-1";
    else os << "0";
  }
  os << ")";
  return os.str();
}

void algebra_lines(ReportBuilder& rb, const LieAlgebra& algebra) {
  std::ostringstream os;
  if (algebra.nilpotency_step() > 0)
    os << "nilpotent, step " << algebra.nilpotency_step();
  else
    os << "not nilpotent";
  rb.line("algebra", os.str());
}

/// Closedness / Nijenhuis / integrability checks that need an ambient algebra.
void invariant_checks_with_algebra(ReportBuilder& rb, const LieAlgebra& algebra,
                                   const std::vector<RForm>& forms,
                                   const std::vector<RMatrix>& operators,
                                   const std::array<int, 3>* squares) {
  for (std::size_t i = 0; i < forms.size(); ++i)
    rb.check("closed omega" + std::to_string(i + 1), algebra.is_closed(forms[i]));
  for (std::size_t i = 0; i < operators.size(); ++i) {
    const int sq = squares ? (*squares)[i] : 0;
    if (squares && sq == 0) continue;
    rb.check("nijenhuis A" + std::to_string(i + 1) + " zero",
             algebra.nijenhuis(operators[i]).is_zero());
    if (sq == 1) {
      const std::size_t n = algebra.dimension();
      const auto plus = Subspace::span(n, null_space(operators[i] - RMatrix::identity(n)));
      const auto minus = Subspace::span(n, null_space(operators[i] + RMatrix::identity(n)));
      rb.check("eigenfoliations A" + std::to_string(i + 1) + " integrable",
               algebra.is_subalgebra(plus) && algebra.is_subalgebra(minus));
    }
  }
}

std::string vector_string(const RVector& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << " ";
    os << format_rational(v[i]);
  }
  return os.str();
}

void pair_payload(ReportBuilder& rb, const RForm& omega, const RForm& eta,
                  const PairClassification& cls) {
  const std::size_t n = omega.dimension();
  rb.line("classification", to_string(cls.tag));
  rb.matrix("operator A", cls.a);
  rb.check("eta-symmetry", eta_symmetry_check(omega, eta, cls.a));
  rb.check("round-trip A(w,h)*A(h,w) = Id",
           (cls.a * recursion_operator(eta, omega)).is_identity());
  switch (cls.tag) {
    case PairTag::SymplecticPair: {
      const auto& sp = *cls.symplectic_pair;
      rb.line("Omega+", format_kform(sp.omega_plus));
      rb.line("Omega-", format_kform(sp.omega_minus));
      rb.line("rank Omega+", std::to_string(sp.rank_plus));
      rb.line("rank Omega-", std::to_string(sp.rank_minus));
      rb.line("dim D+", std::to_string(sp.d_plus.dimension()));
      rb.line("dim D-", std::to_string(sp.d_minus.dimension()));
      for (const auto& row : sp.d_plus.basis()) rb.line("D+ basis", vector_string(row));
      for (const auto& row : sp.d_minus.basis()) rb.line("D- basis", vector_string(row));
      rb.check("kernels split the frame",
               sp.d_plus.dimension() + sp.d_minus.dimension() == n);
      rb.check("ranks sum to n", sp.rank_plus + sp.rank_minus == n);
      const auto e_plus = Subspace::span(n, null_space(cls.a - RMatrix::identity(n)));
      const auto e_minus = Subspace::span(n, null_space(cls.a + RMatrix::identity(n)));
      rb.check("ker(w-h) is the +1 eigenspace", sp.d_plus == e_plus);
      rb.check("ker(w+h) is the -1 eigenspace", sp.d_minus == e_minus);
      break;
    }
    case PairTag::HolomorphicSymplectic: {
      rb.check("complex kernel: i_{u+iAu}(w+ih) = 0", complex_kernel_check(omega, eta, cls.a));
      if (n == 4) {
        const auto couple = couple_conditions(omega, eta);
        rb.check("couple w^w = h^h", couple.squares_equal);
        rb.check("couple w^h = 0", couple.product_zero);
      }
      break;
    }
    case PairTag::Generic:
      rb.line("minimal-polynomial-degree", std::to_string(cls.minimal_polynomial_degree));
      break;
    default:
      break;
  }
}

void triple_payload(ReportBuilder& rb, const TripleClassification& cls) {
  rb.line("classification", to_string(cls.tag));
  {
    std::ostringstream os;
    os << "(" << cls.permutation[0] << "," << cls.permutation[1] << "," << cls.permutation[2]
       << ")";
    rb.line("permutation", os.str());
  }
  rb.line("squares", squares_string(cls.squares));
  rb.check("cyclic identity A3*A2*A1 = Id", cls.cyclic_ok);
  for (int i = 0; i < 3; ++i)
    rb.matrix("operator A" + std::to_string(i + 1), cls.operators[i]);

  switch (cls.tag) {
    case TripleTag::HyperholomorphicSymplectic: {
      const auto& m = *cls.hyper_metric;
      rb.check("anticommutation A_iA_j = -A_jA_i", cls.anticommute);
      rb.check("product relation A2*A1 = -A3", cls.product_sign == -1);
      rb.matrix("metric", m.g);
      rb.check("metric independent of slot", m.independent_of_i);
      rb.check("metric symmetric", m.symmetric);
      rb.check("metric nondegenerate", m.nondegenerate);
      rb.check("metric invariant under all A_i", m.invariant[0] && m.invariant[1] && m.invariant[2]);
      rb.line("signature", signature_string(m.sig));
      rb.line("signature-display", signature_display(m.sig));
      rb.line("metric-definite", m.definite ? "yes (hyper-Kaehler case)" : "no");
      break;
    }
    case TripleTag::Hypersymplectic: {
      const auto& m = *cls.hs_metric;
      rb.check("anticommutation A_iA_j = -A_jA_i", cls.anticommute);
      rb.check("product relation A2*A1 = A3", cls.product_sign == 1);
      rb.matrix("metric", m.g);
      rb.check("sign chain w1(X,A1Y) = -w2(X,A2Y) = w3(X,A3Y)", m.sign_chain);
      rb.check("metric symmetric", m.symmetric);
      rb.check("metric nondegenerate", m.nondegenerate);
      rb.check("metric invariant under A1", m.invariant_a1);
      rb.check("metric anti-invariant under A2, A3",
               m.anti_invariant[0] && m.anti_invariant[1]);
      rb.check("neutral signature", m.neutral);
      rb.line("signature", signature_string(m.sig));
      rb.line("signature-display", signature_display(m.sig));
      break;
    }
    case TripleTag::HolomorphicSymplecticPair: {
      const auto& h = *cls.hsp;
      rb.check("operators commute", h.commute);
      rb.check("product relation A2*A1 = A3", h.product_relation);
      rb.line("dim E+(A3)", std::to_string(h.e_plus.dimension()));
      rb.line("dim E-(A3)", std::to_string(h.e_minus.dimension()));
      rb.check("leaf dimensions are positive multiples of 4", h.leaf_dims_multiple_of_4);
      rb.check("leaf restrictions are holomorphic symplectic", h.restrictions_holomorphic);
      break;
    }
    case TripleTag::SymplecticTriple: {
      const auto& st = *cls.symplectic_triple;
      for (const auto& pair : st.pairs) {
        std::ostringstream os;
        os << "pair (w" << pair.slots[0] << ",w" << pair.slots[1] << ")";
        rb.check(os.str() + " is a symplectic pair", pair.tag == PairTag::SymplecticPair);
        rb.line(os.str() + " rank(sum)", std::to_string(pair.rank_sum));
        rb.line(os.str() + " rank(diff)", std::to_string(pair.rank_diff));
        rb.check(os.str() + " ranks sum to n",
                 pair.rank_sum + pair.rank_diff == cls.forms[0].dimension());
      }
      rb.check("every pair symplectic", st.all_pairs_symplectic);
      break;
    }
    case TripleTag::Generic: {
      std::ostringstream os;
      os << "(" << cls.minimal_polynomial_degrees[0] << "," << cls.minimal_polynomial_degrees[1]
         << "," << cls.minimal_polynomial_degrees[2] << ")";
      rb.line("minimal-polynomial-degrees", os.str());
      break;
    }
  }
}

std::string catalog_entry_fingerprint(const ExampleCatalogEntry& entry) {
  std::ostringstream os;
  os << entry.name << "|";
  for (const auto& e : entry.algebra.defining_entries())
    os << e.i << "," << e.j << "," << e.k << "," << format_rational(e.c) << ";";
  os << "|";
  for (const auto& f : entry.forms) os << format_kform(f) << ";";
  return os.str();
}

void verify_entry(ReportBuilder& rb, const ExampleCatalogEntry& entry) {
  rb.line("name", entry.name);
  rb.line("input-hash", hex_hash(fnv1a_hash(catalog_entry_fingerprint(entry))));
  rb.line("dimension", std::to_string(entry.forms[0].dimension()));
  algebra_lines(rb, entry.algebra);
  for (std::size_t i = 0; i < entry.forms.size(); ++i) {
    rb.line("omega" + std::to_string(i + 1), format_kform(entry.forms[i]));
    rb.check("nondegenerate omega" + std::to_string(i + 1),
             pfaffian(form_matrix(entry.forms[i]).get()) != 0);
  }
  const auto cls = classify_triple(entry.forms[0], entry.forms[1], entry.forms[2]);
  triple_payload(rb, cls);
  invariant_checks_with_algebra(rb, entry.algebra, cls.forms, cls.operators, &cls.squares);
  rb.check("expected classification", cls.tag == entry.expected_tag,
           "expected " + to_string(entry.expected_tag) + ", got " + to_string(cls.tag));
  if (entry.expected_signature) {
    const Signature* got = nullptr;
    if (cls.hyper_metric) got = &cls.hyper_metric->sig;
    if (cls.hs_metric) got = &cls.hs_metric->sig;
    rb.check("expected signature " + signature_string(*entry.expected_signature),
             got != nullptr && *got == *entry.expected_signature,
             got ? "got " + signature_string(*got) : "no metric attached");
  }
}

void flow_common(ReportBuilder& rb, const InputDocument& doc, const RunOverrides& overrides,
                 std::size_t& steps, std::vector<std::vector<double>>& samples,
                 double& tolerance) {
  const auto& family = *doc.family;
  steps = overrides.steps.value_or(doc.params.steps);
  const std::size_t count = overrides.samples.value_or(doc.params.samples);
  const std::uint64_t seed = overrides.seed.value_or(doc.params.seed);
  tolerance = overrides.tolerance.value_or(1e-9);
  samples = flow::sample_points(doc.dimension, count, seed);
  rb.line("dimension", std::to_string(doc.dimension));
  rb.line("steps", std::to_string(steps));
  rb.line("samples", std::to_string(count));
  rb.line("seed", std::to_string(seed));
  rb.line("tolerance", sci(tolerance));
  rb.check("omega family closed", family.omega.closedness_residual() < 1e-10,
           "residual " + sci(family.omega.closedness_residual()));
  rb.check("eta family closed", family.eta.closedness_residual() < 1e-10,
           "residual " + sci(family.eta.closedness_residual()));
}

}  // namespace

Report run_classify_pair(const InputDocument& doc) {
  ReportBuilder rb("classify-pair");
  if (doc.mode != InputDocument::Mode::Pair)
    throw Error("classify-pair needs a document with mode \"pair\"");
  rb.line("input-hash", hex_hash(doc.input_hash));
  rb.line("mode", "pair");
  rb.line("dimension", std::to_string(doc.dimension));
  const auto cls = classify_pair(doc.forms[0], doc.forms[1]);
  pair_payload(rb, doc.forms[0], doc.forms[1], cls);
  if (doc.algebra) {
    algebra_lines(rb, *doc.algebra);
    std::vector<RMatrix> ops{cls.a};
    std::array<int, 3> squares{0, 0, 0};
    const RMatrix a2 = cls.a * cls.a;
    if (a2.is_identity()) squares[0] = 1;
    else if ((-a2).is_identity()) squares[0] = -1;
    invariant_checks_with_algebra(rb, *doc.algebra, doc.forms, ops, &squares);
  }
  return rb.finish(cls.tag == PairTag::Generic);
}

Report run_classify_triple(const InputDocument& doc) {
  ReportBuilder rb("classify-triple");
  if (doc.mode != InputDocument::Mode::Triple)
    throw Error("classify-triple needs a document with mode \"triple\"");
  rb.line("input-hash", hex_hash(doc.input_hash));
  rb.line("mode", "triple");
  rb.line("dimension", std::to_string(doc.dimension));
  const auto cls = classify_triple(doc.forms[0], doc.forms[1], doc.forms[2]);
  triple_payload(rb, cls);
  if (doc.algebra)
    invariant_checks_with_algebra(rb, *doc.algebra, cls.forms, cls.operators, &cls.squares);
  return rb.finish(cls.tag == TripleTag::Generic);
}

Report run_verify_example(const std::string& name) {
  ReportBuilder rb("verify-example");
  verify_entry(rb, builtin_example(name));
  return rb.finish();
}

Report run_verify_all() {
  ReportBuilder rb("verify-all");
  std::vector<std::string> names = catalog_names();
  names.push_back("product(dotti-fino-8,flat-hk-4)");
  names.push_back("product(dotti-fino-8,-flat-hk-4)");
  for (const auto& name : names) {
    rb.raw("--- " + name + " ---");
    verify_entry(rb, builtin_example(name));
  }
  return rb.finish();
}

Report run_moser_flow(const InputDocument& doc, const RunOverrides& overrides) {
  ReportBuilder rb("moser-flow");
  if (doc.mode != InputDocument::Mode::Flow)
    throw Error("moser-flow needs a document with mode \"flow\"");
  rb.line("input-hash", hex_hash(doc.input_hash));
  rb.line("mode", "flow");
  std::size_t steps = 0;
  double tolerance = 0;
  std::vector<std::vector<double>> samples;
  flow_common(rb, doc, overrides, steps, samples, tolerance);
  const auto result = flow::integrate_flow(*doc.family, samples, steps, tolerance);
  rb.line("intertwining-residual", sci(result.intertwining.primitive_residual));
  rb.line("a-constancy-residual", sci(result.intertwining.constancy_residual));
  rb.line("field-agreement-residual", sci(result.field_agreement_residual));
  for (const auto& cp : result.checkpoints) {
    std::ostringstream os;
    os << "t=" << cp.t << " pullback-omega " << sci(cp.pullback_error_omega) << " pullback-eta "
       << sci(cp.pullback_error_eta) << " min-det " << sci(cp.min_jacobian_det) << " offblock "
       << sci(cp.max_offblock) << " cohomology-delta "
       << sci(std::max(cp.cohomology_delta_omega, cp.cohomology_delta_eta));
    rb.line("checkpoint", os.str());
  }
  rb.line("max-pullback-omega", sci(result.at_time_one().pullback_error_omega));
  rb.line("max-pullback-eta", sci(result.at_time_one().pullback_error_eta));
  bool det_positive = true;
  double worst_cohomology = 0;
  for (const auto& cp : result.checkpoints) {
    det_positive &= cp.min_jacobian_det > 0;
    worst_cohomology = std::max(
        worst_cohomology, std::max(cp.cohomology_delta_omega, cp.cohomology_delta_eta));
  }
  rb.check("orientation preserved (det > 0)", det_positive);
  rb.check("cohomology class constant", worst_cohomology < 1e-10,
           "drift " + sci(worst_cohomology));
  return rb.finish();
}

Report run_convergence_study(const InputDocument& doc, std::size_t halvings,
                             const RunOverrides& overrides) {
  ReportBuilder rb("convergence-study");
  if (doc.mode != InputDocument::Mode::Flow)
    throw Error("convergence-study needs a document with mode \"flow\"");
  rb.line("input-hash", hex_hash(doc.input_hash));
  rb.line("mode", "flow");
  std::size_t steps = 0;
  double tolerance = 0;
  std::vector<std::vector<double>> samples;
  flow_common(rb, doc, overrides, steps, samples, tolerance);
  rb.line("halvings", std::to_string(halvings));
  std::vector<double> errors_omega, errors_eta;
  for (std::size_t level = 0; level <= halvings; ++level) {
    const std::size_t level_steps = steps << level;
    const auto result = flow::integrate_flow(*doc.family, samples, level_steps, tolerance);
    errors_omega.push_back(result.at_time_one().pullback_error_omega);
    errors_eta.push_back(result.at_time_one().pullback_error_eta);
    std::ostringstream os;
    os << "steps " << level_steps << " error-omega " << sci(errors_omega.back()) << " error-eta "
       << sci(errors_eta.back());
    rb.line("level " + std::to_string(level), os.str());
  }
  for (std::size_t level = 0; level + 1 <= halvings; ++level) {
    const double r_omega = errors_omega[level] / errors_omega[level + 1];
    const double r_eta = errors_eta[level] / errors_eta[level + 1];
    std::ostringstream os;
    os << "omega " << sci(r_omega) << " eta " << sci(r_eta);
    rb.line("ratio level" + std::to_string(level) + "/level" + std::to_string(level + 1),
            os.str());
    rb.check("fourth-order decay at level " + std::to_string(level) + " (ratio >= 12)",
             r_omega >= 12.0 && r_eta >= 12.0);
  }
  return rb.finish();
}

Report error_report(const std::string& command, const std::string& message) {
  std::ostringstream os;
  os << "recop report\ncommand: " << command << "\nerror: " << message << "\nresult: ERROR\n";
  return Report{os.str(), 1};
}

}  // namespace recop
