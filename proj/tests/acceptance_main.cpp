// Acceptance suite: one pass/fail line per criterion. Criteria 1-4 and 8-10
// drive the installed CLI end to end; 5-7 sweep the library with seeded
// random data. Exits nonzero if any criterion fails.

#include "recop/catalog.hpp"
#include "recop/document.hpp"
#include "recop/driver.hpp"
#include "recop/recursion.hpp"
#include "recop/triples.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace recop;
namespace fs = std::filesystem;

std::string g_cli;
fs::path g_data;
fs::path g_tmp;
int g_spawn_counter = 0;

struct SpawnResult {
  int exit_code = -1;
  std::string output;
};

SpawnResult spawn(const std::string& args) {
  const fs::path out = g_tmp / ("out-" + std::to_string(g_spawn_counter++) + ".txt");
  const std::string command = "'" + g_cli + "' " + args + " > '" + out.string() + "' 2>&1";
  const int status = std::system(command.c_str());
  SpawnResult result;
  if (status != -1 && WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  std::ifstream in(out);
  std::stringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

double parse_value_after(const std::string& text, const std::string& prefix) {
  const auto pos = text.find(prefix);
  if (pos == std::string::npos) return std::numeric_limits<double>::quiet_NaN();
  return std::strtod(text.c_str() + pos + prefix.size(), nullptr);
}

struct Criterion {
  int number;
  std::string title;
  bool passed = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      notes.push_back(what);
    }
  }
};

int g_failures = 0;

void report(Criterion& c, double seconds) {
  std::ostringstream line;
  line << (c.passed ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.title << " ("
       << std::fixed << std::setprecision(2) << seconds << " s)";
  std::cout << line.str() << "\n";
  if (!c.passed) {
    ++g_failures;
    for (const auto& note : c.notes) std::cout << "       - " << note << "\n";
  }
}

template <class Body>
void run_criterion(int number, const std::string& title, double time_limit_s, Body body) {
  Criterion c{number, title, true, {}};
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit_s > 0)
    c.require(seconds < time_limit_s,
              "runtime " + std::to_string(seconds) + " s exceeds " +
                  std::to_string(time_limit_s) + " s");
  report(c, seconds);
}

// ---- random generators for the property criteria --------------------------

Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  return Rational(num(rng), den(rng));
}

RMatrix random_skew(std::size_t n, std::mt19937_64& rng) {
  RMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = small_rational(rng);
      m(j, i) = -m(i, j);
    }
  return m;
}

RMatrix random_nondegenerate_skew(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    RMatrix m = random_skew(n, rng);
    if (pfaffian(m) != 0) return m;
  }
}

RMatrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    RMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = small_rational(rng);
    if (determinant(m) != 0) return m;
  }
}

// ---- criteria --------------------------------------------------------------

void criterion_1(Criterion& c) {
  const auto r = spawn("verify-example dotti-fino-8");
  c.require(r.exit_code == 0, "exit code " + std::to_string(r.exit_code));
  for (const char* line : {
           "classification: HyperholomorphicSymplectic",
           "squares: (-1,-1,-1)",
           "check closed omega1: ok",
           "check closed omega2: ok",
           "check closed omega3: ok",
           "check nondegenerate omega1: ok",
           "check nondegenerate omega2: ok",
           "check nondegenerate omega3: ok",
           "check anticommutation A_iA_j = -A_jA_i: ok",
           "check metric independent of slot: ok",
           "signature: (4,4,0)",
       })
    c.require(contains(r.output, line), std::string("missing: ") + line);
}

void criterion_2(Criterion& c) {
  const auto r = spawn("verify-example nil3xR");
  c.require(r.exit_code == 0, "exit code " + std::to_string(r.exit_code));
  for (const char* line : {
           "classification: Hypersymplectic",
           "check sign chain w1(X,A1Y) = -w2(X,A2Y) = w3(X,A3Y): ok",
           "check metric invariant under A1: ok",
           "check metric anti-invariant under A2, A3: ok",
           "check neutral signature: ok",
           "signature: (2,2,0)",
       })
    c.require(contains(r.output, line), std::string("missing: ") + line);
}

void criterion_3(Criterion& c) {
  const auto r = spawn("verify-example hsp-8");
  c.require(r.exit_code == 0, "exit code " + std::to_string(r.exit_code));
  for (const char* line : {
           "classification: HolomorphicSymplecticPair",
           "check operators commute: ok",
           "dim E+(A3): 4",
           "dim E-(A3): 4",
           "check leaf restrictions are holomorphic symplectic: ok",
       })
    c.require(contains(r.output, line), std::string("missing: ") + line);
}

void criterion_4(Criterion& c) {
  const auto r = spawn("verify-example triple-6");
  c.require(r.exit_code == 0, "exit code " + std::to_string(r.exit_code));
  c.require(contains(r.output, "classification: SymplecticTriple"),
            "missing SymplecticTriple tag");
  c.require(contains(r.output, "check every pair symplectic: ok"),
            "missing pairwise symplectic-pair verdict");
  // every w_i +- w_j realizes rank 4 with the appropriate sign, and the
  // complementary combination is forced to rank 2 (ranks sum to n = 6)
  for (const char* pair : {"(w1,w2)", "(w1,w3)", "(w2,w3)"}) {
    const double rank_sum =
        parse_value_after(r.output, std::string("pair ") + pair + " rank(sum): ");
    const double rank_diff =
        parse_value_after(r.output, std::string("pair ") + pair + " rank(diff): ");
    const bool profile = (rank_sum == 4.0 && rank_diff == 2.0) ||
                         (rank_sum == 2.0 && rank_diff == 4.0);
    c.require(profile, std::string("pair ") + pair + " rank profile is not {4,2}");
    c.require(contains(r.output, std::string("check pair ") + pair + " ranks sum to n: ok"),
              std::string("pair ") + pair + " rank sum check missing");
  }
}

void criterion_5(Criterion& c) {
  std::mt19937_64 rng(20260810);
  int failures = 0;
  int total = 0;
  const std::size_t dims[] = {4, 6, 8};
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = dims[trial % 3];
    std::uniform_int_distribution<std::size_t> split(1, n / 2 - 1);
    const std::size_t p = 2 * split(rng);  // even block sizes
    const RMatrix top = random_nondegenerate_skew(p, rng);
    const RMatrix bottom = random_nondegenerate_skew(n - p, rng);
    const RMatrix b = random_invertible(n, rng);
    const RMatrix plus =
        b.transpose() * RMatrix::block_diag(top, RMatrix(n - p, n - p)) * b;
    const RMatrix minus = b.transpose() * RMatrix::block_diag(RMatrix(p, p), bottom) * b;
    const RForm w = (matrix_form(SkewMatrix<Rational>(plus)) +
                     matrix_form(SkewMatrix<Rational>(minus))) *
                    Rational(1, 2);
    const RForm h = (matrix_form(SkewMatrix<Rational>(plus)) -
                     matrix_form(SkewMatrix<Rational>(minus))) *
                    Rational(1, 2);
    ++total;
    const auto cls = classify_pair(w, h);
    if (cls.tag != PairTag::SymplecticPair) {
      ++failures;
      continue;
    }
    const auto& sp = *cls.symplectic_pair;
    const auto e_plus = Subspace::span(n, null_space(cls.a - RMatrix::identity(n)));
    const auto e_minus = Subspace::span(n, null_space(cls.a + RMatrix::identity(n)));
    if (!(sp.d_plus == e_plus) || !(sp.d_minus == e_minus) ||
        sp.d_plus.dimension() + sp.d_minus.dimension() != n)
      ++failures;
  }
  c.require(total == 1000, "expected 1000 trials");
  c.require(failures == 0, std::to_string(failures) + " kernel-eigenspace failures");
}

void criterion_6(Criterion& c) {
  std::mt19937_64 rng(8011917);
  int failures = 0;
  const std::size_t dims[] = {4, 6, 8};
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = dims[trial % 3];
    const RForm w = matrix_form(SkewMatrix<Rational>(random_nondegenerate_skew(n, rng)));
    const RForm h = matrix_form(SkewMatrix<Rational>(random_nondegenerate_skew(n, rng)));
    const RMatrix a = recursion_operator(w, h);
    if (!(a * recursion_operator(h, w)).is_identity()) ++failures;
    if (!eta_symmetry_check(w, h, a)) ++failures;
  }
  c.require(failures == 0, std::to_string(failures) + " operator-algebra failures");
}

void criterion_7(Criterion& c) {
  std::vector<std::string> names = catalog_names();
  names.push_back("product(dotti-fino-8,flat-hk-4)");
  names.push_back("product(dotti-fino-8,-flat-hk-4)");
  for (const auto& name : names) {
    const auto entry = builtin_example(name);
    const auto cls = classify_triple(entry.forms[0], entry.forms[1], entry.forms[2]);
    for (int i = 0; i < 3; ++i) {
      if (cls.squares[i] == 0) continue;
      if (!entry.algebra.nijenhuis(cls.operators[i]).is_zero())
        c.require(false, name + ": Nijenhuis of A" + std::to_string(i + 1) + " is nonzero");
    }
  }
}

void criterion_8(Criterion& c) {
  for (const char* file : {"t2-family.json", "t4-pair-family.json"}) {
    const std::string path = (g_data / file).string();
    const auto r = spawn("moser-flow '" + path + "'");
    c.require(r.exit_code == 0, std::string(file) + ": exit code " +
                                    std::to_string(r.exit_code));
    const double err_w = parse_value_after(r.output, "max-pullback-omega: ");
    const double err_h = parse_value_after(r.output, "max-pullback-eta: ");
    c.require(err_w < 1e-6, std::string(file) + ": omega pullback error " +
                                std::to_string(err_w) + " >= 1e-6");
    c.require(err_h < 1e-6, std::string(file) + ": eta pullback error " +
                                std::to_string(err_h) + " >= 1e-6");
    const auto study = spawn("convergence-study '" + path + "' --halvings 1");
    c.require(study.exit_code == 0,
              std::string(file) + ": convergence study exit " +
                  std::to_string(study.exit_code));
    c.require(contains(study.output, "check fourth-order decay at level 0 (ratio >= 12): ok"),
              std::string(file) + ": step halving does not reduce the error 12x");
  }
  // foliation blocks on the T^4 family
  const auto r4 = spawn("moser-flow '" + (g_data / "t4-pair-family.json").string() + "'");
  const auto pos = r4.output.find("t=1 ");
  c.require(pos != std::string::npos, "missing t=1 checkpoint");
  const double offblock = parse_value_after(r4.output.substr(pos), "offblock ");
  c.require(offblock < 1e-6,
            "foliation blocks drift: " + std::to_string(offblock) + " >= 1e-6");
}

void criterion_9(Criterion& c) {
  const auto r84 = spawn("verify-example 'product(dotti-fino-8,flat-hk-4)'");
  c.require(r84.exit_code == 0, "(8,4) product exit " + std::to_string(r84.exit_code));
  c.require(contains(r84.output, "signature: (8,4,0)"), "missing signature (8,4,0)");
  const auto r48 = spawn("verify-example 'product(dotti-fino-8,-flat-hk-4)'");
  c.require(r48.exit_code == 0, "(4,8) product exit " + std::to_string(r48.exit_code));
  c.require(contains(r48.output, "signature: (4,8,0)"), "missing signature (4,8,0)");
  c.require(contains(r48.output, "signature-display: (8,4)"), "missing display signature");
}

void criterion_10(Criterion& c) {
  // (a) malformed rational
  const fs::path bad_rational = g_tmp / "bad-rational.json";
  std::ofstream(bad_rational) << R"({"mode":"pair","dimension":4,
    "forms":[[[1,2,"1/0"]],[[1,2,"1"],[3,4,"1"]]]})";
  auto r = spawn("classify-pair '" + bad_rational.string() + "'");
  c.require(r.exit_code == 1, "1/0 coefficient: exit " + std::to_string(r.exit_code));
  c.require(contains(r.output, "zero denominator"), "1/0 not named in the error");

  // (b) Jacobi violation, with the offending triple named
  const fs::path bad_jacobi = g_tmp / "bad-jacobi.json";
  std::ofstream(bad_jacobi) << R"({"mode":"pair","dimension":3,
    "algebra":[[1,2,1,"1"],[1,3,2,"1"]],"forms":[[],[]]})";
  r = spawn("classify-pair '" + bad_jacobi.string() + "'");
  c.require(r.exit_code == 1, "non-Jacobi algebra: exit " + std::to_string(r.exit_code));
  c.require(contains(r.output, "Jacobi identity fails on (e1,e2,e3)"),
            "offending Jacobi triple not reported");

  // (c) scaled form: Generic classification, exit 2
  const fs::path scaled = g_tmp / "scaled-triple.json";
  std::ofstream(scaled) << R"({"mode":"triple","dimension":8,
    "forms":[
      [[1,8,"-1"],[2,7,"-1"],[3,6,"1"],[4,5,"-1"]],
      [[1,7,"1"],[2,8,"-1"],[3,5,"-1"],[4,6,"-1"]],
      [[1,6,"-2"],[2,5,"2"],[3,8,"-2"],[4,7,"-2"]]]})";
  r = spawn("classify-triple '" + scaled.string() + "'");
  c.require(r.exit_code == 2, "scaled triple: exit " + std::to_string(r.exit_code));
  c.require(contains(r.output, "classification: Generic"), "scaled triple not Generic");

  // (d) mismatched primitives: the flow refuses to run
  const fs::path mismatched = g_tmp / "mismatched-flow.json";
  std::ofstream(mismatched) << R"({"mode":"flow","dimension":4,
    "omega":{"base":[[1,2,0.5],[3,4,0.5]],
             "primitive":[{"component":2,"freq":[1,0,0,0],"sin":0.5}]},
    "eta":{"base":[[1,2,0.5],[3,4,-0.5]],
           "primitive":[{"component":2,"freq":[1,0,0,0],"sin":1.0}]},
    "params":{"epsilon":0.05,"steps":40,"samples":8,"seed":1}})";
  r = spawn("moser-flow '" + mismatched.string() + "'");
  c.require(r.exit_code == 1, "mismatched primitives: exit " + std::to_string(r.exit_code));
  c.require(contains(r.output, "intertwining residual"), "residual not reported");

  // (e) sign-flipped operator fails the complex kernel check (library level)
  const auto flat = builtin_example("flat-hk-4");
  const auto cls = classify_pair(flat.forms[0], flat.forms[1]);
  c.require(cls.tag == PairTag::HolomorphicSymplectic, "flat pair misclassified");
  c.require(!complex_kernel_check(flat.forms[0], flat.forms[1], -cls.a),
            "sign-flipped operator passes the kernel check");

  // (f) unknown catalog name
  r = spawn("verify-example no-such-example");
  c.require(r.exit_code == 1, "unknown example: exit " + std::to_string(r.exit_code));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <path-to-recop-cli> <data-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_data = argv[2];
  g_tmp = fs::temp_directory_path() / "recop-acceptance";
  fs::create_directories(g_tmp);

  run_criterion(1, "Dotti-Fino catalog reproduction (signature (4,4))", 1.0, criterion_1);
  run_criterion(2, "Nil3xR hypersymplectic reproduction (signature (2,2))", 1.0, criterion_2);
  run_criterion(3, "holomorphic symplectic pair reproduction (4-dim leaves)", 1.0, criterion_3);
  run_criterion(4, "symplectic triple reproduction (pairwise ranks {4,2})", 1.0, criterion_4);
  run_criterion(5, "kernel-eigenspace correspondence on 1000 random symplectic pairs", 0, criterion_5);
  run_criterion(6, "operator algebra on 1000 random pairs", 0, criterion_6);
  run_criterion(7, "Nijenhuis vanishing across the catalog", 0, criterion_7);
  run_criterion(8, "Moser flow accuracy and fourth-order convergence", 10.0, criterion_8);
  run_criterion(9, "signature combinators (8,4) and (4,8)", 1.0, criterion_9);
  run_criterion(10, "negative controls (errors and Generic outcomes)", 0, criterion_10);

  if (g_failures != 0) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
