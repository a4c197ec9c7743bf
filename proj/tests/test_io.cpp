#include <doctest.h>

#include "recop/catalog.hpp"
#include "recop/document.hpp"
#include "recop/driver.hpp"

#include <string>

using namespace recop;

namespace {

std::string data_path(const std::string& name) {
  return std::string(RECOP_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("shipped catalog file parses and matches the builtin classification") {
  const auto doc = parse_document_file(data_path("dotti-fino-8.json"));
  CHECK(doc.mode == InputDocument::Mode::Triple);
  CHECK(doc.dimension == 8);
  REQUIRE(doc.algebra.has_value());
  const auto entry = builtin_example("dotti-fino-8");
  for (int i = 0; i < 3; ++i) CHECK(doc.forms[i] == entry.forms[i]);
  const auto report = run_classify_triple(doc);
  CHECK(report.exit_code == 0);
  CHECK(report.text.find("classification: HyperholomorphicSymplectic") != std::string::npos);
  CHECK(report.text.find("signature: (4,4,0)") != std::string::npos);
}

TEST_CASE("every shipped exact-mode file classifies as designed") {
  struct Expectation {
    const char* file;
    const char* line;
    int exit_code;
  };
  for (const Expectation& e : {
           Expectation{"nil3xr.json", "classification: Hypersymplectic", 0},
           Expectation{"hsp-8.json", "classification: HolomorphicSymplecticPair", 0},
           Expectation{"triple-6.json", "classification: SymplecticTriple", 0},
           Expectation{"flat-hk-4.json", "classification: HyperholomorphicSymplectic", 0},
       }) {
    const auto report = run_classify_triple(parse_document_file(data_path(e.file)));
    CHECK(report.exit_code == e.exit_code);
    CHECK(report.text.find(e.line) != std::string::npos);
  }
  const auto pair = run_classify_pair(parse_document_file(data_path("pair-symplectic-4.json")));
  CHECK(pair.exit_code == 0);
  CHECK(pair.text.find("classification: SymplecticPair") != std::string::npos);
  const auto holo = run_classify_pair(parse_document_file(data_path("pair-holomorphic-4.json")));
  CHECK(holo.exit_code == 0);
  CHECK(holo.text.find("classification: HolomorphicSymplectic") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
  const auto doc1 = parse_document_file(data_path("nil3xr.json"));
  const auto doc2 = parse_document_file(data_path("nil3xr.json"));
  CHECK(doc1.input_hash == doc2.input_hash);
  CHECK(run_classify_triple(doc1).text == run_classify_triple(doc2).text);
  CHECK(run_verify_example("dotti-fino-8").text == run_verify_example("dotti-fino-8").text);
}

TEST_CASE("zero denominators are parse errors") {
  const std::string text = R"({
    "mode": "pair", "dimension": 4,
    "forms": [[[1, 2, "1/0"]], [[1, 2, "1"], [3, 4, "1"]]]
  })";
  CHECK_THROWS_AS(parse_document(text), DocumentError);
  try {
    parse_document(text);
  } catch (const DocumentError& e) {
    REQUIRE(e.violations.size() == 1);
    CHECK(e.violations[0].find("zero denominator") != std::string::npos);
  }
}

TEST_CASE("all violations are collected, with locations") {
  const std::string text = R"({
    "mode": "pair", "dimension": 4,
    "forms": [
      [[1, 9, "1"], [2, 1, "1"], [1, 2, "x"]],
      [[1, 2, "1"], [1, 2, "2"]]
    ]
  })";
  try {
    parse_document(text);
    FAIL("expected DocumentError");
  } catch (const DocumentError& e) {
    REQUIRE(e.violations.size() == 4);
    CHECK(e.violations[0].find("forms[0][0]") != std::string::npos);  // out of range
    CHECK(e.violations[1].find("i < j") != std::string::npos);
    CHECK(e.violations[2].find("malformed rational") != std::string::npos);
    CHECK(e.violations[3].find("duplicate term") != std::string::npos);
  }
}

TEST_CASE("float coefficients are rejected in exact mode") {
  const std::string text = R"({
    "mode": "pair", "dimension": 2,
    "forms": [[[1, 2, 0.5]], [[1, 2, "1"]]]
  })";
  try {
    parse_document(text);
    FAIL("expected DocumentError");
  } catch (const DocumentError& e) {
    CHECK(e.violations[0].find("contaminate") != std::string::npos);
  }
}

TEST_CASE("Jacobi failures surface with the offending triple") {
  const std::string text = R"({
    "mode": "pair", "dimension": 3,
    "algebra": [[1, 2, 1, "1"], [1, 3, 2, "1"]],
    "forms": [[], []]
  })";
  try {
    parse_document(text);
    FAIL("expected DocumentError");
  } catch (const DocumentError& e) {
    bool found = false;
    for (const auto& v : e.violations)
      if (v.find("Jacobi") != std::string::npos && v.find("(e1,e2,e3)") != std::string::npos)
        found = true;
    CHECK(found);
  }
}

TEST_CASE("flow documents validate their parameters") {
  const auto doc = parse_document_file(data_path("t2-family.json"));
  CHECK(doc.mode == InputDocument::Mode::Flow);
  CHECK(doc.params.epsilon == 0.05);
  CHECK(doc.params.steps == 200);
  CHECK(doc.params.samples == 64);
  REQUIRE(doc.family.has_value());
  CHECK(doc.family->omega.closedness_residual() < 1e-12);

  const std::string bad_steps = R"({
    "mode": "flow", "dimension": 2,
    "omega": {"base": [[1, 2, 1.0]], "primitive": []},
    "eta": {"base": [[1, 2, 1.0]], "primitive": []},
    "params": {"steps": 30}
  })";
  CHECK_THROWS_AS(parse_document(bad_steps), DocumentError);

  const std::string bad_blocks = R"({
    "mode": "flow", "dimension": 4,
    "omega": {"base": [[1, 2, 1.0], [3, 4, 1.0]], "primitive": []},
    "eta": {"base": [[1, 2, 1.0], [3, 4, 1.0]], "primitive": []},
    "blocks": [2, 3]
  })";
  CHECK_THROWS_AS(parse_document(bad_blocks), DocumentError);
}

TEST_CASE("moser-flow and convergence-study drivers on the shipped families") {
  RunOverrides quick;
  quick.samples = 8;
  quick.steps = 40;
  const auto doc = parse_document_file(data_path("t2-family.json"));
  const auto report = run_moser_flow(doc, quick);
  CHECK(report.exit_code == 0);
  CHECK(report.text.find("checkpoint: t=1") != std::string::npos);
  CHECK(report.text.find("result: PASS") != std::string::npos);

  const auto study = run_convergence_study(doc, 1, quick);
  CHECK(study.exit_code == 0);
  CHECK(study.text.find("fourth-order decay") != std::string::npos);

  // T^4 family: the off-block Jacobian mass stays at rounding level
  const auto doc4 = parse_document_file(data_path("t4-pair-family.json"));
  const auto report4 = run_moser_flow(doc4, quick);
  CHECK(report4.exit_code == 0);
}

TEST_CASE("mode mismatches are command errors") {
  const auto pair_doc = parse_document_file(data_path("pair-symplectic-4.json"));
  CHECK_THROWS_AS(run_classify_triple(pair_doc), Error);
  const auto flow_doc = parse_document_file(data_path("t2-family.json"));
  CHECK_THROWS_AS(run_classify_pair(flow_doc), Error);
}

TEST_CASE("generic classification exits with the documented status 2") {
  const std::string text = R"({
    "mode": "pair", "dimension": 4,
    "forms": [
      [[1, 2, "1"], [3, 4, "1"]],
      [[1, 2, "1"], [3, 4, "2"]]
    ]
  })";
  const auto report = run_classify_pair(parse_document(text));
  CHECK(report.exit_code == 2);
  CHECK(report.text.find("classification: Generic") != std::string::npos);
  CHECK(report.text.find("minimal-polynomial-degree: 2") != std::string::npos);
  CHECK(report.text.find("result: GENERIC") != std::string::npos);
}
