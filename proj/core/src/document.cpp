#include "recop/document.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

namespace recop {

using nlohmann::json;

namespace {

struct Collector {
  std::vector<std::string> violations;

  void add(const std::string& context, const std::string& message) {
    violations.push_back(context + ": " + message);
  }
  void require(bool ok, const std::string& context, const std::string& message) {
    if (!ok) add(context, message);
  }
  void raise_if_any() {
    if (!violations.empty()) throw DocumentError(std::move(violations));
  }
};

Rational exact_coefficient(const json& value, const std::string& context, Collector& errors) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const Error& e) {
      errors.add(context, e.what());
      return Rational(0);
    }
  }
  if (value.is_number_integer()) return Rational(value.get<long long>());
  errors.add(context, "exact coefficients must be \"p/q\" strings or integers "
                      "(floats would contaminate exact mode)");
  return Rational(0);
}

std::optional<RForm> parse_form(const json& terms, std::size_t n, const std::string& context,
                                Collector& errors) {
  if (!terms.is_array()) {
    errors.add(context, "a form is an array of [i, j, coefficient] terms");
    return std::nullopt;
  }
  RForm f(n, 2);
  std::vector<std::pair<int, int>> seen;
  for (std::size_t idx = 0; idx < terms.size(); ++idx) {
    const std::string term_ctx = context + "[" + std::to_string(idx) + "]";
    const json& term = terms[idx];
    if (!term.is_array() || term.size() != 3 || !term[0].is_number_integer() ||
        !term[1].is_number_integer()) {
      errors.add(term_ctx, "expected [i, j, coefficient]");
      continue;
    }
    const int i = term[0].get<int>();
    const int j = term[1].get<int>();
    if (i < 1 || j < 1 || i > static_cast<int>(n) || j > static_cast<int>(n)) {
      errors.add(term_ctx, "index out of range [1," + std::to_string(n) + "]");
      continue;
    }
    if (i >= j) {
      errors.add(term_ctx, "form term indices must satisfy i < j");
      continue;
    }
    if (std::find(seen.begin(), seen.end(), std::make_pair(i, j)) != seen.end()) {
      errors.add(term_ctx, "duplicate term (" + std::to_string(i) + "," + std::to_string(j) + ")");
      continue;
    }
    seen.emplace_back(i, j);
    const Rational c = exact_coefficient(term[2], term_ctx, errors);
    if (c != 0) f.add_term({i, j}, c);
  }
  return f;
}

std::optional<LieAlgebra> parse_algebra(const json& brackets, std::size_t n, Collector& errors) {
  const std::size_t baseline = errors.violations.size();
  if (!brackets.is_array()) {
    errors.add("algebra", "expected an array of [i, j, k, coefficient] bracket entries");
    return std::nullopt;
  }
  std::vector<BracketEntry> entries;
  std::vector<std::array<int, 3>> seen;
  for (std::size_t idx = 0; idx < brackets.size(); ++idx) {
    const std::string ctx = "algebra[" + std::to_string(idx) + "]";
    const json& entry = brackets[idx];
    if (!entry.is_array() || entry.size() != 4 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer() || !entry[2].is_number_integer()) {
      errors.add(ctx, "expected [i, j, k, coefficient]");
      continue;
    }
    BracketEntry e;
    e.i = entry[0].get<int>();
    e.j = entry[1].get<int>();
    e.k = entry[2].get<int>();
    const std::array<int, 3> key{e.i, e.j, e.k};
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
      errors.add(ctx, "duplicate bracket entry");
      continue;
    }
    seen.push_back(key);
    e.c = exact_coefficient(entry[3], ctx, errors);
    entries.push_back(std::move(e));
  }
  if (errors.violations.size() > baseline) return std::nullopt;
  LieValidation v = LieAlgebra::validate(n, entries);
  for (const auto& err : v.errors) errors.add("algebra", err);
  return v.algebra;
}

std::optional<flow::FormFamily> parse_family(const json& block, std::size_t n, double epsilon,
                                             const std::string& context, Collector& errors) {
  const std::size_t baseline = errors.violations.size();
  if (!block.is_object()) {
    errors.add(context, "expected an object with \"base\" and \"primitive\"");
    return std::nullopt;
  }
  KForm<double> base(n, 2);
  if (block.contains("base")) {
    const json& terms = block["base"];
    if (!terms.is_array()) {
      errors.add(context + ".base", "expected an array of [i, j, number] terms");
    } else {
      for (std::size_t idx = 0; idx < terms.size(); ++idx) {
        const std::string ctx = context + ".base[" + std::to_string(idx) + "]";
        const json& term = terms[idx];
        if (!term.is_array() || term.size() != 3 || !term[0].is_number_integer() ||
            !term[1].is_number_integer() || !term[2].is_number()) {
          errors.add(ctx, "expected [i, j, number]");
          continue;
        }
        const int i = term[0].get<int>();
        const int j = term[1].get<int>();
        if (i < 1 || j < 1 || i > static_cast<int>(n) || j > static_cast<int>(n) || i >= j) {
          errors.add(ctx, "indices must satisfy 1 <= i < j <= n");
          continue;
        }
        base.add_term({i, j}, term[2].get<double>());
      }
    }
  }
  flow::OneFormField primitive(n);
  if (block.contains("primitive")) {
    const json& terms = block["primitive"];
    if (!terms.is_array()) {
      errors.add(context + ".primitive", "expected an array of term objects");
    } else {
      for (std::size_t idx = 0; idx < terms.size(); ++idx) {
        const std::string ctx = context + ".primitive[" + std::to_string(idx) + "]";
        const json& term = terms[idx];
        if (!term.is_object() || !term.contains("component") || !term.contains("freq")) {
          errors.add(ctx, "expected {component, freq, cos?, sin?, t?}");
          continue;
        }
        const int component = term["component"].get<int>();
        if (component < 1 || component > static_cast<int>(n)) {
          errors.add(ctx, "component out of range [1," + std::to_string(n) + "]");
          continue;
        }
        const json& freq_json = term["freq"];
        if (!freq_json.is_array() || freq_json.size() != n) {
          errors.add(ctx, "freq must list " + std::to_string(n) + " integers");
          continue;
        }
        std::vector<int> freq;
        bool freq_ok = true;
        for (const auto& f : freq_json) {
          if (!f.is_number_integer()) freq_ok = false;
          else freq.push_back(f.get<int>());
        }
        if (!freq_ok) {
          errors.add(ctx, "frequencies must be integers (periodicity)");
          continue;
        }
        const double cos_c = term.value("cos", 0.0) * epsilon;
        const double sin_c = term.value("sin", 0.0) * epsilon;
        const std::size_t power = term.value("t", 0);
        flow::TrigPoly p(n);
        p.add_term(freq, cos_c, sin_c);
        flow::TimePoly tp(n);
        tp.add(power, p);
        primitive.component(component - 1) =
            primitive.component(component - 1) + tp;
      }
    }
  }
  if (errors.violations.size() > baseline) return std::nullopt;
  return flow::FormFamily(std::move(base), std::move(primitive));
}

}  // namespace

DocumentError::DocumentError(std::vector<std::string> v)
    : Error([&v] {
        std::ostringstream os;
        os << "invalid input document (" << v.size() << " violation"
           << (v.size() == 1 ? "" : "s") << "):";
        for (const auto& s : v) os << "\n  - " << s;
        return os.str();
      }()),
      violations(std::move(v)) {}

std::uint64_t fnv1a_hash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

InputDocument parse_document(const std::string& text) {
  Collector errors;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    errors.add("json", e.what());
    errors.raise_if_any();
  }
  InputDocument out;
  out.input_hash = fnv1a_hash(text);

  const std::string mode = doc.value("mode", "");
  if (mode == "pair") out.mode = InputDocument::Mode::Pair;
  else if (mode == "triple") out.mode = InputDocument::Mode::Triple;
  else if (mode == "flow") out.mode = InputDocument::Mode::Flow;
  else errors.add("mode", "must be \"pair\", \"triple\" or \"flow\"");

  if (!doc.contains("dimension") || !doc["dimension"].is_number_integer()) {
    errors.add("dimension", "required integer field");
    errors.raise_if_any();
  }
  const long long n_raw = doc["dimension"].get<long long>();
  errors.require(n_raw >= 1 && n_raw <= static_cast<long long>(kMaxDimension), "dimension",
                 "must be in [1,16]");
  errors.raise_if_any();
  out.dimension = static_cast<std::size_t>(n_raw);

  if (out.mode == InputDocument::Mode::Pair || out.mode == InputDocument::Mode::Triple) {
    const std::size_t expected = out.mode == InputDocument::Mode::Pair ? 2 : 3;
    if (!doc.contains("forms") || !doc["forms"].is_array() || doc["forms"].size() != expected) {
      errors.add("forms", "expected exactly " + std::to_string(expected) + " forms");
    } else {
      for (std::size_t i = 0; i < expected; ++i) {
        auto f = parse_form(doc["forms"][i], out.dimension,
                            "forms[" + std::to_string(i) + "]", errors);
        if (f) out.forms.push_back(std::move(*f));
      }
    }
    if (doc.contains("algebra")) out.algebra = parse_algebra(doc["algebra"], out.dimension, errors);
    errors.raise_if_any();
    return out;
  }

  // flow mode
  if (doc.contains("params")) {
    const json& p = doc["params"];
    out.params.epsilon = p.value("epsilon", 1.0);
    out.params.steps = p.value("steps", std::size_t{200});
    out.params.samples = p.value("samples", std::size_t{64});
    out.params.seed = p.value("seed", std::uint64_t{1});
  }
  errors.require(out.dimension <= 8, "dimension",
                 "flow mode supports dimensions up to 8 (cohomology grid size)");
  errors.require(out.params.steps > 0 && out.params.steps % 4 == 0, "params.steps",
                 "must be a positive multiple of 4 (checkpoints at quarter times)");
  std::optional<flow::FormFamily> omega, eta;
  if (doc.contains("omega"))
    omega = parse_family(doc["omega"], out.dimension, out.params.epsilon, "omega", errors);
  else
    errors.add("omega", "required in flow mode");
  if (doc.contains("eta"))
    eta = parse_family(doc["eta"], out.dimension, out.params.epsilon, "eta", errors);
  else
    errors.add("eta", "required in flow mode");
  std::vector<std::size_t> blocks;
  if (doc.contains("blocks")) {
    std::size_t total = 0;
    for (const auto& b : doc["blocks"]) {
      if (!b.is_number_integer() || b.get<long long>() < 1) {
        errors.add("blocks", "block sizes must be positive integers");
        break;
      }
      total += b.get<std::size_t>();
      blocks.push_back(b.get<std::size_t>());
    }
    errors.require(total == out.dimension, "blocks", "block sizes must sum to the dimension");
  }
  errors.raise_if_any();
  out.family = flow::FlowFamily{std::move(*omega), std::move(*eta), std::move(blocks)};
  return out;
}

InputDocument parse_document_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

}  // namespace recop
