#include "recop/catalog.hpp"

#include <utility>

namespace recop {

namespace {

RForm two_form(std::size_t n, std::initializer_list<std::tuple<int, int, int>> terms) {
  RForm f(n, 2);
  for (const auto& [i, j, c] : terms) f.add_term({i, j}, Rational(c));
  return f;
}

LieAlgebra validated(std::size_t n, const std::vector<BracketEntry>& entries) {
  auto v = LieAlgebra::validate(n, entries);
  if (!v.valid()) throw Error("internal error: builtin algebra failed validation");
  return *std::move(v.algebra);
}

ExampleCatalogEntry dotti_fino_8() {
  ExampleCatalogEntry e{
      "dotti-fino-8",
      // [e1,e3] = -[e2,e4] = e7, [e1,e4] = [e2,e3] = e8
      validated(8, {{1, 3, 7, Rational(1)},
                    {2, 4, 7, Rational(-1)},
                    {1, 4, 8, Rational(1)},
                    {2, 3, 8, Rational(1)}}),
      {
          // w1 = e8^e1 + e7^e2 - e6^e3 + e5^e4
          two_form(8, {{1, 8, -1}, {2, 7, -1}, {3, 6, 1}, {4, 5, -1}}),
          // w2 = e8^e2 - e7^e1 + e6^e4 + e5^e3
          two_form(8, {{2, 8, -1}, {1, 7, 1}, {4, 6, -1}, {3, 5, -1}}),
          // w3 = e8^e3 + e7^e4 + e6^e1 - e5^e2
          two_form(8, {{3, 8, -1}, {4, 7, -1}, {1, 6, -1}, {2, 5, 1}}),
      },
      TripleTag::HyperholomorphicSymplectic,
      Signature{4, 4, 0},
  };
  return e;
}

ExampleCatalogEntry nil3xr() {
  ExampleCatalogEntry e{
      "nil3xR",
      // da3 = a1^a2 dualizes to [e1,e2] = -e3 under da(X,Y) = -a([X,Y])
      validated(4, {{1, 2, 3, Rational(-1)}}),
      {
          // w1 = a3^a1 + a2^a4
          two_form(4, {{1, 3, -1}, {2, 4, 1}}),
          // w2 = a3^a2 - a1^a4
          two_form(4, {{2, 3, -1}, {1, 4, -1}}),
          // w3 = a3^a2 + a1^a4
          two_form(4, {{2, 3, -1}, {1, 4, 1}}),
      },
      TripleTag::Hypersymplectic,
      Signature{2, 2, 0},
  };
  return e;
}

ExampleCatalogEntry hsp_8() {
  ExampleCatalogEntry e = dotti_fino_8();
  e.name = "hsp-8";
  // replace the third form by e8^e2 - e7^e1 - e6^e4 - e5^e3
  e.forms[2] = two_form(8, {{2, 8, -1}, {1, 7, 1}, {4, 6, 1}, {3, 5, 1}});
  e.expected_tag = TripleTag::HolomorphicSymplecticPair;
  e.expected_signature.reset();
  return e;
}

ExampleCatalogEntry triple_6() {
  const RForm eta1 = two_form(6, {{1, 2, 1}});
  const RForm eta2 = two_form(6, {{3, 4, 1}});
  const RForm eta3 = two_form(6, {{5, 6, 1}});
  ExampleCatalogEntry e{
      "triple-6",
      LieAlgebra::abelian(6),
      {eta1 + eta2 + eta3, eta1 + eta2 - eta3, eta1 - eta2 - eta3},
      TripleTag::SymplecticTriple,
      std::nullopt,
  };
  return e;
}

ExampleCatalogEntry flat_hk_4() {
  ExampleCatalogEntry e{
      "flat-hk-4",
      LieAlgebra::abelian(4),
      {
          two_form(4, {{1, 2, 1}, {3, 4, 1}}),   // e1^e2 + e3^e4
          two_form(4, {{1, 3, 1}, {2, 4, -1}}),  // e1^e3 + e4^e2
          two_form(4, {{1, 4, 1}, {2, 3, 1}}),   // e1^e4 + e2^e3
      },
      TripleTag::HyperholomorphicSymplectic,
      Signature{4, 0, 0},  // g = Id from slot 1: the flat hyper-Kaehler case
  };
  return e;
}

std::vector<std::string> split_factors(const std::string& args) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char ch : args) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  out.push_back(current);
  return out;
}

std::string trimmed(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t");
  const auto end = s.find_last_not_of(" \t");
  if (begin == std::string::npos) return "";
  return s.substr(begin, end - begin + 1);
}

RForm shifted_sum(const RForm& a, const RForm& b) {
  const std::size_t n = a.dimension() + b.dimension();
  RForm out(n, 2);
  for (const auto& [tuple, c] : a.sorted_terms()) out.add_term(tuple, c);
  for (const auto& [tuple, c] : b.sorted_terms()) {
    std::vector<int> shifted = tuple;
    for (int& i : shifted) i += static_cast<int>(a.dimension());
    out.add_term(shifted, c);
  }
  return out;
}

ExampleCatalogEntry product_entry(const std::string& name, const std::string& args) {
  std::vector<ExampleCatalogEntry> factors;
  for (const std::string& raw : split_factors(args)) {
    std::string factor = trimmed(raw);
    bool negate = false;
    if (!factor.empty() && factor[0] == '-') {
      negate = true;
      factor = trimmed(factor.substr(1));
    }
    ExampleCatalogEntry entry = builtin_example(factor);
    if (entry.expected_tag != TripleTag::HyperholomorphicSymplectic)
      throw Error("product() supports hyperholomorphic factors only, got '" + factor + "'");
    if (negate) {
      for (auto& f : entry.forms) f = -f;
      std::swap(entry.expected_signature->positive, entry.expected_signature->negative);
    }
    factors.push_back(std::move(entry));
  }
  if (factors.size() < 2) throw Error("product() needs at least two factors");
  ExampleCatalogEntry out = factors[0];
  out.name = name;
  for (std::size_t i = 1; i < factors.size(); ++i) {
    out.algebra = LieAlgebra::direct_sum(out.algebra, factors[i].algebra);
    for (int j = 0; j < 3; ++j) out.forms[j] = shifted_sum(out.forms[j], factors[i].forms[j]);
    out.expected_signature->positive += factors[i].expected_signature->positive;
    out.expected_signature->negative += factors[i].expected_signature->negative;
  }
  return out;
}

}  // namespace

ExampleCatalogEntry builtin_example(const std::string& raw_name) {
  const std::string name = trimmed(raw_name);
  if (name == "dotti-fino-8") return dotti_fino_8();
  if (name == "nil3xR") return nil3xr();
  if (name == "hsp-8") return hsp_8();
  if (name == "triple-6") return triple_6();
  if (name == "flat-hk-4") return flat_hk_4();
  if (name.rfind("product(", 0) == 0 && name.back() == ')')
    return product_entry(name, name.substr(8, name.size() - 9));
  throw Error("unknown catalog example '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"dotti-fino-8", "nil3xR", "hsp-8", "triple-6", "flat-hk-4"};
}

}  // namespace recop
