#include <doctest.h>

#include "recop/catalog.hpp"
#include "recop/lie_algebra.hpp"
#include "test_helpers.hpp"

#include <random>

using namespace recop;

namespace {

LieAlgebra heisenberg_r() {
  // Heisenberg + R: [e1,e2] = e3
  auto v = LieAlgebra::validate(4, {{1, 2, 3, Rational(1)}});
  REQUIRE(v.valid());
  return *v.algebra;
}

}  // namespace

TEST_CASE("validate_lie accepts the catalog algebras and reports nilpotency") {
  auto abelian = LieAlgebra::validate(4, {});
  CHECK(abelian.valid());
  CHECK(abelian.nilpotency_step == 1);

  auto dotti = LieAlgebra::validate(8, {{1, 3, 7, Rational(1)},
                                        {2, 4, 7, Rational(-1)},
                                        {1, 4, 8, Rational(1)},
                                        {2, 3, 8, Rational(1)}});
  CHECK(dotti.valid());
  CHECK(dotti.nilpotency_step == 2);

  auto heis = LieAlgebra::validate(4, {{1, 2, 3, Rational(1)}});
  CHECK(heis.valid());
  CHECK(heis.nilpotency_step == 2);
}

TEST_CASE("validate_lie reports antisymmetry and Jacobi violations") {
  auto self = LieAlgebra::validate(3, {{1, 1, 2, Rational(1)}});
  CHECK(!self.valid());
  REQUIRE(!self.errors.empty());
  CHECK(self.errors[0].find("antisymmetry") != std::string::npos);

  auto inconsistent = LieAlgebra::validate(3, {{1, 2, 3, Rational(1)}, {2, 1, 3, Rational(1)}});
  CHECK(!inconsistent.valid());

  // [e1,e2] = e1 with [e1,e3] = e2 breaks Jacobi on (e1,e2,e3)
  auto bad = LieAlgebra::validate(3, {{1, 2, 1, Rational(1)}, {1, 3, 2, Rational(1)}});
  CHECK(!bad.valid());
  REQUIRE(!bad.jacobi_violations.empty());
  CHECK(bad.jacobi_violations[0].triple == std::array<int, 3>{1, 2, 3});

  // [e1,e2] = e2 is solvable, not nilpotent: valid but step 0
  auto solvable = LieAlgebra::validate(2, {{1, 2, 2, Rational(1)}});
  CHECK(solvable.valid());
  CHECK(solvable.nilpotency_step == 0);
}

TEST_CASE("Chevalley-Eilenberg differential reproduces the structure equations") {
  const auto entry = builtin_example("dotti-fino-8");
  const LieAlgebra& g = entry.algebra;

  // de7 = -e1^e3 + e2^e4
  RForm expected_de7(8, 2);
  expected_de7.add_term({1, 3}, Rational(-1));
  expected_de7.add_term({2, 4}, Rational(1));
  CHECK(g.ce_differential(RForm::basis(8, {7})) == expected_de7);

  // de8 = -e1^e4 - e2^e3
  RForm expected_de8(8, 2);
  expected_de8.add_term({1, 4}, Rational(-1));
  expected_de8.add_term({2, 3}, Rational(-1));
  CHECK(g.ce_differential(RForm::basis(8, {8})) == expected_de8);

  // e1..e6 closed
  for (int i = 1; i <= 6; ++i) CHECK(g.is_closed(RForm::basis(8, {i})));
  CHECK(!g.is_closed(RForm::basis(8, {7})));

  // da3 = a1^a2 on Nil3 x R
  const auto nil = builtin_example("nil3xR");
  CHECK(nil.algebra.ce_differential(RForm::basis(4, {3})) == RForm::basis(4, {1, 2}));
}

TEST_CASE("catalog forms are closed, abelian closes everything") {
  const auto entry = builtin_example("dotti-fino-8");
  for (const auto& f : entry.forms) CHECK(entry.algebra.is_closed(f));

  std::mt19937_64 rng(37);
  const LieAlgebra abelian = LieAlgebra::abelian(5);
  for (int trial = 0; trial < 5; ++trial)
    CHECK(abelian.is_closed(testing::random_form(5, 2, rng)));
}

TEST_CASE("d o d = 0 on random forms over validated algebras") {
  std::mt19937_64 rng(41);
  const auto dotti = builtin_example("dotti-fino-8").algebra;
  const LieAlgebra heis = heisenberg_r();
  for (int trial = 0; trial < 10; ++trial) {
    for (std::size_t k : {1u, 2u}) {
      const RForm f8 = testing::random_form(8, k, rng);
      CHECK(dotti.ce_differential(dotti.ce_differential(f8)).is_zero());
      const RForm f4 = testing::random_form(4, k, rng);
      CHECK(heis.ce_differential(heis.ce_differential(f4)).is_zero());
    }
  }
}

TEST_CASE("Nijenhuis tensor vanishes in the integrable cases") {
  const auto dotti = builtin_example("dotti-fino-8");
  CHECK(dotti.algebra.nijenhuis(RMatrix::identity(8)).is_zero());

  // block +-Id adapted to the splitting of a symplectic pair
  const LieAlgebra heis = heisenberg_r();
  RMatrix block = RMatrix::identity(4);
  block(3, 3) = Rational(-1);
  CHECK(heis.nijenhuis(block).is_zero());

  // the catalog recursion operators
  const auto ops = triple_operators(dotti.forms[0], dotti.forms[1], dotti.forms[2]);
  for (const auto& a : ops.a) CHECK(dotti.algebra.nijenhuis(a).is_zero());
}

TEST_CASE("Nijenhuis output is antisymmetric and detects non-integrability") {
  const LieAlgebra heis = heisenberg_r();
  std::mt19937_64 rng(43);
  const RMatrix a = testing::random_matrix(4, 4, rng);
  const auto table = heis.nijenhuis(a);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      const RVector nij = table.value(i, j);
      RVector nji = table.value(j, i);
      for (auto& c : nji) c = -c;
      CHECK(nij == nji);
    }

  // a genuinely non-integrable endomorphism on the Heisenberg algebra:
  // swap e1 <-> e3; then [Ae1, Ae2] = [e3, e2] = 0 but A^2[e1,e2] = e3 and
  // the mixed terms cancel, leaving N(e1,e2) = e3 - A[e3,e2] - A[e1,Ae2]...
  RMatrix swap = RMatrix::identity(4);
  swap(0, 0) = 0;
  swap(2, 2) = 0;
  swap(0, 2) = 1;
  swap(2, 0) = 1;
  CHECK(!heis.nijenhuis(swap).is_zero());
}

TEST_CASE("subalgebra checks") {
  const LieAlgebra abelian = LieAlgebra::abelian(4);
  const auto span12 = Subspace::from_vectors(4, {unit_vector(4, 1), unit_vector(4, 2)});
  CHECK(abelian.is_subalgebra(span12));

  const LieAlgebra heis = heisenberg_r();
  CHECK(!heis.is_subalgebra(span12));  // [e1,e2] = e3 escapes
  const auto span13 = Subspace::from_vectors(4, {unit_vector(4, 1), unit_vector(4, 3)});
  CHECK(heis.is_subalgebra(span13));
}

TEST_CASE("left-invariant symplectic pairs have integrable kernels and flat Nijenhuis") {
  // (w2, w3) of the nil3xR triple is a left-invariant symplectic pair
  const auto entry = builtin_example("nil3xR");
  const auto cls = classify_pair(entry.forms[1], entry.forms[2]);
  REQUIRE(cls.tag == PairTag::SymplecticPair);
  CHECK(entry.algebra.nijenhuis(cls.a).is_zero());
  CHECK(entry.algebra.is_subalgebra(cls.symplectic_pair->d_plus));
  CHECK(entry.algebra.is_subalgebra(cls.symplectic_pair->d_minus));
  CHECK(entry.algebra.is_closed(entry.forms[1]));
  CHECK(entry.algebra.is_closed(entry.forms[2]));
}

TEST_CASE("subspace validation and canonical equality") {
  CHECK_THROWS_AS(Subspace::from_vectors(3, {unit_vector(3, 1), unit_vector(3, 1)}), Error);
  RVector sum(3, Rational(0));
  sum[0] = 1;
  sum[1] = 1;
  const auto a = Subspace::from_vectors(3, {unit_vector(3, 1), sum});
  const auto b = Subspace::from_vectors(3, {unit_vector(3, 2), unit_vector(3, 1)});
  CHECK(a == b);  // same plane, different spanning sets
  CHECK(a.contains(sum));
  CHECK(!a.contains(unit_vector(3, 3)));
}

TEST_CASE("direct sums keep brackets block-diagonal") {
  const LieAlgebra sum = LieAlgebra::direct_sum(heisenberg_r(), LieAlgebra::abelian(2));
  CHECK(sum.dimension() == 6);
  CHECK(sum.nilpotency_step() == 2);
  RVector expected(6, Rational(0));
  expected[2] = 1;
  CHECK(sum.bracket(unit_vector(6, 1), unit_vector(6, 2)) == expected);
  CHECK(sum.bracket(unit_vector(6, 5), unit_vector(6, 6)) == RVector(6, Rational(0)));
}
