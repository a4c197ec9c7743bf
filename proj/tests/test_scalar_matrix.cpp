#include <doctest.h>

#include "recop/matrix.hpp"
#include "test_helpers.hpp"

#include <random>

using namespace recop;

namespace {

// independent Pfaffian oracle: signed sum over perfect matchings
Rational pfaffian_matchings(const RMatrix& m, std::vector<bool>& used) {
  std::size_t first = used.size();
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) {
      first = i;
      break;
    }
  if (first == used.size()) return Rational(1);
  used[first] = true;
  Rational total(0);
  int skipped = 0;
  for (std::size_t j = first + 1; j < used.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    const Rational sub = pfaffian_matchings(m, used);
    const Rational sign = (skipped % 2 == 0) ? Rational(1) : Rational(-1);
    total += sign * m(first, j) * sub;
    used[j] = false;
    ++skipped;
  }
  used[first] = false;
  return total;
}

Rational pfaffian_oracle(const RMatrix& m) {
  std::vector<bool> used(m.rows(), false);
  return pfaffian_matchings(m, used);
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("3/-2") == Rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(format_rational(parse_rational("6/4")) == "3/2");
  CHECK(format_rational(Rational(-8, 2)) == "-4");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("a/2"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK(rational_to_double(Rational(1, 2)) == 0.5);
}

TEST_CASE("matrix arithmetic and inverse") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const RMatrix m = testing::random_invertible(5, rng);
    const auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK((m * *inv).is_identity());
    CHECK((*inv * m).is_identity());
    CHECK(determinant(m) * determinant(*inv) == 1);
  }
  RMatrix singular(3, 3);
  singular(0, 0) = 1;
  singular(1, 0) = 2;  // rank 1
  CHECK(!inverse(singular).has_value());
  CHECK(rank(singular) == 1);
  CHECK(determinant(singular) == 0);
}

TEST_CASE("null space is the reduced-echelon parameterization") {
  RMatrix m(2, 4);
  // x1 + x3 = 0, x2 - x4 = 0
  m(0, 0) = 1;
  m(0, 2) = 1;
  m(1, 1) = 1;
  m(1, 3) = -1;
  const auto basis = null_space(m);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == RVector{Rational(-1), Rational(0), Rational(1), Rational(0)});
  CHECK(basis[1] == RVector{Rational(0), Rational(1), Rational(0), Rational(1)});
}

TEST_CASE("pfaffian of the standard symplectic matrix is 1") {
  RMatrix j2(2, 2);
  j2(0, 1) = 1;
  j2(1, 0) = -1;
  CHECK(pfaffian(j2) == 1);
  const RMatrix j4 = RMatrix::block_diag(j2, j2);
  CHECK(pfaffian(j4) == 1);
  CHECK_THROWS_AS(pfaffian(RMatrix(3, 3)), Error);
}

TEST_CASE("pfaffian elimination agrees with the matching sum and squares to det") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {2u, 4u, 6u, 8u}) {
    for (int trial = 0; trial < 10; ++trial) {
      const RMatrix m = testing::random_skew(n, rng);
      const Rational pf = pfaffian(m);
      CHECK(pf == pfaffian_oracle(m));
      CHECK(pf * pf == determinant(m));
    }
  }
}

TEST_CASE("signature basics") {
  RMatrix d(4, 4);
  d(0, 0) = 1;
  d(1, 1) = 1;
  d(2, 2) = -1;
  d(3, 3) = -1;
  CHECK(signature(d) == Signature{2, 2, 0});
  CHECK(signature(RMatrix::identity(4)) == Signature{4, 0, 0});
  CHECK(signature(RMatrix(3, 3)) == Signature{0, 0, 3});
  // hyperbolic plane: zero diagonal, off-diagonal 1
  RMatrix h(2, 2);
  h(0, 1) = 1;
  h(1, 0) = 1;
  CHECK(signature(h) == Signature{1, 1, 0});
}

TEST_CASE("signature recovers known inertia through congruence") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 25; ++trial) {
    RMatrix d(5, 5);
    Signature expected;
    for (std::size_t i = 0; i < 5; ++i) {
      const int v = entry(rng);
      d(i, i) = v;
      if (v > 0) ++expected.positive;
      else if (v < 0) ++expected.negative;
      else ++expected.zero;
    }
    const RMatrix b = testing::random_invertible(5, rng);
    CHECK(signature(b.transpose() * d * b) == expected);
  }
}

TEST_CASE("signature is a congruence invariant") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    RMatrix s = testing::random_matrix(5, 5, rng);
    s = s + s.transpose();  // symmetrize
    const RMatrix b = testing::random_invertible(5, rng);
    const Signature before = signature(s);
    const Signature after = signature(b.transpose() * s * b);
    CHECK(before == after);
    CHECK(before.positive + before.negative + before.zero == 5);
  }
}

TEST_CASE("skew and symmetric wrappers validate on construction") {
  RMatrix m(2, 2);
  m(0, 1) = 1;
  CHECK_THROWS_AS(SkewMatrix<Rational>{m}, Error);   // m(1,0) != -1
  CHECK_THROWS_AS(SymMatrix<Rational>{m}, Error);
  m(1, 0) = -1;
  CHECK_NOTHROW(SkewMatrix<Rational>{m});
  m(1, 0) = 1;
  CHECK_NOTHROW(SymMatrix<Rational>{m});
}
