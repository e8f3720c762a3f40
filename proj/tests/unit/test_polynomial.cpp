#include <doctest.h>

#include "lvpoly/errors.hpp"
#include "lvpoly/polynomial.hpp"

using namespace lvpoly;

namespace {

const MPolynomial x = MPolynomial::var(Var::x);
const MPolynomial y = MPolynomial::var(Var::y);
const MPolynomial z = MPolynomial::var(Var::z);

}  // namespace

TEST_CASE("canonical text") {
  CHECK((1 + 3 * z + 2 * z * z + x * z * z).to_string() == "1 + 3z + 2z^2 + xz^2");
  CHECK((y + x + y * y).to_string() == "y + y^2 + x");
  CHECK(MPolynomial().to_string() == "0");
  CHECK((x - 2 * y).to_string() == "-2y + x");
  CHECK((MPolynomial::var_half(Var::a, 1) + MPolynomial::var_half(Var::b, 3)).to_string() == "b^(3/2) + a^(1/2)");
}

TEST_CASE("parse and print round trip") {
  for (const std::string text : {"1 + 3z + 2z^2 + xz^2", "y + y^2 + x", "0", "-2y + x", "b^(3/2) + a^(1/2)",
                                 "3 + 3b + a + xb", "-1 + 123456789012345678901234567890x^3y^2t"}) {
    CHECK(MPolynomial::parse(text).to_string() == text);
  }
  CHECK(MPolynomial::parse("x + y") == x + y);
  CHECK(MPolynomial::parse("2xy^2") == 2 * x * y * y);
  CHECK_THROWS_AS(MPolynomial::parse("x +"), InputError);
  CHECK_THROWS_AS(MPolynomial::parse("q"), InputError);
}

TEST_CASE("arithmetic") {
  const MPolynomial p = x + y;
  CHECK(pow(p, 2) == x * x + 2 * x * y + y * y);
  CHECK(pow(p, 0) == MPolynomial(1));
  CHECK((p - p).is_zero());
  CHECK(-(x - y) == y - x);
  const MPolynomial big = pow(MPolynomial(10), 30);
  CHECK(big.to_string() == "1000000000000000000000000000000");
  CHECK(pow(1 + x, 5).coefficient_sum() == 32);
}

TEST_CASE("coefficients and exponents") {
  const MPolynomial l = 1 + 3 * z + 2 * z * z + x * z * z;
  CHECK(l.max_half_exponent(Var::z) == 4);
  CHECK(l.coefficient(Var::z, 2) == 2 + x);
  CHECK(l.coefficient(Var::z, 0) == MPolynomial(1));
  CHECK(l.coefficient(Var::y, 0) == l);
}

TEST_CASE("substitution") {
  const MPolynomial p = x * x + y;
  CHECK(p.substitute(Var::x, y + 1) == y * y + 3 * y + 1);
  // q^2 * P(x = 1/q) for P = x^2 + y is 1 + y q^2
  CHECK(p.substitute_reciprocal(Var::x, z, 2) == 1 + y * z * z);
  CHECK_THROWS(MPolynomial::var_half(Var::a, 1).substitute(Var::a, x));
}

TEST_CASE("exact evaluation with half powers") {
  Point pt;
  pt.set(Var::x, Rational(3, 2));
  pt.set_square(Var::a, Rational(2, 3));
  const MPolynomial p = x * x + MPolynomial::var_half(Var::a, 3);
  CHECK(p.evaluate(pt) == Rational(9, 4) + Rational(8, 27));
  CHECK(pt.power(Var::x, -4) == Rational(4, 9));
  CHECK(pt.power(Var::a, 1) == Rational(2, 3));
  Point zero;
  zero.set(Var::x, 0);
  CHECK_THROWS_AS(zero.power(Var::x, -2), DomainError);
  CHECK_THROWS(pt.power(Var::x, 1));
}

TEST_CASE("Laurent polynomials") {
  const Laurent t = Laurent::t_power(1);
  const Laurent inv = Laurent::t_power(-1);
  CHECK(t * inv == Laurent(1));
  CHECK(pow(t + 1, 2).to_string() == "1 + 2t + t^2");
  CHECK(pow(t, -2) == Laurent::t_power(-2));
  CHECK(pow(Laurent(-1) * t, -1) == Laurent(-1) * inv);
  CHECK_THROWS(pow(t + 1, -1));

  std::array<std::optional<Laurent>, kNumVars> subs;
  subs[static_cast<int>(Var::x)] = t + 1;
  subs[static_cast<int>(Var::y)] = t;
  subs[static_cast<int>(Var::z)] = inv;
  const MPolynomial r = 1 + y + x + y * z * z;
  CHECK(specialize(r, subs) == Laurent(2) + t + t + inv);
}
