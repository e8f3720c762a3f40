#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lvpoly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Var : int { x = 0, y, z, a, b, t };
inline constexpr int kNumVars = 6;

char var_name(Var v);

/// Exponent vector in half units: entry 2 means the first power.
struct Monomial {
  std::array<int, kNumVars> half{};

  int& operator[](Var v) { return half[static_cast<int>(v)]; }
  int operator[](Var v) const { return half[static_cast<int>(v)]; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Evaluation point. A variable set through set_square also knows a square
/// root, which lets half-integer powers evaluate exactly.
class Point {
 public:
  void set(Var v, Rational value);
  void set_square(Var v, Rational root);

  const Rational& value(Var v) const;
  /// v^(half_units / 2); negative powers need a nonzero value.
  Rational power(Var v, int half_units) const;
  std::string to_string() const;

 private:
  std::array<std::optional<Rational>, kNumVars> value_;
  std::array<std::optional<Rational>, kNumVars> root_;
};

/// Sparse polynomial with big-integer coefficients and nonnegative
/// half-integer exponents.
class MPolynomial {
 public:
  using Terms = std::map<Monomial, BigInt>;

  MPolynomial() = default;
  MPolynomial(long long c);  // NOLINT: constants convert implicitly
  MPolynomial(const BigInt& c);

  static MPolynomial var(Var v, int power = 1);
  static MPolynomial var_half(Var v, int half_units);
  static MPolynomial term(const Monomial& m, const BigInt& c);
  /// Reads the to_string format, e.g. "1 + 3z - 2x^2a^(1/2)".
  static MPolynomial parse(const std::string& text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Monomial& m, const BigInt& c);

  /// Largest exponent of v in half units; 0 for the zero polynomial.
  int max_half_exponent(Var v) const;
  /// Coefficient of v^power as a polynomial free of v.
  MPolynomial coefficient(Var v, int power) const;
  BigInt coefficient_sum() const;

  /// Replaces v by q; every exponent of v must be integral.
  MPolynomial substitute(Var v, const MPolynomial& q) const;
  /// Sum over terms c * v^k of c * q^(degree - k), i.e. q^degree * P(v = 1/q)
  /// with the negative powers cleared. Requires degree >= every k.
  MPolynomial substitute_reciprocal(Var v, const MPolynomial& q, int degree) const;

  Rational evaluate(const Point& p) const;

  /// Terms in increasing lexicographic order of (x, y, z, a, b, t)
  /// exponents, e.g. "1 + 3z + 2z^2 + xz^2".
  std::string to_string() const;

  MPolynomial& operator+=(const MPolynomial& o);
  MPolynomial& operator-=(const MPolynomial& o);
  MPolynomial& operator*=(const MPolynomial& o);
  friend MPolynomial operator+(MPolynomial a, const MPolynomial& b) { return a += b; }
  friend MPolynomial operator-(MPolynomial a, const MPolynomial& b) { return a -= b; }
  friend MPolynomial operator*(const MPolynomial& a, const MPolynomial& b);
  friend MPolynomial operator-(MPolynomial a);
  friend bool operator==(const MPolynomial&, const MPolynomial&) = default;

 private:
  Terms terms_;
};

MPolynomial pow(const MPolynomial& p, int n);

/// Univariate Laurent polynomial in t.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long long c);  // NOLINT
  static Laurent t_power(int k);

  const std::map<int, BigInt>& terms() const { return terms_; }
  void add_term(int k, const BigInt& c);
  std::string to_string() const;

  Laurent& operator+=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent&, const Laurent&) = default;

 private:
  std::map<int, BigInt> terms_;
};

Laurent pow(const Laurent& p, int n);

/// Substitutes a Laurent polynomial for every variable that occurs in p;
/// occurring variables must have integral exponents and a substitute.
Laurent specialize(const MPolynomial& p, const std::array<std::optional<Laurent>, kNumVars>& subs);

}  // namespace lvpoly
