#include "lvpoly/polynomial.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "lvpoly/errors.hpp"

namespace lvpoly {

namespace {

constexpr char kNames[kNumVars] = {'x', 'y', 'z', 'a', 'b', 't'};

Rational rational_pow(const Rational& base, int n) {
  if (n < 0) {
    if (base == 0) throw DomainError("negative power of zero");
    return rational_pow(1 / base, -n);
  }
  Rational result = 1;
  Rational b = base;
  while (n > 0) {
    if (n & 1) result *= b;
    b *= b;
    n >>= 1;
  }
  return result;
}

std::string rational_string(const Rational& q) {
  std::ostringstream out;
  out << q;
  return out.str();
}

void append_power(std::string& out, char name, int half) {
  if (half == 0) return;
  out += name;
  if (half == 2) return;
  if (half % 2 == 0) {
    out += "^" + std::to_string(half / 2);
  } else {
    out += "^(" + std::to_string(half) + "/2)";
  }
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  MPolynomial parse() {
    MPolynomial result;
    skip();
    if (at_end()) throw InputError("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      const Monomial m = monomial_part();
      result.add_term(m, sign * coefficient_part_);
      first = false;
      skip();
    }
    return result;
  }

 private:
  Monomial monomial_part() {
    coefficient_part_ = 1;
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient_part_ = BigInt(digits());
      any = true;
      skip();
    }
    Monomial m;
    while (!at_end()) {
      int v = -1;
      for (int i = 0; i < kNumVars; ++i) {
        if (peek() == kNames[i]) v = i;
      }
      if (v < 0) break;
      ++pos_;
      int half = 2;
      skip();
      if (peek() == '^') {
        ++pos_;
        skip();
        if (peek() == '(') {
          ++pos_;
          const int num = std::stoi(digits());
          skip();
          if (peek() != '/') fail("expected '/'");
          ++pos_;
          skip();
          if (digits() != "2") fail("only halves are supported");
          skip();
          if (peek() != ')') fail("expected ')'");
          ++pos_;
          half = num;
        } else {
          half = 2 * std::stoi(digits());
        }
      }
      m.half[v] += half;
      any = true;
      skip();
    }
    if (!any) fail("expected a term");
    return m;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial '" + text_ + "': " + what + " at column " + std::to_string(pos_ + 1));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  BigInt coefficient_part_;
};

}  // namespace

char var_name(Var v) { return kNames[static_cast<int>(v)]; }

// Point

void Point::set(Var v, Rational value) {
  value_[static_cast<int>(v)] = std::move(value);
  root_[static_cast<int>(v)].reset();
}

void Point::set_square(Var v, Rational root) {
  value_[static_cast<int>(v)] = root * root;
  root_[static_cast<int>(v)] = std::move(root);
}

const Rational& Point::value(Var v) const {
  const auto& val = value_[static_cast<int>(v)];
  if (!val) throw DomainError(std::string("variable ") + var_name(v) + " has no value");
  return *val;
}

Rational Point::power(Var v, int half_units) const {
  if (half_units % 2 == 0) return rational_pow(value(v), half_units / 2);
  const auto& root = root_[static_cast<int>(v)];
  if (!root) throw DomainError(std::string("half power of ") + var_name(v) + " needs a square root");
  return rational_pow(*root, half_units);
}

std::string Point::to_string() const {
  std::string out;
  for (int i = 0; i < kNumVars; ++i) {
    if (!value_[i]) continue;
    if (!out.empty()) out += ", ";
    out += kNames[i];
    out += "=" + rational_string(*value_[i]);
    if (root_[i]) out += " (root " + rational_string(*root_[i]) + ")";
  }
  return out;
}

// MPolynomial

MPolynomial::MPolynomial(long long c) {
  if (c != 0) terms_[Monomial{}] = c;
}

MPolynomial::MPolynomial(const BigInt& c) {
  if (c != 0) terms_[Monomial{}] = c;
}

MPolynomial MPolynomial::var(Var v, int power) { return var_half(v, 2 * power); }

MPolynomial MPolynomial::var_half(Var v, int half_units) {
  if (half_units < 0) throw DomainError("negative exponent");
  Monomial m;
  m[v] = half_units;
  return term(m, 1);
}

MPolynomial MPolynomial::term(const Monomial& m, const BigInt& c) {
  MPolynomial p;
  p.add_term(m, c);
  return p;
}

MPolynomial MPolynomial::parse(const std::string& text) { return Parser(text).parse(); }

void MPolynomial::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  for (int h : m.half) {
    if (h < 0) throw DomainError("negative exponent");
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MPolynomial::max_half_exponent(Var v) const {
  int best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, m[v]);
  return best;
}

MPolynomial MPolynomial::coefficient(Var v, int power) const {
  MPolynomial out;
  for (const auto& [m, c] : terms_) {
    if (m[v] != 2 * power) continue;
    Monomial rest = m;
    rest[v] = 0;
    out.add_term(rest, c);
  }
  return out;
}

BigInt MPolynomial::coefficient_sum() const {
  BigInt sum = 0;
  for (const auto& [m, c] : terms_) sum += c;
  return sum;
}

MPolynomial MPolynomial::substitute(Var v, const MPolynomial& q) const {
  std::vector<MPolynomial> powers{MPolynomial(1)};
  MPolynomial out;
  for (const auto& [m, c] : terms_) {
    if (m[v] % 2 != 0) throw DomainError(std::string("half power of ") + var_name(v) + " in substitution");
    const int k = m[v] / 2;
    while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * q);
    Monomial rest = m;
    rest[v] = 0;
    out += term(rest, c) * powers[k];
  }
  return out;
}

MPolynomial MPolynomial::substitute_reciprocal(Var v, const MPolynomial& q, int degree) const {
  std::vector<MPolynomial> powers{MPolynomial(1)};
  MPolynomial out;
  for (const auto& [m, c] : terms_) {
    if (m[v] % 2 != 0) throw DomainError(std::string("half power of ") + var_name(v) + " in substitution");
    const int k = degree - m[v] / 2;
    if (k < 0) throw DomainError("reciprocal substitution degree below an exponent");
    while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * q);
    Monomial rest = m;
    rest[v] = 0;
    out += term(rest, c) * powers[k];
  }
  return out;
}

Rational MPolynomial::evaluate(const Point& p) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = Rational(c);
    for (int i = 0; i < kNumVars; ++i) {
      if (m.half[i] != 0) t *= p.power(static_cast<Var>(i), m.half[i]);
    }
    sum += t;
  }
  return sum;
}

std::string MPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string vars;
    for (int i = 0; i < kNumVars; ++i) append_power(vars, kNames[i], m.half[i]);
    if (magnitude != 1 || vars.empty()) out += magnitude.str();
    out += vars;
    first = false;
  }
  return out;
}

MPolynomial& MPolynomial::operator+=(const MPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPolynomial& MPolynomial::operator-=(const MPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPolynomial& MPolynomial::operator*=(const MPolynomial& o) { return *this = *this * o; }

MPolynomial operator*(const MPolynomial& a, const MPolynomial& b) {
  MPolynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (int i = 0; i < kNumVars; ++i) m.half[i] = ma.half[i] + mb.half[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

MPolynomial operator-(MPolynomial a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

MPolynomial pow(const MPolynomial& p, int n) {
  if (n < 0) throw DomainError("negative polynomial power");
  MPolynomial result(1);
  MPolynomial base = p;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

// Laurent

Laurent::Laurent(long long c) {
  if (c != 0) terms_[0] = c;
}

Laurent Laurent::t_power(int k) {
  Laurent l;
  l.terms_[k] = 1;
  return l;
}

void Laurent::add_term(int k, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1 || k == 0) out += magnitude.str();
    if (k == 1) out += "t";
    if (k != 0 && k != 1) out += "t^" + std::to_string(k);
    first = false;
  }
  return out;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
  }
  return out;
}

Laurent pow(const Laurent& p, int n) {
  if (n < 0) {
    if (p.terms().size() != 1) throw DomainError("negative power of a non-monomial");
    const auto& [k, c] = *p.terms().begin();
    if (c != 1 && c != -1) throw DomainError("negative power with non-unit coefficient");
    Laurent out;
    out.add_term(-k, c);  // 1/c == c for units
    return pow(out, -n);
  }
  Laurent result(1);
  Laurent base = p;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Laurent specialize(const MPolynomial& p, const std::array<std::optional<Laurent>, kNumVars>& subs) {
  std::array<std::vector<Laurent>, kNumVars> powers;
  Laurent out;
  for (const auto& [m, c] : p.terms()) {
    Laurent term_value;
    term_value.add_term(0, c);
    for (int i = 0; i < kNumVars; ++i) {
      const int h = m.half[i];
      if (h == 0) continue;
      if (!subs[i]) throw DomainError(std::string("no substitute for ") + kNames[i]);
      if (h % 2 != 0) throw DomainError(std::string("half power of ") + kNames[i] + " in specialization");
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(Laurent(1));
      while (static_cast<int>(cache.size()) <= h / 2) cache.push_back(cache.back() * *subs[i]);
      term_value = term_value * cache[h / 2];
    }
    out += term_value;
  }
  return out;
}

}  // namespace lvpoly
