#include "serre/exactmath.hpp"

namespace serre::exact {

Rational rational_normalize(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw InvalidInput("zero denominator");
  if (num.is_zero()) return Rational(Integer(0), Integer(1), true);
  const Integer g = gcd(num, den);
  Integer n = exact_div(num, g);
  Integer d = exact_div(den, g);
  if (d.sign() < 0) {
    n = -n;
    d = -d;
  }
  return Rational(std::move(n), std::move(d), true);
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::parse(text));
  return rational_normalize(Integer::parse(text.substr(0, slash)), Integer::parse(text.substr(slash + 1)));
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rational operator+(const Rational& a, const Rational& b) {
  return rational_normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return rational_normalize(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return rational_normalize(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw InvalidInput("division by zero");
  return rational_normalize(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::operator-() const { return Rational(-num_, den_, true); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

}  // namespace serre::exact
