#include <algorithm>
#include <sstream>

#include "serre/exactmath.hpp"

namespace serre::exact {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::x() { return IntPolynomial{0, 1}; }

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Integer IntPolynomial::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }

const Integer& IntPolynomial::leading() const {
  if (c_.empty()) throw InvalidInput("leading coefficient of the zero polynomial");
  return c_.back();
}

Integer IntPolynomial::eval(const Integer& t) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= t.mpz();
    acc += it->mpz();
  }
  return Integer(acc);
}

Integer IntPolynomial::eval_homogeneous(const Integer& a, const Integer& b) const {
  // sum c_i a^i b^(deg - i), by Horner in a with running powers of b.
  mpz_class acc = 0;
  mpz_class bpow = 1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= a.mpz();
    acc += it->mpz() * bpow;
    bpow *= b.mpz();
  }
  return Integer(acc);
}

Rational IntPolynomial::eval(const Rational& t) const {
  if (c_.empty()) return Rational(0);
  const Integer n = eval_homogeneous(t.num(), t.den());
  return rational_normalize(n, t.den().pow(static_cast<unsigned long>(degree())));
}

Integer IntPolynomial::content() const {
  Integer g(0);
  for (const auto& c : c_) g = gcd(g, c);
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (c_.empty()) return {};
  Integer g = content();
  if (leading().sign() < 0) g = -g;
  return divided_exact(g);
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial result = constant(Integer(1));
  IntPolynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

IntPolynomial IntPolynomial::scaled(const Integer& s) const {
  std::vector<Integer> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c * s);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divided_exact(const Integer& s) const {
  std::vector<Integer> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(exact_div(c, s));
  return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> acc(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i].mpz() * b.c_[j].mpz();
  }
  std::vector<Integer> out;
  out.reserve(acc.size());
  for (auto& v : acc) out.emplace_back(v);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const { return scaled(Integer(-1)); }

std::string IntPolynomial::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const Integer mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (!mag.is_one() || i == 0) os << mag;
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw InvalidInput("pseudo-remainder by the zero polynomial");
  if (f.degree() < g.degree()) return f;
  std::vector<mpz_class> r;
  r.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) r.push_back(c.mpz());
  const int dg = g.degree();
  const mpz_class& lg = g.leading().mpz();
  for (int d = f.degree(); d >= dg; --d) {
    const mpz_class lr = r[static_cast<std::size_t>(d)];
    for (auto& c : r) c *= lg;
    if (sgn(lr) != 0) {
      for (int i = 0; i <= dg; ++i) r[static_cast<std::size_t>(d - dg + i)] -= lr * g.coeffs()[static_cast<std::size_t>(i)].mpz();
    }
  }
  std::vector<Integer> out;
  out.reserve(r.size());
  for (auto& c : r) out.emplace_back(c);
  return IntPolynomial(std::move(out));
}

Integer poly_resultant(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) throw InvalidInput("resultant with the zero polynomial");

  IntPolynomial a = f;
  IntPolynomial b = g;
  int sign = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -1;
  }
  if (b.degree() == 0) {
    return b.leading().pow(static_cast<unsigned long>(a.degree())) * Integer(sign);
  }

  const Integer ca = a.content();
  const Integer cb = b.content();
  a = a.divided_exact(ca);
  b = b.divided_exact(cb);
  const Integer scale = ca.pow(static_cast<unsigned long>(b.degree())) * cb.pow(static_cast<unsigned long>(a.degree()));

  Integer gg(1);
  Integer h(1);
  for (;;) {
    const int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
    IntPolynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return Integer(0);
    b = r.divided_exact(gg * h.pow(static_cast<unsigned long>(delta)));
    gg = a.leading();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = gg;
    } else {
      h = exact_div(gg.pow(static_cast<unsigned long>(delta)), h.pow(static_cast<unsigned long>(delta - 1)));
    }
    if (b.degree() == 0) {
      const int da = a.degree();
      // h <- h^(1 - da) * lc(b)^da
      Integer last = b.leading().pow(static_cast<unsigned long>(da));
      if (da >= 1) {
        last = exact_div(last, h.pow(static_cast<unsigned long>(da - 1)));
      }
      return last * scale * Integer(sign);
    }
  }
}

}  // namespace serre::exact
