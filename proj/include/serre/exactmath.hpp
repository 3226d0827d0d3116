#pragma once

// Exact arithmetic substrate: arbitrary-precision integers and rationals,
// dense integer polynomials with subresultant resultants, and the small
// prime / residue-symbol toolkit used throughout.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "serre/errors.hpp"

namespace serre::exact {

/// Signed arbitrary-precision integer. Immutable value type; every
/// operation returns a fresh value.
class Integer {
 public:
  Integer() = default;
  Integer(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Integer(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  Integer(long long v);       // NOLINT(google-explicit-constructor)
  Integer(unsigned long long v);  // NOLINT(google-explicit-constructor)
  explicit Integer(const mpz_class& v) : v_(v) {}

  /// Parses an optionally signed decimal literal. Throws InvalidInput.
  static Integer parse(std::string_view text);

  std::string to_string() const { return v_.get_str(10); }
  const mpz_class& mpz() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
  Integer abs() const { return Integer(mpz_class(::abs(v_))); }

  bool fits_int64() const;
  /// Throws InvalidInput when the value does not fit.
  std::int64_t to_int64() const;

  /// Non-negative residue modulo m (m > 0).
  std::uint64_t mod_u64(std::uint64_t m) const;

  /// Number of bits in |this|.
  std::size_t bit_length() const;

  Integer pow(unsigned long e) const;

  friend Integer operator+(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ + b.v_)); }
  friend Integer operator-(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ - b.v_)); }
  friend Integer operator*(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ * b.v_)); }
  Integer operator-() const { return Integer(mpz_class(-v_)); }

  Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
  Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
  Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& x) { return os << x.to_string(); }

 private:
  mpz_class v_;
};

/// Quotient rounded toward negative infinity. Throws InvalidInput on b = 0.
Integer floor_div(const Integer& a, const Integer& b);
/// Remainder with the sign of b (Python-style). Throws InvalidInput on b = 0.
Integer floor_mod(const Integer& a, const Integer& b);
/// a / b where b is known to divide a. Throws InvalidInput otherwise.
Integer exact_div(const Integer& a, const Integer& b);
bool divides(const Integer& d, const Integer& n);
Integer gcd(const Integer& a, const Integer& b);
/// floor(|a|^(1/k)).
Integer root_floor(const Integer& a, unsigned long k);
/// ceil(|a|^(1/k)).
Integer root_ceil(const Integer& a, unsigned long k);
bool is_perfect_square(const Integer& a);
bool is_squarefree(const Integer& a);

/// Reduced fraction with positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(const Integer& n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long n) : num_(n), den_(1) {}            // NOLINT(google-explicit-constructor)
  Rational(int n) : num_(n), den_(1) {}             // NOLINT(google-explicit-constructor)

  /// Parses "n" or "n/d".
  static Rational parse(std::string_view text);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  bool is_integer() const { return den_.is_one(); }
  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }

  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws InvalidInput on division by zero.
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

 private:
  friend Rational rational_normalize(const Integer& num, const Integer& den);
  Rational(Integer n, Integer d, bool) : num_(std::move(n)), den_(std::move(d)) {}

  Integer num_;
  Integer den_;
};

/// Builds num/den in lowest terms. Throws InvalidInput when den = 0.
Rational rational_normalize(const Integer& num, const Integer& den);

/// Dense univariate polynomial over Z; coefficient i multiplies t^i.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const Integer& c);
  /// The monomial t.
  static IntPolynomial x();

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Integer>& coeffs() const { return c_; }
  /// Coefficient of t^i, zero past the degree.
  Integer coeff(std::size_t i) const;
  /// Throws InvalidInput for the zero polynomial.
  const Integer& leading() const;
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

  Integer eval(const Integer& t) const;
  Rational eval(const Rational& t) const;
  /// Value of b^deg * f(a/b), i.e. the homogenized form at (a, b).
  Integer eval_homogeneous(const Integer& a, const Integer& b) const;

  /// gcd of the coefficients, positive; zero for the zero polynomial.
  Integer content() const;
  IntPolynomial primitive_part() const;
  IntPolynomial pow(unsigned e) const;
  /// Multiply every coefficient by s.
  IntPolynomial scaled(const Integer& s) const;
  /// Divide every coefficient exactly by s.
  IntPolynomial divided_exact(const Integer& s) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial operator-() const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<Integer> c_;
};

/// Pseudo-remainder lc(g)^(deg f - deg g + 1) * f mod g. Requires g != 0.
IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g);

/// Res(f, g) by the subresultant remainder sequence. Throws InvalidInput
/// when either argument is the zero polynomial.
Integer poly_resultant(const IntPolynomial& f, const IntPolynomial& g);

/// base^exp mod m for m < 2^63.
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
/// Inverse of a modulo m; requires gcd(a, m) = 1.
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m);

/// Legendre symbol (a/p) via Euler's criterion. Throws InvalidInput when p
/// is not an odd prime.
int legendre(const Integer& a, const Integer& p);
/// Unchecked fast path: p must be an odd prime and a already reduced.
int legendre_u64(std::uint64_t a, std::uint64_t p);

/// All primes <= n, ascending (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(const Integer& n);

/// Deterministic Miller-Rabin below 2^64, trial division beyond.
bool is_prime(std::uint64_t n);
bool is_prime(const Integer& n);

/// True for p^k, k >= 1, p prime.
bool is_prime_power(const Integer& n);

/// Distinct prime factors of |n| by trial division, ascending. n != 0.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace serre::exact
