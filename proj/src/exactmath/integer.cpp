#include <cctype>
#include <climits>

#include "serre/exactmath.hpp"

namespace serre::exact {

static_assert(sizeof(long) == 8, "LP64 data model expected");

Integer::Integer(long long v) : v_(static_cast<long>(v)) {}
Integer::Integer(unsigned long long v) : v_(static_cast<unsigned long>(v)) {}

Integer Integer::parse(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw InvalidInput("not an integer: '" + std::string(text) + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw InvalidInput("not an integer: '" + std::string(text) + "'");
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(mpz_class(digits, 10));
}

bool Integer::fits_int64() const { return mpz_fits_slong_p(v_.get_mpz_t()) != 0; }

std::int64_t Integer::to_int64() const {
  if (!fits_int64()) throw InvalidInput("integer out of 64-bit range: " + to_string());
  return v_.get_si();
}

std::uint64_t Integer::mod_u64(std::uint64_t m) const {
  // mpz_fdiv_ui returns the non-negative residue.
  return mpz_fdiv_ui(v_.get_mpz_t(), m);
}

std::size_t Integer::bit_length() const {
  if (is_zero()) return 0;
  return mpz_sizeinbase(v_.get_mpz_t(), 2);
}

Integer Integer::pow(unsigned long e) const {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), v_.get_mpz_t(), e);
  return Integer(r);
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw InvalidInput("division by zero");
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Integer(q);
}

Integer floor_mod(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw InvalidInput("division by zero");
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Integer(r);
}

Integer exact_div(const Integer& a, const Integer& b) {
  if (!divides(b, a)) throw InvalidInput(b.to_string() + " does not divide " + a.to_string());
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Integer(q);
}

bool divides(const Integer& d, const Integer& n) {
  if (d.is_zero()) return n.is_zero();
  return mpz_divisible_p(n.mpz().get_mpz_t(), d.mpz().get_mpz_t()) != 0;
}

Integer gcd(const Integer& a, const Integer& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Integer(g);
}

Integer root_floor(const Integer& a, unsigned long k) {
  if (k == 0) throw InvalidInput("zeroth root");
  mpz_class r;
  mpz_class m = abs(a.mpz());
  mpz_root(r.get_mpz_t(), m.get_mpz_t(), k);
  return Integer(r);
}

Integer root_ceil(const Integer& a, unsigned long k) {
  Integer r = root_floor(a, k);
  if (r.pow(k) < a.abs()) r += 1;
  return r;
}

bool is_perfect_square(const Integer& a) {
  return a.sign() >= 0 && mpz_perfect_square_p(a.mpz().get_mpz_t()) != 0;
}

bool is_squarefree(const Integer& a) {
  if (a.is_zero()) return false;
  Integer n = a.abs();
  for (Integer d = 2; d * d <= n; d += 1) {
    const Integer sq = d * d;
    if (divides(sq, n)) return false;
    while (divides(d, n)) n = exact_div(n, d);
  }
  return true;
}

}  // namespace serre::exact
