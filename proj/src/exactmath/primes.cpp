#include <array>

#include "serre/exactmath.hpp"

namespace serre::exact {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mulmod_u64(result, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m) {
  // Extended Euclid on signed 128-bit to avoid overflow for m near 2^63.
  __int128 r0 = static_cast<__int128>(m), r1 = static_cast<__int128>(a % m);
  __int128 s0 = 0, s1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    const __int128 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    const __int128 s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) throw InvalidInput("value not invertible modulo " + std::to_string(m));
  __int128 inv = s0 % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<std::uint64_t>(inv);
}

int legendre_u64(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  return powmod_u64(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int legendre(const Integer& a, const Integer& p) {
  if (p.sign() <= 0 || !p.is_odd() || !is_prime(p)) throw InvalidInput("legendre: modulus is not an odd prime: " + p.to_string());
  if (p.fits_int64()) return legendre_u64(a.mod_u64(static_cast<std::uint64_t>(p.to_int64())), static_cast<std::uint64_t>(p.to_int64()));
  const Integer r = floor_mod(a, p);
  if (r.is_zero()) return 0;
  mpz_class e = (p.mpz() - 1) / 2;
  mpz_class v;
  mpz_powm(v.get_mpz_t(), r.mpz().get_mpz_t(), e.get_mpz_t(), p.mpz().get_mpz_t());
  return v == 1 ? 1 : -1;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

std::vector<std::uint64_t> primes_up_to(const Integer& n) {
  if (n.sign() < 0) throw InvalidInput("primes_up_to: negative bound");
  return primes_up_to(static_cast<std::uint64_t>(n.to_int64()));
}

namespace {

bool miller_rabin_round(std::uint64_t n, std::uint64_t a, std::uint64_t d, int r) {
  std::uint64_t x = powmod_u64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kSmall{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : kSmall) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  // The first twelve primes are a deterministic witness set below 2^64.
  for (auto a : kSmall) {
    if (!miller_rabin_round(n, a, d, r)) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (n.sign() <= 0) return false;
  if (n.bit_length() <= 64) return is_prime(static_cast<std::uint64_t>(mpz_get_ui(n.mpz().get_mpz_t())));
  // Beyond 64 bits: GMP's Baillie-PSW plus random Miller-Rabin rounds.
  return mpz_probab_prime_p(n.mpz().get_mpz_t(), 40) != 0;
}

bool is_prime_power(const Integer& n) {
  if (n < Integer(2)) return false;
  for (unsigned long k = 1; k <= n.bit_length(); ++k) {
    const Integer r = root_floor(n, k);
    if (r.pow(k) == n && is_prime(r)) return true;
  }
  return false;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace serre::exact
