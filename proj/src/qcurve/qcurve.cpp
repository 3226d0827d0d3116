#include <map>

#include "serre/qcurve.hpp"

namespace serre::qcurve {

std::string to_string(TwoSplitting s) {
  switch (s) {
    case TwoSplitting::Split:
      return "split";
    case TwoSplitting::Inert:
      return "inert";
    case TwoSplitting::Ramified:
      return "ramified";
  }
  return "?";
}

std::string to_string(KpropsCase c) {
  switch (c) {
    case KpropsCase::None:
      return "none";
    case KpropsCase::Case1:
      return "case1";
    case KpropsCase::Case2:
      return "case2";
    case KpropsCase::Case3:
      return "case3";
  }
  return "?";
}

QuadraticFieldData field_data(std::int64_t D) {
  if (D == 0 || D == 1 || !exact::is_squarefree(Integer(D))) {
    throw InvalidInput("D must be squarefree and different from 0 and 1, got " + std::to_string(D));
  }
  QuadraticFieldData k;
  k.D = D;
  const std::int64_t r4 = ((D % 4) + 4) % 4;
  k.disc = r4 == 1 ? D : 4 * D;
  const std::int64_t r8 = ((k.disc % 8) + 8) % 8;
  if (r8 % 2 == 0) {
    k.two_splitting = TwoSplitting::Ramified;
  } else if (r8 == 1) {
    k.two_splitting = TwoSplitting::Split;
  } else {
    k.two_splitting = TwoSplitting::Inert;
  }
  k.f = k.two_splitting == TwoSplitting::Inert ? 2 : 1;

  if (D < 0) {
    k.h = static_cast<std::int64_t>(reduced_definite_forms(k.disc).size());
    k.h_plus = k.h;
    return k;
  }

  // Proper classes of forms are the narrow classes; the wide class group
  // identifies f = (a, b, c) with (-a, b, -c).
  const auto cycles = indefinite_cycles(k.disc);
  k.h_plus = static_cast<std::int64_t>(cycles.size());
  std::map<Form, std::size_t> cycle_of;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (const auto& f : cycles[i]) cycle_of[f] = i;
  }
  std::vector<bool> counted(cycles.size(), false);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (counted[i]) continue;
    const Form& f = cycles[i].front();
    counted[i] = true;
    counted[cycle_of.at(Form{-f.a, f.b, -f.c})] = true;
    ++k.h;
  }

  const std::size_t period = r4 == 1 ? continued_fraction_period(1, 2, D) : continued_fraction_period(0, 1, D);
  k.unit_norm = period % 2 == 1 ? -1 : 1;
  if (k.h_plus != k.h * (*k.unit_norm == 1 ? 2 : 1)) {
    throw Error("narrow class number inconsistent with unit norm for D = " + std::to_string(D));
  }
  return k;
}

std::vector<std::uint64_t> ramified_primes(std::int64_t D) {
  const QuadraticFieldData k = field_data(D);
  return exact::prime_divisors(static_cast<std::uint64_t>(std::llabs(k.disc)));
}

Integer noborel_bound(int f, std::int64_t c) {
  if (f < 1 || f > 2 || c < 1) throw InvalidInput("noborel_bound needs f in {1, 2} and c >= 1");
  const Integer q6 = Integer(2).pow(static_cast<unsigned long>(6 * f * c));
  return q6 * 2 * (q6 + 1);
}

Integer noborel_bound(std::int64_t D) {
  const QuadraticFieldData k = field_data(D);
  return noborel_bound(k.f, k.h_plus);
}

std::vector<KpropsSolution> kprops_solutions(std::uint64_t p) {
  if (p < 5 || !exact::is_prime(p)) throw InvalidInput("kprops needs a prime p >= 5, got " + std::to_string(p));
  const std::uint64_t m = p - 1;
  std::vector<KpropsSolution> out;
  for (int e : {1, 2, 3, 4, 6}) {
    const int r = 12 / e;
    for (int a = 0; a <= e; ++a) {
      const int b = e - a;
      for (std::uint64_t k = 0; k < m; ++k) {
        const std::uint64_t ek = (static_cast<std::uint64_t>(e) * k) % m;
        const std::uint64_t e1k = (static_cast<std::uint64_t>(e) * ((1 + m - k) % m)) % m;
        if (ek != static_cast<std::uint64_t>(a) % m || e1k != static_cast<std::uint64_t>(b) % m) continue;
        KpropsCase label = KpropsCase::None;
        if (r * a == 6 && r * b == 6) {
          label = e == 6 ? KpropsCase::Case1 : (e == 4 ? KpropsCase::Case2 : KpropsCase::Case3);
        }
        out.push_back({e, a, b, k, label});
      }
    }
  }
  return out;
}

bool congruence_check(const Integer& qsize, std::int64_t c, const Integer& k, std::uint64_t p, const Integer& trace) {
  if (!exact::is_prime(p)) throw InvalidInput("congruence_check: modulus " + std::to_string(p) + " is not prime");
  if (!exact::is_prime_power(qsize)) throw InvalidInput("congruence_check: " + qsize.to_string() + " is not a prime power");
  if (c < 1) throw InvalidInput("congruence_check: c must be positive");

  const Integer envelope = qsize.pow(static_cast<unsigned long>(6 * c)) * 2;
  if (trace.abs() > envelope) {
    throw EnvelopeViolation("|" + trace.to_string() + "| exceeds the Hasse-Weil envelope 2 q^(6c) = " + envelope.to_string());
  }

  const Integer modulus(static_cast<unsigned long long>(p));
  const Integer e1 = k * Integer(12 * c);
  const Integer e2 = (Integer(1) - k) * Integer(12 * c);
  auto power = [&](const Integer& e) {
    mpz_class out;
    if (exact::divides(modulus, qsize)) {
      if (e.sign() < 0) throw InvalidInput("congruence_check: negative exponent with p | q");
      return e.is_zero() ? Integer(1) : Integer(0);
    }
    // q is a unit mod p: reduce the exponent mod p - 1.
    const Integer r = exact::floor_mod(e, modulus - 1);
    mpz_powm(out.get_mpz_t(), qsize.mpz().get_mpz_t(), r.mpz().get_mpz_t(), modulus.mpz().get_mpz_t());
    return Integer(out);
  };
  const Integer lhs = exact::floor_mod(power(e1) + power(e2), modulus);
  return lhs == exact::floor_mod(trace, modulus);
}

ResidueScan residue_scan(std::uint64_t p, const Integer& d, const std::set<std::uint64_t>& ramified) {
  if (!exact::is_prime(p) || p % 4 != 3) throw InvalidInput("residue_scan needs a prime p = 3 (mod 4), got " + std::to_string(p));
  if (d.is_zero()) throw InvalidInput("residue_scan: d must be nonzero");

  ResidueScan out;
  out.p = p;
  out.d = d;
  // 5 <= ell < p/4  <=>  4 ell < p
  for (auto ell : exact::primes_up_to((p - 1) / 4)) {
    if (ell < 5 || 4 * ell >= p) continue;
    if (d.mod_u64(ell) == 0 || ramified.contains(ell)) continue;
    if (exact::legendre_u64(ell, p) == 1) out.violations.push_back(ell);
  }

  // Minkowski: 2 sqrt(p) / pi < p / 4  <=>  64 < pi^2 p. With pi^2 > 97/10
  // it suffices that 640 < 97 p.
  out.minkowski_ok = Integer(640) < Integer(97) * Integer(static_cast<unsigned long long>(p));

  out.h_minus_p = field_data(-static_cast<std::int64_t>(p)).h;
  const Integer dabs = d.abs();
  const std::int64_t md =
      dabs.is_one() ? 0 : static_cast<std::int64_t>(exact::prime_divisors(static_cast<std::uint64_t>(dabs.to_int64())).size());
  out.m_bound = md + static_cast<std::int64_t>(ramified.size()) + 2;
  return out;
}

}  // namespace serre::qcurve
