#pragma once

// Quadratic-field arithmetic behind the non-Borel bound for Q-curves.
// Class numbers come from reduced binary quadratic forms. The narrow class
// number c feeds the bound 2^(6fc+1)(2^(6fc)+1). The remaining checks are
// the tame-inertia exponent congruences and the quadratic-residue endgame.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "serre/exactmath.hpp"

namespace serre::qcurve {

using exact::Integer;

enum class TwoSplitting { Split, Inert, Ramified };
std::string to_string(TwoSplitting s);

struct QuadraticFieldData {
  std::int64_t D = 0;     // squarefree, not 0 or 1
  std::int64_t disc = 0;  // D or 4D
  TwoSplitting two_splitting = TwoSplitting::Ramified;
  int f = 1;              // residue degree of a prime above 2
  std::int64_t h = 0;
  std::optional<int> unit_norm;  // real fields only
  std::int64_t h_plus = 0;
};

/// A binary quadratic form a x^2 + b xy + c y^2.
struct Form {
  std::int64_t a, b, c;
  friend auto operator<=>(const Form&, const Form&) = default;
};

/// Reduced positive definite forms of discriminant disc < 0 (primitive only).
std::vector<Form> reduced_definite_forms(std::int64_t disc);
/// Reduced indefinite forms of non-square discriminant disc > 0 (primitive only).
std::vector<Form> reduced_indefinite_forms(std::int64_t disc);
/// The reduction step rho on a reduced indefinite form.
Form rho(const Form& f, std::int64_t disc);
/// Cycles of reduced indefinite forms under rho; their number is h^+.
std::vector<std::vector<Form>> indefinite_cycles(std::int64_t disc);

/// Period length of the continued fraction of (P + sqrt(d)) / Q, which must
/// satisfy Q | d - P^2 with d > 0 non-square.
std::size_t continued_fraction_period(std::int64_t P, std::int64_t Q, std::int64_t d);

/// Throws InvalidInput unless D is squarefree and not 0 or 1.
QuadraticFieldData field_data(std::int64_t D);

/// Rational primes dividing the discriminant of Q(sqrt D).
std::vector<std::uint64_t> ramified_primes(std::int64_t D);

/// 2^(6fc+1) (2^(6fc) + 1).
Integer noborel_bound(int f, std::int64_t c);
/// Same with c = h^+ and f from field_data(D).
Integer noborel_bound(std::int64_t D);

enum class KpropsCase { None, Case1, Case2, Case3 };
std::string to_string(KpropsCase c);

struct KpropsSolution {
  int e = 0;
  int a = 0;
  int b = 0;
  std::uint64_t k = 0;  // residue mod p - 1
  KpropsCase label = KpropsCase::None;

  friend bool operator==(const KpropsSolution&, const KpropsSolution&) = default;
};

/// Every (e, a, b, k) with e | 12, e <= 6, a + b = e, e k = a and
/// e (1 - k) = b (mod p - 1). Throws InvalidInput for p < 5 or p composite.
std::vector<KpropsSolution> kprops_solutions(std::uint64_t p);

/// Checks q^(12ck) + q^(12c(1-k)) = trace (mod p). Throws EnvelopeViolation
/// when |trace| > 2 q^(6c) and InvalidInput on malformed arguments.
bool congruence_check(const Integer& qsize, std::int64_t c, const Integer& k, std::uint64_t p, const Integer& trace);

struct ResidueScan {
  std::uint64_t p = 0;
  Integer d;
  std::vector<std::uint64_t> violations;
  bool minkowski_ok = false;
  std::int64_t h_minus_p = 0;
  /// m_d + m_K + 2: distinct primes of d, ramified primes of K, plus two.
  std::int64_t m_bound = 0;
};

/// Primes 5 <= ell < p/4 that are squares mod p, skipping divisors of d
/// and ramified primes.
/// Throws InvalidInput unless p is a prime = 3 (mod 4) and d != 0.
ResidueScan residue_scan(std::uint64_t p, const Integer& d, const std::set<std::uint64_t>& ramified);

}  // namespace serre::qcurve
