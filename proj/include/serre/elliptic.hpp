#pragma once

// Elliptic curves over Q in long Weierstrass form
//   y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "serre/exactmath.hpp"

namespace serre::elliptic {

using exact::Integer;
using exact::Rational;

class EllipticCurveQ {
 public:
  /// Throws SingularCurve when the discriminant vanishes.
  static EllipticCurveQ from_coeffs(const Integer& a1, const Integer& a2, const Integer& a3, const Integer& a4,
                                    const Integer& a6);
  static EllipticCurveQ from_coeffs(const std::array<Integer, 5>& a);
  /// Parses "a1,a2,a3,a4,a6".
  static EllipticCurveQ parse(std::string_view text);

  const std::array<Integer, 5>& coeffs() const { return a_; }
  const Integer& a1() const { return a_[0]; }
  const Integer& a2() const { return a_[1]; }
  const Integer& a3() const { return a_[2]; }
  const Integer& a4() const { return a_[3]; }
  const Integer& a6() const { return a_[4]; }

  const Integer& b2() const { return b2_; }
  const Integer& b4() const { return b4_; }
  const Integer& b6() const { return b6_; }
  const Integer& b8() const { return b8_; }
  const Integer& c4() const { return c4_; }
  const Integer& c6() const { return c6_; }
  const Integer& discriminant() const { return disc_; }
  const Rational& j() const { return j_; }

  /// True when ell does not divide the discriminant of this model.
  bool has_good_reduction(std::uint64_t ell) const { return disc_.mod_u64(ell) != 0; }

  /// "a1,a2,a3,a4,a6"
  std::string label() const;

  friend bool operator==(const EllipticCurveQ& a, const EllipticCurveQ& b) { return a.a_ == b.a_; }

 private:
  explicit EllipticCurveQ(const std::array<Integer, 5>& a);

  std::array<Integer, 5> a_;
  Integer b2_, b4_, b6_, b8_, c4_, c6_, disc_;
  Rational j_;
};

/// The twist by Q(sqrt d). When a1 = a3 = 0 the model is
/// y^2 = x^3 + d a2 x^2 + d^2 a4 x + d^3 a6 (discriminant d^6 Delta); otherwise
/// y^2 = x^3 + d b2 x^2 + 8 d^2 b4 x + 16 d^3 b6 (discriminant 2^12 d^6 Delta).
/// Throws InvalidInput unless d is squarefree and nonzero.
EllipticCurveQ quadratic_twist(const EllipticCurveQ& e, const Integer& d);

struct FrobeniusTrace {
  std::uint64_t ell = 0;
  std::int64_t a_ell = 0;

  friend bool operator==(const FrobeniusTrace&, const FrobeniusTrace&) = default;
};

/// a_ell = ell + 1 - #E(F_ell). Character sum for ell >= 5, point enumeration
/// for ell in {2, 3}. Throws InvalidInput if ell is not prime and
/// BadReduction if ell divides the discriminant.
FrobeniusTrace trace_frobenius(const EllipticCurveQ& e, std::uint64_t ell);

/// #affine points of the long model over F_ell by direct enumeration.
std::uint64_t count_affine_points(const EllipticCurveQ& e, std::uint64_t ell);

/// Traces at every good prime ell <= ell_max, ascending. `workers` > 1
/// splits the primes across threads; output order is unaffected.
std::vector<FrobeniusTrace> trace_table(const EllipticCurveQ& e, std::uint64_t ell_max, unsigned workers = 1);
/// Same, restricted to good primes ell_lo <= ell <= ell_hi.
std::vector<FrobeniusTrace> trace_table(const EllipticCurveQ& e, std::uint64_t ell_lo, std::uint64_t ell_hi,
                                        unsigned workers);

/// Membership in the thirteen rational CM j-invariants.
bool is_cm_j(const Rational& j);
const std::vector<Integer>& cm_j_invariants();

}  // namespace serre::elliptic
