#pragma once

// Explicit j-maps of the genus-zero curves X_sp^+(q), q in {3, 5, 7}, and
// their rational points with integral j-invariant. Also j-map degrees of the
// standard level-p families.

#include <string>
#include <vector>

#include "serre/exactmath.hpp"

namespace serre::modcurve {

using exact::Integer;
using exact::IntPolynomial;
using exact::Rational;

/// j = numerator(t) / denominator(t), numerator and denominator coprime.
struct RationalMap {
  IntPolynomial numerator;
  IntPolynomial denominator;
};

/// The j-map of X_sp^+(q) in the standard uniformizer t. Throws InvalidInput
/// unless q is 3, 5 or 7.
const RationalMap& jmap(int q);

/// The supported levels, ascending.
const std::vector<int>& supported_levels();

/// j(t) in lowest terms. Throws PoleError if t is a zero of the denominator.
Rational eval_j(int q, const Rational& t);

struct IntegralPoint {
  Integer t;
  Integer j;
};

struct IntegralJSearch {
  int q = 0;
  Integer resultant;  // Res(numerator, denominator)
  Integer window;     // B: |den(t)| > |resultant| for every |t| > B
  std::vector<IntegralPoint> points;  // ascending in t
  std::vector<Integer> j_values;      // distinct, ascending
};

/// Exhaustive search for rational t with integral j(t). Every such t is an
/// integer with |den(t)| <= |Res(num, den)|, so scanning [-B, B] is complete.
/// `workers` > 1 partitions the scan across threads.
IntegralJSearch search_integral_j(int q, unsigned workers = 1);

/// The distinct integral j-invariants of rational points of X_sp^+(q).
std::vector<Integer> enumerate_integral_j(int q);

/// Degree of j : X_0(N) -> P^1, i.e. N * prod_{p | N} (1 + 1/p).
Integer x0_degree(const Integer& n);

enum class CurveFamily { X0, Xsp, XspPlus, Xns, XnsPlus };
enum class FieldLabel { Q, CyclotomicZetaP, RealCyclotomicZetaP };

struct CurveMetadata {
  CurveFamily family;
  Integer level;
  Integer j_degree;
  Integer ram_at_infinity;
  FieldLabel infinity_field;
};

/// Throws InvalidInput for unknown family names.
CurveFamily parse_family(std::string_view name);
std::string to_string(CurveFamily family);
std::string to_string(FieldLabel label);

/// Throws InvalidInput unless level >= 1 (X0) or level is an odd prime.
CurveMetadata curve_metadata(CurveFamily family, const Integer& level);

}  // namespace serre::modcurve
