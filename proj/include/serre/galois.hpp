#pragma once

// One-sided classification of the mod-p image of a non-CM elliptic curve over
// Q. For p >= 5 the image is all of GL_2(F_p) as soon as it lies in no Borel,
// no normalizer of a split or non-split Cartan, and no exceptional subgroup;
// each class is ruled out by a single Frobenius element whose trace and
// determinant are incompatible with every element of that class.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "serre/elliptic.hpp"

namespace serre::galois {

using elliptic::EllipticCurveQ;
using elliptic::FrobeniusTrace;

enum class SubgroupClass { Borel = 0, SplitNormalizer = 1, NonsplitNormalizer = 2, Exceptional = 3 };
inline constexpr std::array<SubgroupClass, 4> kAllClasses{SubgroupClass::Borel, SubgroupClass::SplitNormalizer,
                                                          SubgroupClass::NonsplitNormalizer,
                                                          SubgroupClass::Exceptional};

/// JSON key: "borel", "split_normalizer", "nonsplit_normalizer", "exceptional".
std::string to_string(SubgroupClass c);

enum class Verdict { ProvenSurjective, Undetermined };
std::string to_string(Verdict v);

/// An element of GL_2(F_p) seen only through its trace and determinant.
struct TraceDet {
  std::uint64_t trace;
  std::uint64_t det;  // nonzero
};

/// True when no element of any subgroup in class `c` has this trace and
/// determinant, i.e. the element witnesses that the image avoids `c`.
bool excludes(SubgroupClass c, TraceDet g, std::uint64_t p);

struct ImageReport {
  std::uint64_t p = 0;
  std::uint64_t ell_max = 0;
  /// Smallest witness prime per class, indexed by SubgroupClass.
  std::array<std::optional<std::uint64_t>, 4> witness;
  Verdict verdict = Verdict::Undetermined;

  const std::optional<std::uint64_t>& witness_for(SubgroupClass c) const {
    return witness[static_cast<std::size_t>(c)];
  }
};

/// Classify from a precomputed table of good-prime traces (ascending ell).
/// Only entries with ell <= ell_max and ell != p are used. Throws
/// UnsupportedPrime for p < 5 (or p not prime) and EmptyScan when no usable
/// prime remains.
ImageReport classify_from_traces(std::span<const FrobeniusTrace> traces, std::uint64_t p, std::uint64_t ell_max);

/// Scan good primes ell <= ell_max for exclusion witnesses.
ImageReport frobenius_witnesses(const EllipticCurveQ& e, std::uint64_t p, std::uint64_t ell_max);

struct SurjectivityResult {
  Verdict verdict = Verdict::Undetermined;
  /// Witness per class, present only when proven.
  std::array<std::uint64_t, 4> witnesses{};
};

/// Verdict only. Refuses CM curves with CmCurve.
SurjectivityResult is_surjective(const EllipticCurveQ& e, std::uint64_t p, std::uint64_t ell_max);

struct SurjectivityScan {
  std::string curve;  // "a1,a2,a3,a4,a6"
  std::uint64_t p_min = 0;
  std::uint64_t p_max = 0;
  std::uint64_t ell_max = 0;
  std::vector<ImageReport> reports;  // one per prime in (p_min, p_max]

  bool all_proven() const;
};

/// Reports for every prime p in (p_min, p_max], sharing one trace table.
/// Throws InvalidInput unless 5 <= p_min < p_max.
SurjectivityScan surjectivity_scan(const EllipticCurveQ& e, std::uint64_t p_min, std::uint64_t p_max,
                                   std::uint64_t ell_max, unsigned workers = 1);
/// Same, over an existing trace table (e.g. loaded from a cache).
SurjectivityScan surjectivity_scan(const EllipticCurveQ& e, std::span<const FrobeniusTrace> traces,
                                   std::uint64_t p_min, std::uint64_t p_max, std::uint64_t ell_max);

/// Primes ell <= bound with ell = +-1 (mod p): the only candidates for
/// potentially multiplicative reduction when the mod-p image lies in the
/// normalizer of a non-split Cartan.
std::vector<std::uint64_t> admissible_primes(std::uint64_t p, std::uint64_t bound);

}  // namespace serre::galois
