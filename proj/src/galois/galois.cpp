#include "serre/galois.hpp"

namespace serre::galois {

std::string to_string(SubgroupClass c) {
  switch (c) {
    case SubgroupClass::Borel:
      return "borel";
    case SubgroupClass::SplitNormalizer:
      return "split_normalizer";
    case SubgroupClass::NonsplitNormalizer:
      return "nonsplit_normalizer";
    case SubgroupClass::Exceptional:
      return "exceptional";
  }
  return "?";
}

std::string to_string(Verdict v) { return v == Verdict::ProvenSurjective ? "proven_surjective" : "undetermined"; }

bool excludes(SubgroupClass c, TraceDet g, std::uint64_t p) {
  using exact::mulmod_u64;
  const std::uint64_t a = g.trace % p;
  const std::uint64_t det = g.det % p;
  const std::uint64_t a2 = mulmod_u64(a, a, p);
  const std::uint64_t disc = (a2 + p - mulmod_u64(4 % p, det, p)) % p;
  const int s = exact::legendre_u64(disc, p);
  switch (c) {
    case SubgroupClass::Borel:
      // Borel elements have both eigenvalues in F_p.
      return s == -1;
    case SubgroupClass::SplitNormalizer:
      // Split Cartan: eigenvalues in F_p; the other coset has trace zero.
      return a != 0 && s == -1;
    case SubgroupClass::NonsplitNormalizer:
      // Non-split Cartan: conjugate eigenvalues in F_{p^2} \ F_p, or scalar.
      return a != 0 && s == 1;
    case SubgroupClass::Exceptional: {
      // Projective orders 1, 2, 3, 4, 5 give u = tr^2/det in {4, 0, 1, 2} or
      // a root of u^2 - 3u + 1.
      const std::uint64_t u = mulmod_u64(a2, exact::invmod_u64(det, p), p);
      if (u == 0 || u == 1 || u == 2 % p || u == 4 % p) return false;
      const std::uint64_t q = (mulmod_u64(u, u, p) + 3 * (p - u) + 1) % p;
      return q != 0;
    }
  }
  return false;
}

ImageReport classify_from_traces(std::span<const FrobeniusTrace> traces, std::uint64_t p, std::uint64_t ell_max) {
  if (p < 5 || !exact::is_prime(p)) throw UnsupportedPrime("image classification needs a prime p >= 5, got " + std::to_string(p));
  if (ell_max < 5) throw InvalidInput("ell_max must be at least 5, got " + std::to_string(ell_max));

  ImageReport report;
  report.p = p;
  report.ell_max = ell_max;
  bool any = false;
  std::size_t remaining = kAllClasses.size();
  for (const auto& t : traces) {
    if (t.ell > ell_max) break;
    if (t.ell == p) continue;
    any = true;
    const std::int64_t pm = static_cast<std::int64_t>(p);
    const TraceDet g{static_cast<std::uint64_t>(((t.a_ell % pm) + pm) % pm), t.ell % p};
    for (auto c : kAllClasses) {
      auto& slot = report.witness[static_cast<std::size_t>(c)];
      if (!slot && excludes(c, g, p)) {
        slot = t.ell;
        --remaining;
      }
    }
    if (remaining == 0) break;
  }
  if (!any) throw EmptyScan("no prime of good reduction other than p below ell_max = " + std::to_string(ell_max));
  report.verdict = remaining == 0 ? Verdict::ProvenSurjective : Verdict::Undetermined;
  return report;
}

ImageReport frobenius_witnesses(const EllipticCurveQ& e, std::uint64_t p, std::uint64_t ell_max) {
  if (p < 5 || !exact::is_prime(p)) throw UnsupportedPrime("image classification needs a prime p >= 5, got " + std::to_string(p));
  if (ell_max < 5) throw InvalidInput("ell_max must be at least 5, got " + std::to_string(ell_max));
  // Traces are computed lazily: most reports close after a handful of primes.
  ImageReport report;
  report.p = p;
  report.ell_max = ell_max;
  std::vector<FrobeniusTrace> one(1);
  bool any = false;
  for (auto ell : exact::primes_up_to(ell_max)) {
    if (ell == p || !e.has_good_reduction(ell)) continue;
    one[0] = elliptic::trace_frobenius(e, ell);
    const ImageReport step = classify_from_traces(one, p, ell_max);
    any = true;
    bool done = true;
    for (std::size_t i = 0; i < 4; ++i) {
      if (!report.witness[i] && step.witness[i]) report.witness[i] = step.witness[i];
      done = done && report.witness[i].has_value();
    }
    if (done) break;
  }
  if (!any) throw EmptyScan("no prime of good reduction other than p below ell_max = " + std::to_string(ell_max));
  bool all = true;
  for (const auto& w : report.witness) all = all && w.has_value();
  report.verdict = all ? Verdict::ProvenSurjective : Verdict::Undetermined;
  return report;
}

SurjectivityResult is_surjective(const EllipticCurveQ& e, std::uint64_t p, std::uint64_t ell_max) {
  if (elliptic::is_cm_j(e.j())) {
    throw CmCurve("[" + e.label() + "] has CM (j = " + e.j().to_string() + "); surjectivity does not follow from witnesses");
  }
  const ImageReport report = frobenius_witnesses(e, p, ell_max);
  SurjectivityResult out;
  out.verdict = report.verdict;
  if (report.verdict == Verdict::ProvenSurjective) {
    for (std::size_t i = 0; i < 4; ++i) out.witnesses[i] = *report.witness[i];
  }
  return out;
}

bool SurjectivityScan::all_proven() const {
  for (const auto& r : reports) {
    if (r.verdict != Verdict::ProvenSurjective) return false;
  }
  return !reports.empty();
}

SurjectivityScan surjectivity_scan(const EllipticCurveQ& e, std::span<const FrobeniusTrace> traces,
                                   std::uint64_t p_min, std::uint64_t p_max, std::uint64_t ell_max) {
  if (p_min < 5 || p_min >= p_max) {
    throw InvalidInput("surjectivity scan needs 5 <= p_min < p_max, got (" + std::to_string(p_min) + ", " +
                       std::to_string(p_max) + "]");
  }
  SurjectivityScan scan;
  scan.curve = e.label();
  scan.p_min = p_min;
  scan.p_max = p_max;
  scan.ell_max = ell_max;
  for (auto p : exact::primes_up_to(p_max)) {
    if (p <= p_min) continue;
    scan.reports.push_back(classify_from_traces(traces, p, ell_max));
  }
  return scan;
}

SurjectivityScan surjectivity_scan(const EllipticCurveQ& e, std::uint64_t p_min, std::uint64_t p_max,
                                   std::uint64_t ell_max, unsigned workers) {
  if (p_min < 5 || p_min >= p_max) {
    throw InvalidInput("surjectivity scan needs 5 <= p_min < p_max, got (" + std::to_string(p_min) + ", " +
                       std::to_string(p_max) + "]");
  }
  const auto traces = elliptic::trace_table(e, ell_max, workers);
  return surjectivity_scan(e, traces, p_min, p_max, ell_max);
}

std::vector<std::uint64_t> admissible_primes(std::uint64_t p, std::uint64_t bound) {
  if (!exact::is_prime(p)) throw InvalidInput("admissible_primes: " + std::to_string(p) + " is not prime");
  std::vector<std::uint64_t> out;
  for (auto ell : exact::primes_up_to(bound)) {
    const std::uint64_t r = ell % p;
    if (r == 1 % p || r == p - 1) out.push_back(ell);
  }
  return out;
}

}  // namespace serre::galois
