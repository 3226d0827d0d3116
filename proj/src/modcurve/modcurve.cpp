#include <algorithm>
#include <thread>

#include "serre/modcurve.hpp"

namespace serre::modcurve {

Rational eval_j(int q, const Rational& t) {
  const RationalMap& map = jmap(q);
  const Integer& a = t.num();
  const Integer& b = t.den();
  const int dn = map.numerator.degree();
  const int dd = map.denominator.degree();
  // num(a/b) / den(a/b) = N(a, b) * b^(dd - dn) / D(a, b) with N, D homogenized.
  const Integer d = map.denominator.eval_homogeneous(a, b);
  if (d.is_zero()) throw PoleError("t = " + t.to_string() + " is a pole of the j-map for q = " + std::to_string(q));
  const Integer n = map.numerator.eval_homogeneous(a, b);
  if (dn >= dd) return exact::rational_normalize(n, d * b.pow(static_cast<unsigned long>(dn - dd)));
  return exact::rational_normalize(n * b.pow(static_cast<unsigned long>(dd - dn)), d);
}

namespace {

// Fujiwara-style integer bound rho with |z| <= rho for every complex root z.
Integer root_modulus_bound(const IntPolynomial& f) {
  const int n = f.degree();
  Integer best(0);
  for (int i = 1; i <= n; ++i) {
    Integer c = f.coeff(static_cast<std::size_t>(n - i)).abs();
    if (i == n) c = exact::floor_div(c + 1, Integer(2));  // |a_0 / (2 a_n)|
    const Integer r = exact::root_ceil(c, static_cast<unsigned long>(i));
    if (r > best) best = r;
  }
  return best * 2;
}

// |den(t)| <= bound, with den evaluated in raw mpz for the scan loop.
struct Evaluator {
  std::vector<long> small;  // coefficients when they fit, else empty
  const IntPolynomial* poly;

  explicit Evaluator(const IntPolynomial& p) : poly(&p) {
    for (const auto& c : p.coeffs()) {
      if (!c.fits_int64()) {
        small.clear();
        return;
      }
      small.push_back(static_cast<long>(c.to_int64()));
    }
  }

  void eval(long t, mpz_class& out) const {
    if (small.empty()) {
      out = poly->eval(Integer(t)).mpz();
      return;
    }
    out = 0;
    for (auto it = small.rbegin(); it != small.rend(); ++it) {
      mpz_mul_si(out.get_mpz_t(), out.get_mpz_t(), t);
      if (*it >= 0) {
        mpz_add_ui(out.get_mpz_t(), out.get_mpz_t(), static_cast<unsigned long>(*it));
      } else {
        mpz_sub_ui(out.get_mpz_t(), out.get_mpz_t(), static_cast<unsigned long>(-*it));
      }
    }
  }
};

void scan_range(const RationalMap& map, const Evaluator& den_eval, const mpz_class& res_abs, long lo, long hi,
                std::vector<IntegralPoint>& out) {
  mpz_class d;
  for (long t = lo; t <= hi; ++t) {
    den_eval.eval(t, d);
    if (sgn(d) == 0) continue;
    // Integral j forces den(t) | num(t); with a Bezout relation u*num + v*den = Res
    // this implies den(t) | Res.
    if (mpz_divisible_p(res_abs.get_mpz_t(), d.get_mpz_t()) == 0) continue;
    const Integer num = map.numerator.eval(Integer(t));
    const Integer den(d);
    if (!exact::divides(den, num)) continue;
    out.push_back({Integer(t), exact::exact_div(num, den)});
  }
}

}  // namespace

IntegralJSearch search_integral_j(int q, unsigned workers) {
  const RationalMap& map = jmap(q);
  const IntPolynomial& num = map.numerator;
  const IntPolynomial& den = map.denominator;

  // t = a/b in lowest terms, integral j: b^(dn-dd) * D(a,b) * j = N(a,b) and
  // N(a,b) = a^dn (mod b) when num is monic, so every prime of b divides a.
  // Hence b = +-1. This needs dn > dd and a monic numerator.
  if (!num.is_monic() || num.degree() <= den.degree()) {
    throw Error("integral-j search requires a monic numerator of larger degree (q = " + std::to_string(q) + ")");
  }

  IntegralJSearch result;
  result.q = q;
  result.resultant = exact::poly_resultant(num, den);
  if (result.resultant.is_zero()) throw Error("numerator and denominator share a root (q = " + std::to_string(q) + ")");
  const Integer res_abs = result.resultant.abs();
  const int n = den.degree();

  // For |t| >= rho + floor(|R|^(1/n)) + 1: |den(t)| >= |lc| (|t| - rho)^n > |R|.
  const Integer upper = root_modulus_bound(den) + exact::root_floor(res_abs, static_cast<unsigned long>(n)) + 1;
  const long u = static_cast<long>(upper.to_int64());

  const Evaluator den_eval(den);
  mpz_class d;
  auto within = [&](long t) {
    den_eval.eval(t, d);
    return mpz_cmpabs(d.get_mpz_t(), res_abs.mpz().get_mpz_t()) <= 0;
  };
  long window = 0;
  for (long t = u; t > 0; --t) {
    if (within(t) || within(-t)) {
      window = t;
      break;
    }
  }
  result.window = Integer(window);

  const unsigned nworkers = std::max(1U, workers);
  std::vector<std::vector<IntegralPoint>> parts(nworkers);
  const long total = 2 * window + 1;
  auto run = [&](unsigned w) {
    const long lo = -window + total * static_cast<long>(w) / static_cast<long>(nworkers);
    const long hi = -window + total * static_cast<long>(w + 1) / static_cast<long>(nworkers) - 1;
    scan_range(map, den_eval, res_abs.mpz(), lo, hi, parts[w]);
  };
  if (nworkers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(nworkers);
    for (unsigned w = 0; w < nworkers; ++w) threads.emplace_back(run, w);
    for (auto& th : threads) th.join();
  }
  for (auto& part : parts) {
    for (auto& pt : part) result.points.push_back(std::move(pt));
  }

  for (const auto& pt : result.points) result.j_values.push_back(pt.j);
  std::sort(result.j_values.begin(), result.j_values.end());
  result.j_values.erase(std::unique(result.j_values.begin(), result.j_values.end()), result.j_values.end());
  return result;
}

std::vector<Integer> enumerate_integral_j(int q) { return search_integral_j(q).j_values; }

Integer x0_degree(const Integer& n) {
  if (n < Integer(1)) throw InvalidInput("x0_degree: level must be >= 1, got " + n.to_string());
  Integer rest = n;
  Integer degree(1);
  for (Integer p = 2; p * p <= rest; p += 1) {
    if (!exact::divides(p, rest)) continue;
    int e = 0;
    while (exact::divides(p, rest)) {
      rest = exact::exact_div(rest, p);
      ++e;
    }
    degree *= p.pow(static_cast<unsigned long>(e - 1)) * (p + 1);
  }
  if (rest > Integer(1)) degree *= rest + 1;
  return degree;
}

CurveFamily parse_family(std::string_view name) {
  if (name == "X0") return CurveFamily::X0;
  if (name == "Xsp") return CurveFamily::Xsp;
  if (name == "Xsp_plus") return CurveFamily::XspPlus;
  if (name == "Xns") return CurveFamily::Xns;
  if (name == "Xns_plus") return CurveFamily::XnsPlus;
  throw InvalidInput("unknown modular curve family '" + std::string(name) + "'");
}

std::string to_string(CurveFamily family) {
  switch (family) {
    case CurveFamily::X0:
      return "X0";
    case CurveFamily::Xsp:
      return "Xsp";
    case CurveFamily::XspPlus:
      return "Xsp_plus";
    case CurveFamily::Xns:
      return "Xns";
    case CurveFamily::XnsPlus:
      return "Xns_plus";
  }
  return "?";
}

std::string to_string(FieldLabel label) {
  switch (label) {
    case FieldLabel::Q:
      return "Q";
    case FieldLabel::CyclotomicZetaP:
      return "Q(zeta_p)";
    case FieldLabel::RealCyclotomicZetaP:
      return "Q(zeta_p + zeta_p^-1)";
  }
  return "?";
}

CurveMetadata curve_metadata(CurveFamily family, const Integer& level) {
  if (family == CurveFamily::X0) return {family, level, x0_degree(level), Integer(1), FieldLabel::Q};

  if (!level.is_odd() || !exact::is_prime(level)) {
    throw InvalidInput(to_string(family) + " is only catalogued at odd prime level, got " + level.to_string());
  }
  const Integer& p = level;
  switch (family) {
    case CurveFamily::Xsp:
      return {family, p, p * (p + 1), p, FieldLabel::Q};
    case CurveFamily::XspPlus:
      return {family, p, exact::exact_div(p * (p + 1), Integer(2)), p, FieldLabel::Q};
    case CurveFamily::Xns:
      return {family, p, p * (p - 1), p, FieldLabel::CyclotomicZetaP};
    case CurveFamily::XnsPlus:
      return {family, p, exact::exact_div(p * (p - 1), Integer(2)), p, FieldLabel::RealCyclotomicZetaP};
    case CurveFamily::X0:
      break;
  }
  throw InvalidInput("unsupported modular curve family");
}

}  // namespace serre::modcurve
