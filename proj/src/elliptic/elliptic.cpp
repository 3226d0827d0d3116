#include <atomic>
#include <thread>

#include "serre/elliptic.hpp"

namespace serre::elliptic {

EllipticCurveQ::EllipticCurveQ(const std::array<Integer, 5>& a) : a_(a) {
  const Integer& a1 = a_[0];
  const Integer& a2 = a_[1];
  const Integer& a3 = a_[2];
  const Integer& a4 = a_[3];
  const Integer& a6 = a_[4];
  b2_ = a1 * a1 + a2 * 4;
  b4_ = a1 * a3 + a4 * 2;
  b6_ = a3 * a3 + a6 * 4;
  b8_ = a1 * a1 * a6 + a2 * a6 * 4 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  c4_ = b2_ * b2_ - b4_ * 24;
  c6_ = -(b2_ * b2_ * b2_) + b2_ * b4_ * 36 - b6_ * 216;
  disc_ = -(b2_ * b2_ * b8_) - b4_ * b4_ * b4_ * 8 - b6_ * b6_ * 27 + b2_ * b4_ * b6_ * 9;
  if (disc_.is_zero()) throw SingularCurve("singular Weierstrass model [" + label() + "]: discriminant is zero");
  if (disc_ * 1728 != c4_ * c4_ * c4_ - c6_ * c6_) throw Error("Weierstrass invariant identity failed for [" + label() + "]");
  j_ = exact::rational_normalize(c4_ * c4_ * c4_, disc_);
}

EllipticCurveQ EllipticCurveQ::from_coeffs(const Integer& a1, const Integer& a2, const Integer& a3, const Integer& a4,
                                           const Integer& a6) {
  return EllipticCurveQ(std::array<Integer, 5>{a1, a2, a3, a4, a6});
}

EllipticCurveQ EllipticCurveQ::from_coeffs(const std::array<Integer, 5>& a) { return EllipticCurveQ(a); }

EllipticCurveQ EllipticCurveQ::parse(std::string_view text) {
  std::array<Integer, 5> a;
  std::size_t field = 0;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    if (field >= 5) throw InvalidInput("curve needs exactly five coefficients: '" + std::string(text) + "'");
    a[field++] = Integer::parse(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (field != 5) throw InvalidInput("curve needs exactly five coefficients: '" + std::string(text) + "'");
  return EllipticCurveQ(a);
}

std::string EllipticCurveQ::label() const {
  std::string out;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i) out += ',';
    out += a_[i].to_string();
  }
  return out;
}

EllipticCurveQ quadratic_twist(const EllipticCurveQ& e, const Integer& d) {
  if (!exact::is_squarefree(d)) throw InvalidInput("twist parameter must be squarefree and nonzero, got " + d.to_string());
  const Integer d2 = d * d;
  const Integer d3 = d2 * d;
  if (e.a1().is_zero() && e.a3().is_zero()) {
    return EllipticCurveQ::from_coeffs(0, d * e.a2(), 0, d2 * e.a4(), d3 * e.a6());
  }
  return EllipticCurveQ::from_coeffs(0, d * e.b2(), 0, d2 * e.b4() * 8, d3 * e.b6() * 16);
}

std::uint64_t count_affine_points(const EllipticCurveQ& e, std::uint64_t ell) {
  std::array<std::uint64_t, 5> a{};
  for (std::size_t i = 0; i < 5; ++i) a[i] = e.coeffs()[i].mod_u64(ell);
  const auto [a1, a2, a3, a4, a6] = a;
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < ell; ++x) {
    const std::uint64_t rhs = (((x + a2) % ell * x % ell + a4) % ell * x % ell + a6) % ell;
    for (std::uint64_t y = 0; y < ell; ++y) {
      const std::uint64_t lhs = (y * y % ell + a1 * x % ell * y % ell + a3 * y % ell) % ell;
      if (lhs == rhs) ++count;
    }
  }
  return count;
}

namespace {

// a_ell = -sum_x chi(4x^3 + b2 x^2 + 2 b4 x + b6) for odd ell; the cubic is
// stepped with forward differences so the loop is additions only.
std::int64_t character_sum_trace(const EllipticCurveQ& e, std::uint64_t ell) {
  std::vector<std::int8_t> chi(ell, -1);
  chi[0] = 0;
  std::uint64_t sq = 0;
  for (std::uint64_t y = 1; y <= (ell - 1) / 2; ++y) {
    sq += 2 * y - 1;  // y^2 = (y-1)^2 + 2y - 1
    if (sq >= ell) sq %= ell;
    chi[sq] = 1;
  }

  const std::uint64_t b2 = e.b2().mod_u64(ell);
  const std::uint64_t b4 = e.b4().mod_u64(ell);
  const std::uint64_t b6 = e.b6().mod_u64(ell);
  auto f = [&](std::uint64_t x) {
    x %= ell;
    return ((((4 * x + b2) % ell) * x % ell + 2 * b4) % ell * x % ell + b6) % ell;
  };
  std::uint64_t v = f(0);
  std::uint64_t d1 = (f(1) + ell - v) % ell;
  std::uint64_t d2 = (f(2) + 2 * (ell - f(1)) + v) % ell;
  const std::uint64_t d3 = 24 % ell;

  std::int64_t sum = 0;
  for (std::uint64_t x = 0; x < ell; ++x) {
    sum += chi[v];
    v += d1;
    if (v >= ell) v -= ell;
    d1 += d2;
    if (d1 >= ell) d1 -= ell;
    d2 += d3;
    if (d2 >= ell) d2 -= ell;
  }
  return -sum;
}

}  // namespace

FrobeniusTrace trace_frobenius(const EllipticCurveQ& e, std::uint64_t ell) {
  if (!exact::is_prime(ell)) throw InvalidInput("trace_frobenius: " + std::to_string(ell) + " is not prime");
  if (!e.has_good_reduction(ell)) {
    throw BadReduction("[" + e.label() + "] has bad reduction at " + std::to_string(ell) + " (divides the discriminant)");
  }
  if (ell <= 3) {
    const auto affine = count_affine_points(e, ell);
    return {ell, static_cast<std::int64_t>(ell) - static_cast<std::int64_t>(affine)};
  }
  return {ell, character_sum_trace(e, ell)};
}

std::vector<FrobeniusTrace> trace_table(const EllipticCurveQ& e, std::uint64_t ell_max, unsigned workers) {
  return trace_table(e, 2, ell_max, workers);
}

std::vector<FrobeniusTrace> trace_table(const EllipticCurveQ& e, std::uint64_t ell_lo, std::uint64_t ell_hi,
                                        unsigned workers) {
  std::vector<std::uint64_t> good;
  for (auto ell : exact::primes_up_to(ell_hi)) {
    if (ell >= ell_lo && e.has_good_reduction(ell)) good.push_back(ell);
  }
  std::vector<FrobeniusTrace> out(good.size());
  const unsigned n = std::max(1U, workers);
  if (n == 1) {
    for (std::size_t i = 0; i < good.size(); ++i) out[i] = trace_frobenius(e, good[i]);
    return out;
  }
  // Largest primes first so the expensive tail is spread across workers.
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= good.size()) return;
      const std::size_t i = good.size() - 1 - k;
      out[i] = trace_frobenius(e, good[i]);
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(n);
  for (unsigned w = 0; w < n; ++w) threads.emplace_back(work);
  for (auto& t : threads) t.join();
  return out;
}

const std::vector<Integer>& cm_j_invariants() {
  static const std::vector<Integer> kCm{
      Integer::parse("-262537412640768000"),
      Integer::parse("-147197952000"),
      Integer::parse("-884736000"),
      Integer(-12288000),
      Integer(-884736),
      Integer(-32768),
      Integer(-3375),
      Integer(0),
      Integer(1728),
      Integer(8000),
      Integer(54000),
      Integer(287496),
      Integer(16581375),
  };
  return kCm;
}

bool is_cm_j(const Rational& j) {
  if (!j.is_integer()) return false;
  for (const auto& c : cm_j_invariants()) {
    if (c == j.num()) return true;
  }
  return false;
}

}  // namespace serre::elliptic
