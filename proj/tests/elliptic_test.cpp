#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "serre/cli.hpp"
#include "serre/elliptic.hpp"

using namespace serre;
using namespace serre::elliptic;

namespace {

EllipticCurveQ curve(long a1, long a2, long a3, long a4, long a6) {
  return EllipticCurveQ::from_coeffs(a1, a2, a3, a4, a6);
}

std::vector<long> small_coeffs(const EllipticCurveQ& e) {
  std::vector<long> out;
  for (const auto& a : e.coeffs()) out.push_back(a.to_int64());
  return out;
}

// A random nonsingular curve with small coefficients.
EllipticCurveQ random_curve(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> small(-1, 1);
  std::uniform_int_distribution<long> big(-50, 50);
  for (;;) {
    try {
      return curve(small(rng), small(rng), small(rng), big(rng), big(rng));
    } catch (const SingularCurve&) {
    }
  }
}

}  // namespace

TEST(CurveTest, InvariantsOfElevenA1) {
  const auto e = curve(0, -1, 1, -10, -20);
  EXPECT_EQ(e.b2(), Integer(-4));
  EXPECT_EQ(e.b4(), Integer(-20));
  EXPECT_EQ(e.b6(), Integer(-79));
  EXPECT_EQ(e.c4(), Integer(496));
  EXPECT_EQ(e.c6(), Integer(20008));
  EXPECT_EQ(e.discriminant(), Integer(-161051));
  EXPECT_EQ(e.j(), exact::rational_normalize(Integer(-122023936), Integer(161051)));
  EXPECT_EQ(e.label(), "0,-1,1,-10,-20");
  EXPECT_TRUE(e.has_good_reduction(2));
  EXPECT_FALSE(e.has_good_reduction(11));
}

TEST(CurveTest, ParseAndErrors) {
  EXPECT_EQ(EllipticCurveQ::parse("0,-1,1,-10,-20"), curve(0, -1, 1, -10, -20));
  EXPECT_EQ(EllipticCurveQ::parse(" 0, 0,0, -54 ,216"), curve(0, 0, 0, -54, 216));
  EXPECT_THROW(EllipticCurveQ::parse("0,0,0,1"), InvalidInput);
  EXPECT_THROW(EllipticCurveQ::parse("0,0,0,1,x"), InvalidInput);
  EXPECT_THROW(curve(0, 0, 0, 0, 0), SingularCurve);
  EXPECT_THROW(curve(0, 0, 0, -3, 2), SingularCurve);  // (x-1)^2 (x+2)
}

TEST(CurveTest, TheoremCurvesHaveTheNonCmJ) {
  EXPECT_EQ(cli::curve_e1().j(), Rational(Integer(-5000)));
  EXPECT_EQ(cli::curve_e2().j(), Rational(Integer(-1728)));
  EXPECT_FALSE(is_cm_j(cli::curve_e1().j()));
  EXPECT_FALSE(is_cm_j(cli::curve_e2().j()));
}

TEST(CurveTest, CmTable) {
  EXPECT_EQ(cm_j_invariants().size(), 13U);
  EXPECT_TRUE(is_cm_j(Rational(Integer(1728))));
  EXPECT_TRUE(is_cm_j(Rational(Integer::parse("-262537412640768000"))));
  EXPECT_FALSE(is_cm_j(Rational(Integer(-1728))));
  EXPECT_FALSE(is_cm_j(exact::rational_normalize(Integer(1), Integer(2))));
  // y^2 = x^3 - x has j = 1728; y^2 = x^3 + 1 has j = 0.
  EXPECT_TRUE(is_cm_j(curve(0, 0, 0, -1, 0).j()));
  EXPECT_TRUE(is_cm_j(curve(0, 0, 0, 0, 1).j()));
}

TEST(TraceTest, KnownTracesOfElevenA1) {
  const auto e = curve(0, -1, 1, -10, -20);
  const std::vector<std::pair<std::uint64_t, std::int64_t>> known{{2, -2}, {3, -1}, {5, 1}, {7, -2},
                                                                  {13, 4}, {17, -2}, {19, 0}, {23, -1}};
  for (auto [ell, a] : known) EXPECT_EQ(trace_frobenius(e, ell).a_ell, a) << "ell = " << ell;
  EXPECT_THROW(trace_frobenius(e, 11), BadReduction);
  EXPECT_THROW(trace_frobenius(e, 9), InvalidInput);
  EXPECT_THROW(trace_frobenius(e, 1), InvalidInput);
}

TEST(TraceTest, CharacterSumMatchesEnumeration) {
  std::mt19937_64 rng(99);
  const auto primes = exact::primes_up_to(std::uint64_t{199});
  for (int i = 0; i < 10; ++i) {
    const auto e = random_curve(rng);
    const auto a = small_coeffs(e);
    for (auto ell : primes) {
      if (!e.has_good_reduction(ell)) continue;
      const auto ell_l = static_cast<long>(ell);
      ASSERT_EQ(trace_frobenius(e, ell).a_ell, oracle::naive_trace(a, ell_l)) << e.label() << " ell = " << ell;
      ASSERT_EQ(static_cast<long>(count_affine_points(e, ell)), oracle::naive_point_count(a, ell_l) - 1);
    }
  }
}

TEST(TraceTest, HasseBound) {
  std::mt19937_64 rng(5);
  const auto primes = exact::primes_up_to(std::uint64_t{1000});
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  int checked = 0;
  while (checked < 300) {
    const auto e = random_curve(rng);
    const auto ell = primes[pick(rng)];
    if (!e.has_good_reduction(ell)) continue;
    const auto a = trace_frobenius(e, ell).a_ell;
    ASSERT_LE(a * a, static_cast<std::int64_t>(4 * ell));
    ++checked;
  }
}

TEST(TraceTest, TableIsAscendingGoodPrimesAndThreadIndependent) {
  const auto e = cli::curve_e1();
  const auto serial = trace_table(e, 3000);
  const auto threaded = trace_table(e, 3000, 4);
  EXPECT_EQ(serial, threaded);
  std::uint64_t prev = 0;
  for (const auto& t : serial) {
    EXPECT_GT(t.ell, prev);
    EXPECT_TRUE(e.has_good_reduction(t.ell));
    prev = t.ell;
  }
  const auto tail = trace_table(e, 1000, 3000, 2);
  std::vector<FrobeniusTrace> expected;
  for (const auto& t : serial)
    if (t.ell >= 1000) expected.push_back(t);
  EXPECT_EQ(tail, expected);
}

TEST(TwistTest, ShortModelDiscriminantAndTraces) {
  const auto e = cli::curve_e1();
  for (long d : {-1, 2, -3, 5, -15}) {
    const auto t = quadratic_twist(e, Integer(d));
    EXPECT_EQ(t.discriminant(), e.discriminant() * Integer(d).pow(6));
    EXPECT_EQ(t.j(), e.j());
    for (auto ell : exact::primes_up_to(std::uint64_t{500})) {
      if (ell == 2 || !e.has_good_reduction(ell) || Integer(d).mod_u64(ell) == 0) continue;
      ASSERT_EQ(trace_frobenius(t, ell).a_ell, legendre(Integer(d), Integer(static_cast<long long>(ell))) *
                                                   trace_frobenius(e, ell).a_ell)
          << "d = " << d << " ell = " << ell;
    }
  }
}

TEST(TwistTest, LongModelDiscriminantAndTraces) {
  const auto e = curve(0, -1, 1, -10, -20);
  const auto t = quadratic_twist(e, Integer(-1));
  EXPECT_EQ(t.discriminant(), e.discriminant() * Integer(4096));
  EXPECT_EQ(t.j(), e.j());
  for (auto ell : exact::primes_up_to(std::uint64_t{300})) {
    if (ell == 2 || ell == 11) continue;
    ASSERT_EQ(trace_frobenius(t, ell).a_ell, legendre(Integer(-1), Integer(static_cast<long long>(ell))) *
                                                 trace_frobenius(e, ell).a_ell);
  }
}

TEST(TwistTest, RejectsNonSquarefree) {
  const auto e = cli::curve_e1();
  EXPECT_THROW(quadratic_twist(e, Integer(0)), InvalidInput);
  EXPECT_THROW(quadratic_twist(e, Integer(4)), InvalidInput);
  EXPECT_THROW(quadratic_twist(e, Integer(-12)), InvalidInput);
}
