#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "serre/exactmath.hpp"

using namespace serre;
using namespace serre::exact;

TEST(IntegerTest, DecimalRoundTrip) {
  for (const char* s : {"0", "-1", "123456789012345678901234567890", "-98765432109876543210"}) {
    EXPECT_EQ(Integer::parse(s).to_string(), s);
  }
  EXPECT_EQ(Integer::parse("+42"), Integer(42));
  EXPECT_EQ(Integer::parse("-0").to_string(), "0");
  EXPECT_THROW(Integer::parse(""), InvalidInput);
  EXPECT_THROW(Integer::parse("12a"), InvalidInput);
  EXPECT_THROW(Integer::parse("-"), InvalidInput);
}

TEST(IntegerTest, FloorDivisionAndRoots) {
  EXPECT_EQ(floor_div(Integer(-7), Integer(2)), Integer(-4));
  EXPECT_EQ(floor_mod(Integer(-7), Integer(2)), Integer(1));
  EXPECT_THROW(floor_div(Integer(1), Integer(0)), InvalidInput);
  EXPECT_THROW(exact_div(Integer(7), Integer(2)), InvalidInput);
  EXPECT_EQ(root_floor(Integer(1000), 3), Integer(10));
  EXPECT_EQ(root_floor(Integer(999), 3), Integer(9));
  EXPECT_EQ(root_ceil(Integer(999), 3), Integer(10));
  EXPECT_EQ(root_ceil(Integer(1000), 3), Integer(10));
  EXPECT_TRUE(is_squarefree(Integer(-30)));
  EXPECT_FALSE(is_squarefree(Integer(12)));
  EXPECT_FALSE(is_squarefree(Integer(0)));
}

TEST(RationalTest, NormalizeExamples) {
  const Rational a = rational_normalize(Integer(6), Integer(-4));
  EXPECT_EQ(a.num(), Integer(-3));
  EXPECT_EQ(a.den(), Integer(2));
  EXPECT_EQ(a.to_string(), "-3/2");

  const Rational z = rational_normalize(Integer(0), Integer(7));
  EXPECT_EQ(z.num(), Integer(0));
  EXPECT_EQ(z.den(), Integer(1));

  const Rational t = rational_normalize(Integer(27), Integer(1));
  EXPECT_EQ(t.to_string(), "27");

  EXPECT_THROW(rational_normalize(Integer(1), Integer(0)), InvalidInput);
  EXPECT_EQ(Rational::parse("10/-4"), rational_normalize(Integer(-5), Integer(2)));
  EXPECT_THROW(Rational::parse("1/0"), InvalidInput);
}

TEST(RationalTest, AddThenSubtractIsIdentity) {
  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  for (int i = 0; i < 1000; ++i) {
    const Rational x = rational_normalize(Integer(num(rng)), Integer(den(rng) * (i % 2 ? 1 : -1)));
    const Rational y = rational_normalize(Integer(num(rng)), Integer(den(rng)));
    const Rational back = (x + y) - y;
    ASSERT_EQ(back, x);
    ASSERT_GT(back.den(), Integer(0));
    ASSERT_EQ(gcd(back.num(), back.den()), Integer(1));
  }
}

TEST(PolynomialTest, ResultantExamples) {
  EXPECT_EQ(poly_resultant(IntPolynomial{-1, 1}, IntPolynomial{1, 1}), Integer(2));
  EXPECT_EQ(poly_resultant(IntPolynomial{1, 0, 1}, IntPolynomial{0, 1}), Integer(1));
  EXPECT_EQ(poly_resultant(IntPolynomial{-1, 0, 1}, IntPolynomial{-2, 1}), Integer(3));
  EXPECT_EQ(poly_resultant(IntPolynomial{-1, 0, 1}, IntPolynomial{-1, 1}), Integer(0));
  EXPECT_THROW(poly_resultant(IntPolynomial{}, IntPolynomial{1, 1}), InvalidInput);
  EXPECT_THROW(poly_resultant(IntPolynomial{1, 1}, IntPolynomial{}), InvalidInput);
  // Constants: Res(c, g) = c^deg g.
  EXPECT_EQ(poly_resultant(IntPolynomial{3}, IntPolynomial{1, 0, 1}), Integer(9));
}

namespace {

std::vector<long> random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 4);
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::vector<long> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coeff(rng);
  while (c.back() == 0) c.back() = coeff(rng);
  return c;
}

IntPolynomial to_poly(const std::vector<long>& c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(v);
}

}  // namespace

TEST(PolynomialTest, ResultantMatchesSylvesterDeterminant) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const auto f = random_poly(rng);
    const auto g = random_poly(rng);
    const Integer expected(oracle::sylvester_resultant(f, g));
    ASSERT_EQ(poly_resultant(to_poly(f), to_poly(g)), expected)
        << to_poly(f).to_string() << " , " << to_poly(g).to_string();
  }
}

TEST(PolynomialTest, ResultantSwapSign) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto f = to_poly(random_poly(rng));
    const auto g = to_poly(random_poly(rng));
    const int s = (f.degree() * g.degree()) % 2 == 0 ? 1 : -1;
    ASSERT_EQ(poly_resultant(f, g), poly_resultant(g, f) * Integer(s));
  }
}

TEST(PolynomialTest, ResultantOfProductIsMultiplicative) {
  // Res(f1 f2, g) = Res(f1, g) Res(f2, g) exercises long remainder sequences.
  const IntPolynomial f1{7, -3, 0, 2};
  const IntPolynomial f2{-5, 1, 4, 0, 1};
  const IntPolynomial g{1, 1, -6, 0, 3, 1};
  EXPECT_EQ(poly_resultant(f1 * f2, g), poly_resultant(f1, g) * poly_resultant(f2, g));
}

TEST(PolynomialTest, EvaluationAndArithmetic) {
  const IntPolynomial f{-9, 0, 1};  // t^2 - 9
  EXPECT_EQ(f.eval(Integer(3)), Integer(0));
  EXPECT_EQ(f.eval(rational_normalize(Integer(1), Integer(2))), rational_normalize(Integer(-35), Integer(4)));
  EXPECT_EQ((f * IntPolynomial{1, 1}).degree(), 3);
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ(IntPolynomial({1, 1}).pow(3), (IntPolynomial{1, 3, 3, 1}));
  EXPECT_EQ(f.to_string(), "t^2 - 9");
  EXPECT_EQ(pseudo_remainder(IntPolynomial{1, 0, 0, 2}, IntPolynomial{1, 3}), IntPolynomial{25});
}

TEST(PrimesTest, LegendreExamples) {
  EXPECT_EQ(legendre(Integer(0), Integer(7)), 0);
  EXPECT_EQ(legendre(Integer(2), Integer(7)), 1);
  EXPECT_EQ(legendre(Integer(5), Integer(31)), 1);
  EXPECT_EQ(legendre(Integer(-1), Integer(7)), -1);
  EXPECT_THROW(legendre(Integer(3), Integer(2)), InvalidInput);
  EXPECT_THROW(legendre(Integer(3), Integer(9)), InvalidInput);
  EXPECT_THROW(legendre(Integer(3), Integer(-7)), InvalidInput);
}

TEST(PrimesTest, LegendreIsMultiplicative) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> any(-100000, 100000);
  for (long p : {5, 7, 11, 13}) {
    for (int i = 0; i < 100; ++i) {
      const long a = any(rng);
      const long b = any(rng);
      ASSERT_EQ(legendre(Integer(a) * Integer(b), Integer(p)), legendre(Integer(a), Integer(p)) * legendre(Integer(b), Integer(p)));
      ASSERT_EQ(legendre(Integer(a), Integer(p)), oracle::legendre_brute(a, p));
    }
  }
}

TEST(PrimesTest, Sieve) {
  EXPECT_EQ(primes_up_to(std::uint64_t{10}), (std::vector<std::uint64_t>{2, 3, 5, 7}));
  EXPECT_TRUE(primes_up_to(std::uint64_t{1}).empty());
  EXPECT_EQ(primes_up_to(std::uint64_t{30}), (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
  EXPECT_EQ(primes_up_to(std::uint64_t{100000}).size(), 9592U);
}

TEST(PrimesTest, IsPrime) {
  EXPECT_TRUE(is_prime(std::uint64_t{13}));
  EXPECT_FALSE(is_prime(std::uint64_t{1}));
  EXPECT_FALSE(is_prime(std::uint64_t{0}));
  EXPECT_FALSE(is_prime(std::uint64_t{4097}));  // 17 * 241
  EXPECT_TRUE(is_prime(std::uint64_t{18446744073709551557ULL}));  // largest prime below 2^64
  EXPECT_FALSE(is_prime(std::uint64_t{3215031751ULL}));           // strong pseudoprime to 2, 3, 5, 7
  EXPECT_TRUE(is_prime(Integer::parse("18446744073709551629")));  // smallest prime above 2^64
  // Agreement with the sieve.
  const auto sieve = primes_up_to(std::uint64_t{20000});
  std::size_t i = 0;
  for (std::uint64_t n = 0; n <= 20000; ++n) {
    const bool expected = i < sieve.size() && sieve[i] == n;
    if (expected) ++i;
    ASSERT_EQ(is_prime(n), expected) << n;
  }
}

TEST(PrimesTest, PrimePowers) {
  EXPECT_TRUE(is_prime_power(Integer(2)));
  EXPECT_TRUE(is_prime_power(Integer(4)));
  EXPECT_TRUE(is_prime_power(Integer(243)));
  EXPECT_FALSE(is_prime_power(Integer(12)));
  EXPECT_FALSE(is_prime_power(Integer(1)));
  EXPECT_EQ(prime_divisors(360), (std::vector<std::uint64_t>{2, 3, 5}));
}
