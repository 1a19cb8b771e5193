#include <gtest/gtest.h>

#include <random>

#include "chatelet/arith.hpp"

namespace chatelet {
namespace {

// Independent oracle: plain trial division on 64-bit integers.
std::vector<std::pair<std::uint64_t, unsigned>> naive_factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

bool naive_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

TEST(IsPrime, Examples) {
  EXPECT_TRUE(is_prime(Integer(17)));
  EXPECT_FALSE(is_prime(Integer(1)));
  EXPECT_FALSE(is_prime(Integer(697)));
  EXPECT_FALSE(is_prime(Integer(0)));
}

TEST(IsPrime, AgreesWithTrialDivisionBelow100000) {
  for (unsigned n = 0; n < 100000; ++n) ASSERT_EQ(is_prime(Integer(n)), naive_prime(n)) << n;
}

TEST(IsPrime, StrongPseudoprimesAndLargePrimes) {
  // Strong pseudoprimes to several small bases.
  EXPECT_FALSE(is_prime(Integer("3215031751")));
  EXPECT_FALSE(is_prime(Integer("3825123056546413051")));
  EXPECT_TRUE(is_prime(Integer("18446744073709551557")));  // largest prime below 2^64
  EXPECT_FALSE(is_prime(Integer("18446744073709551617")));  // 2^64 + 1 = 274177 * 67280421310721
}

TEST(IsPrime, AboveCertifiedRangeThrowsForProbablePrimes) {
  Integer p = pow(Integer(2), 127) - 1;  // Mersenne prime
  EXPECT_THROW(is_prime(p), OutOfCertifiedRange);
  EXPECT_FALSE(is_prime(p * 3));
}

TEST(Factorize, Examples) {
  Factorization expected{{Integer(2), 2}, {Integer(3), 1}, {Integer(17), 1}, {Integer(29), 1}};
  EXPECT_EQ(factorize(Integer(5916)), expected);
  EXPECT_TRUE(factorize(Integer(1)).empty());
  Factorization f697{{Integer(17), 1}, {Integer(41), 1}};
  EXPECT_EQ(factorize(Integer(697)), f697);
  EXPECT_EQ(factorize(Integer(-697)), f697);
  EXPECT_THROW(factorize(Integer(0)), InvalidArgument);
}

TEST(Factorize, RoundTripRandomTo2Pow48) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::uint64_t> dist(1, (std::uint64_t{1} << 48));
  for (int i = 0; i < 300; ++i) {
    std::uint64_t n = dist(rng);
    Factorization f = factorize(Integer(static_cast<unsigned long>(n)));
    ASSERT_EQ(multiply_out(f), Integer(static_cast<unsigned long>(n)));
    auto oracle = naive_factor(n);
    ASSERT_EQ(f.size(), oracle.size()) << n;
    for (std::size_t k = 0; k < f.size(); ++k) {
      EXPECT_EQ(f[k].prime, Integer(static_cast<unsigned long>(oracle[k].first)));
      EXPECT_EQ(f[k].exponent, oracle[k].second);
    }
  }
}

TEST(Factorize, SemiprimesBeyondTrialDivision) {
  Integer p("1000000007"), q("998244353"), r("4294967311");
  EXPECT_EQ(multiply_out(factorize(p * q)), p * q);
  Factorization f = factorize(p * q * q * r);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0].prime, q);
  EXPECT_EQ(f[0].exponent, 2u);
  EXPECT_EQ(f[1].prime, p);
  EXPECT_EQ(f[2].prime, r);
  // Above 2^64 rho runs on multiprecision integers.
  Integer top("18446744073709551557");
  Factorization g = factorize(p * top);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0].prime, p);
  EXPECT_EQ(g[1].prime, top);
  // A cofactor that is a probable prime above 2^64 cannot be certified.
  Integer mersenne89 = pow(Integer(2), 89) - 1;
  EXPECT_THROW(factorize(mersenne89 * 3), OutOfCertifiedRange);
}

TEST(Legendre, Examples) {
  EXPECT_EQ(legendre(Integer(7), Integer(17)), -1);
  EXPECT_EQ(legendre(Integer(2), Integer(7)), 1);
  EXPECT_EQ(legendre(Integer(17), Integer(17)), 0);
  EXPECT_THROW(legendre(Integer(3), Integer(2)), InvalidArgument);
  EXPECT_THROW(legendre(Integer(3), Integer(15)), InvalidArgument);
}

TEST(Legendre, MatchesSquareTable) {
  for (unsigned p : {3u, 5u, 7u, 11u, 13u, 17u, 41u}) {
    std::vector<bool> square(p, false);
    for (unsigned z = 1; z < p; ++z) square[z * z % p] = true;
    for (unsigned a = 0; a < 2 * p; ++a) {
      int expected = a % p == 0 ? 0 : square[a % p] ? 1 : -1;
      EXPECT_EQ(legendre(Integer(a), Integer(p)), expected);
    }
  }
}

TEST(Legendre, CompletelyMultiplicative) {
  std::mt19937_64 rng(7);
  const std::vector<unsigned> primes{3, 5, 7, 11, 13, 17, 101, 1009, 65537};
  for (int i = 0; i < 500; ++i) {
    Integer p(primes[rng() % primes.size()]);
    Integer a(static_cast<long>(rng() % 100000) - 50000), b(static_cast<long>(rng() % 100000) - 50000);
    EXPECT_EQ(legendre(a * b, p), legendre(a, p) * legendre(b, p));
  }
}

TEST(ModInverse, Examples) {
  EXPECT_EQ(mod_inverse(Integer(7), Integer(17)), 5);
  EXPECT_EQ(mod_inverse(Integer(1), Integer(99)), 1);
  EXPECT_EQ(mod_inverse(Integer(41), Integer(17)), 5);
  EXPECT_THROW(mod_inverse(Integer(6), Integer(9)), InvalidArgument);
}

TEST(ModInverse, RandomCoprimePairs) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    Integer m(static_cast<unsigned long>(rng() % 1000000 + 2));
    Integer a(static_cast<long>(rng() % 2000000) - 1000000);
    if (gcd(a, m) != 1) continue;
    Integer x = mod_inverse(a, m);
    EXPECT_GE(x, 1);
    EXPECT_LT(x, m);
    EXPECT_EQ(mod(a * x, m), 1 % m);
  }
}

TEST(Valuation, Examples) {
  EXPECT_EQ(valuation(Rational(697), Integer(17)), 1);
  EXPECT_EQ(valuation(make_rational(Integer(1), Integer(4)), Integer(2)), -2);
  EXPECT_EQ(valuation(Rational(41), Integer(17)), 0);
  EXPECT_THROW(valuation(Rational(0), Integer(17)), InfiniteValuation);
}

TEST(SquarefreePart, Examples) {
  EXPECT_EQ(squarefree_part(Rational(18)), 2);
  EXPECT_EQ(squarefree_part(make_rational(Integer(-4), Integer(9))), -1);
  EXPECT_EQ(squarefree_part(make_rational(Integer(697), Integer(25))), 697);
  EXPECT_THROW(squarefree_part(Rational(0)), InvalidArgument);
}

TEST(SquarefreePart, InvariantUnderSquares) {
  std::mt19937_64 rng(3);
  auto draw = [&] {
    long n = static_cast<long>(rng() % 20000) - 10000;
    long d = static_cast<long>(rng() % 5000) + 1;
    return make_rational(Integer(n == 0 ? 1 : n), Integer(d));
  };
  for (int i = 0; i < 500; ++i) {
    Rational q = draw(), r = draw();
    Integer s = squarefree_part(q);
    EXPECT_EQ(squarefree_part(q * r * r), s);
    EXPECT_TRUE(is_squarefree(s));
    EXPECT_TRUE(is_rational_square(q / Rational(s)));
  }
}

TEST(Parse, RationalsAndIntegers) {
  EXPECT_EQ(parse_rational("-4/6"), make_rational(Integer(-2), Integer(3)));
  EXPECT_EQ(parse_rational("17"), Rational(17));
  EXPECT_EQ(parse_integer(" 12 "), 12);
  EXPECT_THROW(parse_rational("1/0"), InvalidArgument);
  EXPECT_THROW(parse_rational("abc"), InvalidArgument);
  EXPECT_THROW(parse_integer("1/2"), InvalidArgument);
}

TEST(Squares, PerfectAndRational) {
  EXPECT_TRUE(is_perfect_square(Integer(0)));
  EXPECT_TRUE(is_perfect_square(Integer(144)));
  EXPECT_FALSE(is_perfect_square(Integer(-4)));
  EXPECT_TRUE(is_rational_square(make_rational(Integer(9), Integer(4))));
  EXPECT_FALSE(is_rational_square(make_rational(Integer(9), Integer(8))));
  EXPECT_EQ(isqrt(Integer(99)), 9);
}

}  // namespace
}  // namespace chatelet
