#pragma once

// Exact integer and rational arithmetic plus the elementary number theory
// used throughout the library. Integers and rationals are GMP values; every
// Rational handed out by this module is canonical (reduced, denominator > 0).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace chatelet {

using Integer = mpz_class;
using Rational = mpq_class;

/// Precondition violated by a caller (zero argument, composite modulus, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The valuation of zero was requested. Kept distinct from InvalidArgument so
/// callers can tell "+infinity" apart from malformed input.
class InfiniteValuation : public std::domain_error {
 public:
  InfiniteValuation() : std::domain_error("valuation of zero is +infinity") {}
};

/// A primality decision was needed for an integer outside the range where the
/// Miller-Rabin witness set is known to be deterministic.
class OutOfCertifiedRange : public std::range_error {
 public:
  explicit OutOfCertifiedRange(const Integer& n)
      : std::range_error("out of certified range: " + n.get_str()) {}
};

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

/// Primes strictly increasing, each certified prime.
using Factorization = std::vector<PrimePower>;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "n" or "n/d" (optional leading '-'); throws InvalidArgument otherwise.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

/// Deterministic for n < 2^64. Larger n: returns false when a strong
/// probable-prime test proves n composite, and throws OutOfCertifiedRange
/// otherwise.
bool is_prime(const Integer& n);

/// Factorization of |n|. Trial division by small primes, then Brent's
/// variant of Pollard rho with a fixed restart schedule.
Factorization factorize(const Integer& n);

/// Distinct primes dividing |n| (empty for n = +-1).
std::vector<Integer> prime_divisors(const Integer& n);

Integer multiply_out(const Factorization& f);

/// Legendre symbol (a/p) for an odd prime p.
int legendre(const Integer& a, const Integer& p);

/// Inverse of a modulo m in [1, m-1].
Integer mod_inverse(const Integer& a, const Integer& m);

/// Exponent of the prime p in q. Throws InfiniteValuation for q = 0.
long valuation(const Rational& q, const Integer& p);
long valuation(const Integer& n, const Integer& p);

/// Removes every factor p from n, returning the exponent removed.
long remove_factor(Integer& n, const Integer& p);

/// Signed squarefree integer d with q = d * (rational square).
Integer squarefree_part(const Rational& q);

bool is_squarefree(const Integer& n);
bool is_perfect_square(const Integer& n);
bool is_rational_square(const Rational& q);
/// Floor square root of n >= 0.
Integer isqrt(const Integer& n);

/// Nonnegative residue of n modulo m > 0.
Integer mod(const Integer& n, const Integer& m);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer pow(const Integer& base, unsigned long exponent);

}  // namespace chatelet
