#include "chatelet/arith.hpp"

#include <algorithm>
#include <cctype>
#include <array>
#include <limits>
#include <regex>

namespace chatelet {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr unsigned kTrialLimit = 4096;

const std::vector<unsigned>& small_primes() {
  static const std::vector<unsigned> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<unsigned> out;
    for (unsigned i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool fits_u64(const Integer& n) { return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

u64 to_u64(const Integer& n) {
  u64 out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
  return out;
}

Integer from_u64(u64 v) {
  Integer out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Witnesses {2..37} are deterministic for every n < 3.3e24, hence all of u64.
bool miller_rabin_u64(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : witnesses) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : witnesses) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// Brent's cycle detection with batched gcds. Returns a nontrivial factor of
// the odd composite n, trying increments c = 1, 2, ... in order.
u64 rho_u64(u64 n) {
  for (u64 c = 1;; ++c) {
    auto step = [&](u64 x) {
      u64 y = mulmod(x, x, n) + c;
      return y >= n ? y - n : y;
    };
    u64 y = 2, x = 2, ys = 2, q = 1, g = 1;
    constexpr u64 batch = 128;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      for (u64 k = 0; k < r && g == 1; k += batch) {
        ys = y;
        for (u64 i = 0; i < std::min(batch, r - k); ++i) {
          y = step(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
      }
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

Integer rho_mpz(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    auto step = [&](const Integer& x) {
      Integer y = x * x + c;
      mpz_mod(y.get_mpz_t(), y.get_mpz_t(), n.get_mpz_t());
      return y;
    };
    Integer y = 2, x = 2, ys = 2, q = 1, g = 1, diff;
    constexpr unsigned long batch = 128;
    for (unsigned long r = 1; g == 1; r <<= 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      for (unsigned long k = 0; k < r && g == 1; k += batch) {
        ys = y;
        for (unsigned long i = 0; i < std::min(batch, r - k); ++i) {
          y = step(y);
          diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

Integer find_factor(const Integer& n) {
  if (mpz_perfect_square_p(n.get_mpz_t())) return isqrt(n);
  if (fits_u64(n)) return from_u64(rho_u64(to_u64(n)));
  return rho_mpz(n);
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  static const std::regex pattern(R"(^\s*(-?[0-9]+)(\s*/\s*([0-9]+))?\s*$)");
  std::cmatch m;
  if (!std::regex_match(text.begin(), text.end(), m, pattern)) {
    throw InvalidArgument("malformed rational: '" + std::string(text) + "'");
  }
  Integer num(m[1].str());
  Integer den = m[3].matched ? Integer(m[3].str()) : Integer(1);
  return make_rational(num, den);
}

Integer parse_integer(std::string_view text) {
  static const std::regex pattern(R"(^\s*-?[0-9]+\s*$)");
  if (!std::regex_match(text.begin(), text.end(), pattern)) {
    throw InvalidArgument("malformed integer: '" + std::string(text) + "'");
  }
  std::string trimmed(text);
  trimmed.erase(std::remove_if(trimmed.begin(), trimmed.end(), ::isspace), trimmed.end());
  return Integer(trimmed);
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return miller_rabin_u64(to_u64(n));
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return false;
  throw OutOfCertifiedRange(n);
}

Factorization factorize(const Integer& n) {
  if (n == 0) throw InvalidArgument("factorize: zero has no factorization");
  Integer m = abs(n);
  std::vector<Integer> primes;
  if (fits_u64(m)) {
    u64 r = to_u64(m);
    for (unsigned p : small_primes()) {
      if (r == 1 || static_cast<u64>(p) * p > r) break;
      while (r % p == 0) {
        r /= p;
        primes.emplace_back(p);
      }
    }
    m = from_u64(r);
  } else {
    for (unsigned p : small_primes()) {
      if (m == 1) break;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        m /= p;
        primes.emplace_back(p);
      }
    }
  }
  std::vector<Integer> pending;
  if (m != 1) pending.push_back(m);
  while (!pending.empty()) {
    Integer c = std::move(pending.back());
    pending.pop_back();
    if (is_prime(c)) {
      primes.push_back(std::move(c));
      continue;
    }
    Integer f = find_factor(c);
    pending.push_back(c / f);
    pending.push_back(std::move(f));
  }
  std::sort(primes.begin(), primes.end());
  Factorization out;
  for (auto& p : primes) {
    if (!out.empty() && out.back().prime == p) {
      ++out.back().exponent;
    } else {
      out.push_back({p, 1});
    }
  }
  return out;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> out;
  for (auto& pe : factorize(n)) out.push_back(pe.prime);
  return out;
}

Integer multiply_out(const Factorization& f) {
  Integer out = 1;
  for (const auto& pe : f) out *= pow(pe.prime, pe.exponent);
  return out;
}

int legendre(const Integer& a, const Integer& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_prime(p)) {
    throw InvalidArgument("legendre: modulus must be an odd prime, got " + p.get_str());
  }
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  if (m < 2) throw InvalidArgument("mod_inverse: modulus must be >= 2");
  Integer out;
  if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw InvalidArgument("mod_inverse: " + a.get_str() + " is not invertible mod " + m.get_str());
  }
  return out;
}

long remove_factor(Integer& n, const Integer& p) {
  if (n == 0) throw InfiniteValuation();
  return static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long valuation(const Integer& n, const Integer& p) {
  if (p < 2) throw InvalidArgument("valuation: p must be prime");
  Integer m = n;
  return remove_factor(m, p);
}

long valuation(const Rational& q, const Integer& p) {
  if (q == 0) throw InfiniteValuation();
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

Integer squarefree_part(const Rational& q) {
  if (q == 0) throw InvalidArgument("squarefree_part: zero has no square class");
  Integer out = sgn(q) < 0 ? -1 : 1;
  for (const auto& pe : factorize(q.get_num() * q.get_den())) {
    if (pe.exponent % 2 == 1) out *= pe.prime;
  }
  return out;
}

bool is_squarefree(const Integer& n) {
  if (n == 0) return false;
  for (const auto& pe : factorize(n)) {
    if (pe.exponent > 1) return false;
  }
  return true;
}

bool is_perfect_square(const Integer& n) { return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()); }

bool is_rational_square(const Rational& q) {
  return is_perfect_square(q.get_num()) && is_perfect_square(q.get_den());
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw InvalidArgument("isqrt of negative");
  Integer out;
  mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
  return out;
}

Integer mod(const Integer& n, const Integer& m) {
  Integer out;
  mpz_mod(out.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return out;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

}  // namespace chatelet
