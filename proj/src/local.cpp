#include "chatelet/local.hpp"

#include <algorithm>

namespace chatelet {

Place Place::finite(const Integer& p) {
  if (!is_prime(p)) throw InvalidArgument("place: " + p.get_str() + " is not prime");
  return Place(p);
}

std::string Place::to_string() const { return is_real() ? "inf" : prime_.get_str(); }

Place Place::parse(const std::string& text) {
  if (text == "inf" || text == "real" || text == "oo") return real();
  return finite(parse_integer(text));
}

std::strong_ordering Place::operator<=>(const Place& other) const {
  int c = cmp(prime_, other.prime_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

namespace {

struct LocalUnit {
  long val = 0;
  // Product numerator * denominator with every p removed; same square class
  // as the unit part.
  Integer unit;
};

LocalUnit split_at(const Rational& q, const Integer& p) {
  if (q == 0) throw InvalidArgument("hilbert symbol of zero");
  Integer num = q.get_num(), den = q.get_den();
  long v = remove_factor(num, p) - remove_factor(den, p);
  return {v, num * den};
}

int mod8(const Integer& u) { return static_cast<int>(mpz_fdiv_ui(u.get_mpz_t(), 8)); }

int eps2(int u) { return ((u - 1) / 2) & 1; }
int omega2(int u) { return ((u * u - 1) / 8) & 1; }

}  // namespace

Symbol hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
  if (a == 0 || b == 0) throw InvalidArgument("hilbert_symbol: arguments must be nonzero");
  if (v.is_real()) return (sgn(a) < 0 && sgn(b) < 0) ? Symbol::kMinusOne : Symbol::kPlusOne;
  const Integer& p = v.prime();
  LocalUnit sa = split_at(a, p), sb = split_at(b, p);
  int exponent = 0;
  if (p == 2) {
    int ua = mod8(sa.unit), ub = mod8(sb.unit);
    exponent = eps2(ua) * eps2(ub) + (sa.val & 1) * omega2(ub) + (sb.val & 1) * omega2(ua);
    return (exponent & 1) ? Symbol::kMinusOne : Symbol::kPlusOne;
  }
  int sign = 1;
  const bool p_is_3_mod_4 = mpz_fdiv_ui(p.get_mpz_t(), 4) == 3;
  if ((sa.val & 1) && (sb.val & 1) && p_is_3_mod_4) sign = -sign;
  if (sb.val & 1) sign *= mpz_legendre(sa.unit.get_mpz_t(), p.get_mpz_t());
  if (sa.val & 1) sign *= mpz_legendre(sb.unit.get_mpz_t(), p.get_mpz_t());
  return sign == 1 ? Symbol::kPlusOne : Symbol::kMinusOne;
}

namespace {

Integer square_scaled(const Rational& q) { return q.get_num() * q.get_den(); }

}  // namespace

unsigned oracle_min_precision(const Rational& a, const Rational& b, const Integer& p) {
  long va = valuation(square_scaled(a), p), vb = valuation(square_scaled(b), p);
  return static_cast<unsigned>(2 * std::max(va, vb) + (p == 2 ? 5 : 3));
}

Symbol hilbert_bruteforce_oracle(const Rational& a, const Rational& b, const Integer& p, unsigned precision) {
  if (a == 0 || b == 0) throw InvalidArgument("oracle: arguments must be nonzero");
  if (!is_prime(p)) throw InvalidArgument("oracle: p must be prime");
  if (precision < oracle_min_precision(a, b, p)) throw InvalidArgument("oracle: insufficient precision");
  Integer modulus_big = pow(p, precision);
  if (modulus_big > (Integer(1) << 27)) throw InvalidArgument("oracle: modulus too large to enumerate");
  const std::uint64_t m = modulus_big.get_ui();
  const std::uint64_t pp = p.get_ui();
  const std::uint64_t am = mod(square_scaled(a), modulus_big).get_ui();
  const std::uint64_t bm = mod(square_scaled(b), modulus_big).get_ui();

  std::vector<char> is_square(m, 0);
  for (std::uint64_t z = 0; z < m; ++z) is_square[z * z % m] = 1;

  // A primitive solution has x or y a unit (otherwise z is forced to be a
  // non-unit too); scale that coordinate to 1.
  for (std::uint64_t y = 0; y < m; ++y) {
    if (is_square[(am + bm * (y * y % m)) % m]) return Symbol::kPlusOne;
  }
  for (std::uint64_t x = 0; x < m; x += pp) {
    if (is_square[(am * (x * x % m) + bm) % m]) return Symbol::kPlusOne;
  }
  return Symbol::kMinusOne;
}

std::vector<Place> support_places(const std::vector<Rational>& values) {
  std::vector<Integer> primes{Integer(2)};
  for (const auto& q : values) {
    if (q == 0) continue;
    for (const Integer* part : {&q.get_num(), &q.get_den()}) {
      if (abs(*part) == 1) continue;
      for (auto& p : prime_divisors(*part)) primes.push_back(p);
    }
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<Place> out{Place::real()};
  for (const auto& p : primes) out.push_back(Place::finite(p));
  return out;
}

bool product_formula_check(const Rational& a, const Rational& b) {
  Symbol product = Symbol::kPlusOne;
  for (const auto& v : support_places({a, b})) product = product * hilbert_symbol(a, b, v);
  return product == Symbol::kPlusOne;
}

bool is_local_square(const Rational& t, const Place& v) {
  if (t == 0) throw InvalidArgument("is_local_square: zero");
  if (v.is_real()) return sgn(t) > 0;
  LocalUnit s = split_at(t, v.prime());
  if (s.val & 1) return false;
  if (v.prime() == 2) return mod8(s.unit) == 1;
  return mpz_legendre(s.unit.get_mpz_t(), v.prime().get_mpz_t()) == 1;
}

bool conic_solvable_local(const Rational& alpha, const Rational& r, const Place& v) {
  if (alpha == 0) throw InvalidArgument("conic: alpha must be nonzero");
  if (r == 0) return true;
  return hilbert_symbol(alpha, r, v) == Symbol::kPlusOne;
}

std::optional<ConicWitness> find_conic_witness(const Rational& alpha, const Rational& r, unsigned long bound) {
  if (r == 0) return ConicWitness{0, 0};
  // y = Y/n, z = Z/n with Y^2 = r n^2 + alpha Z^2; clear denominators by a
  // square so the test is on integers: k1 n^2 + k2 Z^2 = (Y * e)^2.
  const Integer e = alpha.get_den() * r.get_den();
  const Integer k1 = r.get_num() * r.get_den() * alpha.get_den() * alpha.get_den();
  const Integer k2 = alpha.get_num() * alpha.get_den() * r.get_den() * r.get_den();
  Integer value, root;
  auto try_pair = [&](unsigned long n, unsigned long z) -> std::optional<ConicWitness> {
    value = k1 * n * n + k2 * z * z;
    if (sgn(value) < 0 || !mpz_perfect_square_p(value.get_mpz_t())) return std::nullopt;
    mpz_sqrt(root.get_mpz_t(), value.get_mpz_t());
    return ConicWitness{make_rational(root, e * n), make_rational(Integer(z), Integer(n))};
  };
  for (unsigned long h = 1; h <= bound; ++h) {
    for (unsigned long z = 0; z <= h; ++z) {
      if (auto w = try_pair(h, z)) return w;
    }
    for (unsigned long n = 1; n < h; ++n) {
      if (auto w = try_pair(n, h)) return w;
    }
  }
  return std::nullopt;
}

ConicFamily::ConicFamily(Rational alpha) : alpha_(std::move(alpha)) {
  if (alpha_ == 0) throw InvalidArgument("conic: alpha must be nonzero");
  // Cheap places first so obstructed fibers exit before factoring r.
  early_ = {Place::real(), Place::finite(Integer(2))};
  for (const Integer* part : {&alpha_.get_num(), &alpha_.get_den()}) {
    if (abs(*part) == 1) continue;
    for (auto& p : prime_divisors(*part)) {
      if (p != 2) early_.push_back(Place::finite(p));
    }
  }
}

ConicResult ConicFamily::decide(const Rational& r, const ConicSearchOptions& options) const {
  ConicResult out;
  if (r == 0) {
    out.solvable = true;
    if (options.want_witness) out.witness = ConicWitness{0, 0};
    return out;
  }
  auto fails = [&](const Place& v) { return hilbert_symbol(alpha_, r, v) == Symbol::kMinusOne; };
  for (const auto& v : early_) {
    if (fails(v)) {
      out.obstructing_place = v;
      return out;
    }
  }
  std::vector<Integer> primes;
  for (const Integer* part : {&r.get_num(), &r.get_den()}) {
    if (abs(*part) == 1) continue;
    for (auto& p : prime_divisors(*part)) primes.push_back(p);
  }
  std::sort(primes.begin(), primes.end());
  for (const auto& p : primes) {
    if (p == 2) continue;
    Place v = Place::finite(p);
    if (fails(v)) {
      out.obstructing_place = v;
      return out;
    }
  }
  out.solvable = true;
  if (options.want_witness) out.witness = find_conic_witness(alpha_, r, options.witness_bound);
  return out;
}

ConicResult conic_solvable_global(const Rational& alpha, const Rational& r, const ConicSearchOptions& options) {
  return ConicFamily(alpha).decide(r, options);
}

}  // namespace chatelet
