#include "chatelet/surface.hpp"

#include <algorithm>

namespace chatelet {

ProjectivePoint ProjectivePoint::make(const Integer& x, const Integer& w) {
  if (x == 0 && w == 0) throw InvalidArgument("projective point (0 : 0)");
  if (w == 0) return infinity();
  Integer g = gcd(x, w);
  Integer nx = x / g, nw = w / g;
  if (nw < 0) {
    nx = -nx;
    nw = -nw;
  }
  return {nx, nw};
}

Rational ProjectivePoint::affine() const {
  if (is_infinity()) throw InvalidArgument("affine coordinate of infinity");
  return make_rational(x, w);
}

std::string ProjectivePoint::to_string() const {
  if (is_infinity()) return "inf";
  if (w == 1) return x.get_str();
  return x.get_str() + "/" + w.get_str();
}

ProjectivePoint ProjectivePoint::parse(const std::string& text) {
  if (text == "inf") return infinity();
  return from_rational(parse_rational(text));
}

Rational Poly4::operator()(const Rational& x) const {
  Rational acc = 0;
  for (int i = 4; i >= 0; --i) acc = acc * x + c[i];
  return acc;
}

Rational BinaryQuartic::operator()(const Rational& w, const Rational& x) const {
  Rational acc = 0, xp = 1;
  std::array<Rational, 5> wp;
  wp[0] = 1;
  for (int i = 1; i <= 4; ++i) wp[i] = wp[i - 1] * w;
  for (int i = 0; i <= 4; ++i) {
    acc += a[i] * xp * wp[4 - i];
    xp *= x;
  }
  return acc;
}

Polynomial BinaryQuartic::x_chart() const { return Polynomial(std::vector<Rational>(a.begin(), a.end())); }

bool BinaryQuartic::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const Rational& v) { return v == 0; });
}

BinaryQuartic homogenize(const Poly4& p) { return BinaryQuartic{p.c}; }

namespace {

template <typename T>
T quartic_disc_formula(const T& a, const T& b, const T& c, const T& d, const T& e) {
  return 256 * a * a * a * e * e * e - 192 * a * a * b * d * e * e - 128 * a * a * c * c * e * e +
         144 * a * a * c * d * d * e - 27 * a * a * d * d * d * d + 144 * a * b * b * c * e * e -
         6 * a * b * b * d * d * e - 80 * a * b * c * c * d * e + 18 * a * b * c * d * d * d +
         16 * a * c * c * c * c * e - 4 * a * c * c * c * d * d - 27 * b * b * b * b * e * e +
         18 * b * b * b * c * d * e - 4 * b * b * b * d * d * d - 4 * b * b * c * c * c * e +
         b * b * c * c * d * d;
}

void add_primes(const Integer& n, std::vector<Integer>& out) {
  if (n == 0) throw InvalidArgument("singular quartic: zero discriminant factor");
  if (abs(n) == 1) return;
  for (auto& p : prime_divisors(n)) out.push_back(p);
}

}  // namespace

Rational quartic_disc(const BinaryQuartic& q) {
  if (q.is_zero()) throw InvalidArgument("quartic_disc: zero form");
  const auto& a = q.a;
  Rational out = quartic_disc_formula<Rational>(a[4], a[3], a[2], a[1], a[0]);
  out.canonicalize();
  return out;
}

std::vector<Integer> disc_prime_support(const BinaryQuartic& q) {
  if (q.is_zero()) throw InvalidArgument("disc_prime_support: zero form");
  std::vector<Integer> ints = primitive_integer_coeffs(Polynomial(std::vector<Rational>(q.a.begin(), q.a.end())));
  ints.resize(5, Integer(0));
  // q = content * (primitive integer form).
  Rational content = q.a[0] != 0 ? q.a[0] / Rational(ints[0]) : Rational(0);
  for (int i = 0; i <= 4 && content == 0; ++i) {
    if (q.a[i] != 0) content = q.a[i] / Rational(ints[i]);
  }
  std::vector<Integer> out;
  add_primes(content.get_num(), out);
  add_primes(content.get_den(), out);
  if (ints[1] == 0 && ints[3] == 0) {
    // 16 a4 a0 (a2^2 - 4 a4 a0)^2
    add_primes(Integer(2), out);
    add_primes(ints[4], out);
    add_primes(ints[0], out);
    add_primes(ints[2] * ints[2] - 4 * ints[4] * ints[0], out);
  } else {
    add_primes(quartic_disc_formula<Integer>(ints[4], ints[3], ints[2], ints[1], ints[0]), out);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void validate(const ChateletParams& prm) {
  auto good_prime = [](const Integer& p) { return p > 5 && mod(p, Integer(8)) == 1 && is_prime(p); };
  if (!good_prime(prm.a)) throw InvalidArgument("params: a must be a prime > 5 with a = 1 mod 8");
  if (!good_prime(prm.b)) throw InvalidArgument("params: b must be a prime > 5 with b = 1 mod 8");
  if (prm.a == prm.b) throw InvalidArgument("params: a and b must differ");
  if (legendre(prm.a, prm.b) != -1) throw InvalidArgument("params: a must be a non-square mod b");
  if (mod(prm.a * prm.c + 1, prm.b) != 0) throw InvalidArgument("params: b must divide a c + 1");
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::kConstructed:
      return "constructed";
    case Provenance::kIskovskikh:
      return "iskovskikh";
    case Provenance::kFiber:
      return "fiber";
    case Provenance::kUser:
      return "user";
  }
  return "user";
}

Provenance parse_provenance(const std::string& text) {
  if (text == "constructed") return Provenance::kConstructed;
  if (text == "iskovskikh") return Provenance::kIskovskikh;
  if (text == "fiber") return Provenance::kFiber;
  if (text == "user") return Provenance::kUser;
  throw InvalidArgument("unknown provenance '" + text + "'");
}

ChateletSurface::ChateletSurface(Rational alpha, Poly4 p, Provenance provenance, std::optional<ChateletParams> params)
    : alpha_(std::move(alpha)),
      p_(std::move(p)),
      ptilde_(homogenize(p_)),
      provenance_(provenance),
      params_(std::move(params)) {
  if (alpha_ == 0) throw InvalidArgument("surface: alpha must be nonzero");
  if (ptilde_.is_zero()) throw InvalidArgument("surface: P must not be identically zero");
  if (params_ && provenance_ != Provenance::kConstructed) {
    throw InvalidArgument("surface: parameters only accompany constructed surfaces");
  }
}

ChateletParams find_params(const Integer& bound) {
  auto next_prime_1_mod_8 = [&](Integer from) -> std::optional<Integer> {
    // Least prime p = 1 mod 8 with from < p <= bound.
    Integer p = from + 1;
    Integer r = mod(p, Integer(8));
    if (r != 1) p += mod(Integer(9) - r, Integer(8));
    for (; p <= bound; p += 8) {
      if (is_prime(p)) return p;
    }
    return std::nullopt;
  };
  for (auto b = next_prime_1_mod_8(Integer(5)); b; b = next_prime_1_mod_8(*b)) {
    for (auto a = next_prime_1_mod_8(Integer(5)); a; a = next_prime_1_mod_8(*a)) {
      if (*a == *b || legendre(*a, *b) != -1) continue;
      Integer c = mod(-mod_inverse(*a, *b), *b);
      return {*a, *b, c};
    }
  }
  throw NotFound("not found below bound " + bound.get_str());
}

ChateletSurface build_surface(const ChateletParams& prm) {
  validate(prm);
  const Integer& a = prm.a;
  const Integer& c = prm.c;
  // (x^2 + c)(a x^2 + ac + 1)
  Integer k = a * c + 1;
  Poly4 p{{Rational(c * k), Rational(0), Rational(k + a * c), Rational(0), Rational(a)}};
  ChateletSurface s(Rational(a * prm.b), p, Provenance::kConstructed, prm);
  // The two quadratic factors are separable with resultant 1.
  if (!s.is_smooth()) throw InvalidArgument("params produce a singular surface");
  return s;
}

ChateletSurface iskovskikh() {
  Poly4 p{{Rational(-6), Rational(0), Rational(5), Rational(0), Rational(-1)}};
  return ChateletSurface(Rational(-1), p, Provenance::kIskovskikh);
}

std::vector<Place> bad_places(const ChateletSurface& s) {
  std::vector<Integer> primes{Integer(2)};
  for (const Integer* part : {&s.alpha().get_num(), &s.alpha().get_den()}) {
    if (abs(*part) == 1) continue;
    for (auto& p : prime_divisors(*part)) primes.push_back(p);
  }
  for (auto& p : disc_prime_support(s.Ptilde())) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<Place> out{Place::real()};
  for (const auto& p : primes) out.push_back(Place::finite(p));
  return out;
}

bool check_certificate(const ChateletSurface& s, const CertifiedLocalX& pt) {
  Rational value = s.Ptilde().at(pt.x);
  if (value == 0) return pt.certificate == CertifiedLocalX::Certificate::kDegenerate;
  return pt.certificate == CertifiedLocalX::Certificate::kSymbol &&
         hilbert_symbol(s.alpha(), value, pt.place) == Symbol::kPlusOne;
}

LocalReport verify_local_everywhere(const ChateletSurface& s) {
  if (!s.is_smooth()) throw InvalidArgument("verify_local_everywhere: surface is singular");
  LocalReport report;
  report.all_solvable = true;
  for (const auto& v : bad_places(s)) {
    LocalResult r = local_solvable_surface(s, v);
    report.places.push_back({v, r.solvable, r.witness});
    report.all_solvable = report.all_solvable && r.solvable;
  }
  return report;
}

}  // namespace chatelet
