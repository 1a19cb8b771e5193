#pragma once

// Chatelet surfaces y^2 - alpha z^2 = P(x), their smooth projective models
// over P^1 (via the binary quartic w^4 P(x/w)), and exact local solvability.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "chatelet/arith.hpp"
#include "chatelet/local.hpp"
#include "chatelet/poly.hpp"

namespace chatelet {

/// A point (x : w) of P^1(Q), i.e. x/w. Canonical: coprime, w >= 0, and
/// infinity is (1 : 0).
struct ProjectivePoint {
  Integer x;
  Integer w;

  static ProjectivePoint make(const Integer& x, const Integer& w);
  static ProjectivePoint from_rational(const Rational& q) { return make(q.get_num(), q.get_den()); }
  static ProjectivePoint infinity() { return {Integer(1), Integer(0)}; }

  bool is_infinity() const { return w == 0; }
  Rational affine() const;
  /// max(|x|, |w|).
  Integer height() const { return std::max(abs(x), abs(w)); }
  std::string to_string() const;
  static ProjectivePoint parse(const std::string& text);
  bool operator==(const ProjectivePoint&) const = default;
};

/// P(x) = c[0] + c[1] x + ... + c[4] x^4, not identically zero.
struct Poly4 {
  std::array<Rational, 5> c;

  Rational operator()(const Rational& x) const;
  bool operator==(const Poly4&) const = default;
};

/// q(w, x) = sum a[i] x^i w^(4-i), not identically zero.
struct BinaryQuartic {
  std::array<Rational, 5> a;

  Rational operator()(const Rational& w, const Rational& x) const;
  Rational at(const ProjectivePoint& pt) const { return (*this)(pt.w, pt.x); }
  /// q(1, x) as a polynomial in x.
  Polynomial x_chart() const;
  bool is_zero() const;
  bool operator==(const BinaryQuartic&) const = default;
};

BinaryQuartic homogenize(const Poly4& p);

/// Discriminant of the binary quartic; zero iff it has a repeated root in
/// P^1 over the algebraic closure.
Rational quartic_disc(const BinaryQuartic& q);

/// Primes dividing the discriminant or the content of q. Even quartics are
/// handled through disc = 16 a4 a0 (a2^2 - 4 a4 a0)^2 so only the factors
/// are factored.
std::vector<Integer> disc_prime_support(const BinaryQuartic& q);

struct ChateletParams {
  Integer a;
  Integer b;
  Integer c;
  bool operator==(const ChateletParams&) const = default;
};

/// Throws InvalidArgument unless a, b are distinct primes > 5, both 1 mod 8,
/// a is a non-residue mod b, and b | a c + 1.
void validate(const ChateletParams& params);

enum class Provenance { kConstructed, kIskovskikh, kFiber, kUser };

std::string to_string(Provenance p);
Provenance parse_provenance(const std::string& text);

class ChateletSurface {
 public:
  ChateletSurface(Rational alpha, Poly4 p, Provenance provenance,
                  std::optional<ChateletParams> params = std::nullopt);

  const Rational& alpha() const { return alpha_; }
  const Poly4& P() const { return p_; }
  const BinaryQuartic& Ptilde() const { return ptilde_; }
  Provenance provenance() const { return provenance_; }
  /// Present exactly for surfaces built from parameters.
  const std::optional<ChateletParams>& params() const { return params_; }

  bool is_smooth() const { return quartic_disc(ptilde_) != 0; }

 private:
  Rational alpha_;
  Poly4 p_;
  BinaryQuartic ptilde_;
  Provenance provenance_;
  std::optional<ChateletParams> params_;
};

/// Least (b, a, c) satisfying the parameter conditions with a, b <= bound.
/// Throws NotFound when none exist.
ChateletParams find_params(const Integer& bound);

class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// y^2 - ab z^2 = (x^2 + c)(a x^2 + ac + 1).
ChateletSurface build_surface(const ChateletParams& params);

/// y^2 + z^2 = (x^2 - 2)(3 - x^2).
ChateletSurface iskovskikh();

/// Sorted: real, 2, primes of alpha, primes of disc(Ptilde) and of the
/// content of Ptilde. Outside this set a local point always exists.
std::vector<Place> bad_places(const ChateletSurface& s);

/// An x-coordinate whose fiber conic has a Q_v-point: either
/// (alpha, Ptilde(x))_v = +1 or Ptilde(x) = 0.
struct CertifiedLocalX {
  enum class Certificate { kSymbol, kDegenerate };

  ProjectivePoint x;
  Place place;
  Certificate certificate = Certificate::kSymbol;
};

/// Recomputes the certificate from scratch.
bool check_certificate(const ChateletSurface& s, const CertifiedLocalX& pt);

struct LocalResult {
  bool solvable = false;
  std::optional<CertifiedLocalX> witness;
};

/// Exact decision of V(Q_v) != empty with a certified x when solvable.
/// Finite places refine p-adic disks on both charts until the square class
/// of Ptilde is constant on each disk; the real place isolates real roots.
LocalResult local_solvable_surface(const ChateletSurface& s, const Place& v);

struct PlaceSolvability {
  Place place;
  bool solvable = false;
  std::optional<CertifiedLocalX> witness;
};

struct LocalReport {
  std::vector<PlaceSolvability> places;
  /// Justification recorded for every place outside the bad set.
  std::string good_places = "norm-argument";
  bool all_solvable = false;
};

LocalReport verify_local_everywhere(const ChateletSurface& s);

}  // namespace chatelet
