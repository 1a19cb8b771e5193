#pragma once

// Bundles of Chatelet surfaces y^2 - alpha z^2 = u^2 Pinf(w, x) + v^2 P0(w, x)
// over P^1 with coordinate (u : v), their singular fibers, and the base
// change t -> d t^2 that moves every rational fiber but one off the bad set.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chatelet/obstruction.hpp"
#include "chatelet/surface.hpp"

namespace chatelet {

/// (u : v) in P^1(Q). Canonical: coprime, first nonzero coordinate positive.
struct FiberParam {
  Integer u;
  Integer v;

  static FiberParam make(const Integer& u, const Integer& v);
  bool is_affine() const { return v != 0; }
  /// u / v; requires v != 0.
  Rational coordinate() const;
  std::string to_string() const;
  bool operator==(const FiberParam&) const = default;
};

/// True iff q is irreducible in Q[w, x]. Linear factors are found as
/// rational roots on both charts; quadratic splittings through the rational
/// roots of the resolvent cubic of the depressed quartic.
bool quartic_irreducible(const BinaryQuartic& q);

/// x^4 + w^4.
BinaryQuartic default_pinf();

class SurfaceBundle {
 public:
  const Rational& alpha() const { return alpha_; }
  const BinaryQuartic& P0() const { return p0_; }
  const BinaryQuartic& Pinf() const { return pinf_; }
  /// The generating surface, which is the fiber at (0 : 1).
  const ChateletSurface& base() const { return base_; }

 private:
  friend SurfaceBundle make_bundle(const ChateletSurface& s, const BinaryQuartic& pinf);
  SurfaceBundle(ChateletSurface base, BinaryQuartic pinf);

  ChateletSurface base_;
  Rational alpha_;
  BinaryQuartic p0_;
  BinaryQuartic pinf_;
};

/// Requires s smooth and constructed, pinf irreducible and not proportional
/// to Ptilde(s).
SurfaceBundle make_bundle(const ChateletSurface& s, const BinaryQuartic& pinf);

/// u^2 Pinf + v^2 P0 as a surface with alpha = B.alpha. The fiber at (0 : 1)
/// is the generating surface itself, parameters included.
ChateletSurface fiber_at(const SurfaceBundle& B, const FiberParam& t);

struct BadFiberSet {
  std::vector<FiberParam> points;
  /// R(u, v) = disc(u^2 Pinf + v^2 P0) = sum pencil[i] u^i v^(12-i).
  std::vector<Rational> pencil;

  Rational eval(const Integer& u, const Integer& v) const;
};

BadFiberSet bad_fibers(const SurfaceBundle& B);

/// The count smallest positive squarefree d outside the square classes of
/// the affine nonzero coordinates of F.
std::vector<Integer> good_d_candidates(const BadFiberSet& F, std::size_t count);

class PulledBackBundle {
 public:
  const SurfaceBundle& base() const { return base_; }
  const Integer& d() const { return d_; }
  /// (t0 : t1) -> (d t1^2 : t0^2).
  FiberParam fiber_param(const ProjectivePoint& t) const;
  ChateletSurface fiber(const ProjectivePoint& t) const { return fiber_at(base_, fiber_param(t)); }

 private:
  friend PulledBackBundle pullback(const SurfaceBundle& B, const Integer& d);
  PulledBackBundle(SurfaceBundle base, Integer d) : base_(std::move(base)), d_(std::move(d)) {}

  SurfaceBundle base_;
  Integer d_;
};

/// Requires d positive, squarefree and outside the square classes of
/// bad_fibers(B), and (0 : 1), (1 : 0) outside bad_fibers(B).
PulledBackBundle pullback(const SurfaceBundle& B, const Integer& d);

/// Rational self-maps of P^1 that squeeze the line into a small
/// neighbourhood of a target at one place, with an exact check of the bound.
class ShrinkMap {
 public:
  /// t -> 1 / (t^2 + m), image of P^1(R) inside [0, 1/m].
  static ShrinkMap real(const Integer& m);
  /// t -> g(t^M) with M = p^r (p - 1). g = num / den has degree <= 3 and
  /// sends 0, 1 and infinity to target.
  static ShrinkMap nonarch(const Integer& p, unsigned r, const Polynomial& g_num, const Polynomial& g_den,
                           const ProjectivePoint& target);

  bool is_real() const { return kind_ == Kind::kReal; }
  ProjectivePoint operator()(const ProjectivePoint& t) const;
  /// Real: 1/m - f(t) = t^2 / (m (t^2 + m)) with m > 0, checked as an
  /// identity of rational functions. Nonarchimedean: t^M = 1 mod p^(r+1) for
  /// every unit residue mod p^(r+2), and g fixes 0, 1, infinity onto target.
  bool verify_certificate() const;
  std::string describe() const;

 private:
  enum class Kind { kReal, kNonarch };
  ShrinkMap() = default;

  Kind kind_ = Kind::kReal;
  Integer m_;
  Integer p_;
  unsigned r_ = 0;
  Polynomial g_num_;
  Polynomial g_den_;
  ProjectivePoint target_{Integer(0), Integer(1)};
};

struct FiberRecord {
  ProjectivePoint t;
  FiberParam param;
  BinaryQuartic quartic;
  bool smooth = false;
  bool irreducible = false;
  bool in_bad_set = false;
  LocalReport local;
  std::optional<ObstructionReport> obstruction;
  std::optional<PointSearchResult> search;
};

struct BundleReport {
  Integer d;
  BadFiberSet bad;
  std::vector<FiberRecord> fibers;
  /// Affine fibers with a reducible quartic. Only F is avoided effectively,
  /// so these are reported rather than treated as failures.
  std::vector<ProjectivePoint> thin_set_hits;
  /// Human-readable violations; empty when every check passed.
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

struct VerifyOptions {
  unsigned long search_height = 100;
  unsigned long witness_bound = 2000;
  std::size_t samples = 50;
  std::uint64_t seed = 0;
};

/// Checks every sampled fiber: smoothness, irreducibility, exact local
/// solvability, membership in F; the fiber at infinity additionally gets a
/// full obstruction report and every fiber a bounded point search.
BundleReport verify_pullback(const PulledBackBundle& W, const std::vector<ProjectivePoint>& ts,
                             const VerifyOptions& options);

}  // namespace chatelet
