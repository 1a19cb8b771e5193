#pragma once

// The quaternion class (ab, x^2 + c) on a constructed surface, its local
// invariants at certified points, the resulting emptiness certificate, and
// an exact height-bounded search for rational points.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chatelet/surface.hpp"

namespace chatelet {

/// Thrown when a check that the theory guarantees fails at runtime.
class ObstructionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (alpha, f) with f one of three second slots that agree in the Brauer
/// group of the surface: x^2 + c w^2, a x^2 + (ac+1) w^2, and
/// (x^2 + c w^2) / x^2 (which is 1 at infinity).
struct BrauerClass {
  enum class Rep { kFirstFactor, kSecondFactor, kInverted };

  Rational alpha;
  Integer a;
  Integer c;

  /// Value of the representation at x, or nullopt where it vanishes or is
  /// undefined. Forms of degree two are evaluated on the coprime pair, which
  /// changes them by a square only.
  std::optional<Rational> value(Rep rep, const ProjectivePoint& x) const;
  static std::string describe(Rep rep);
};

inline constexpr BrauerClass::Rep kAllReps[] = {BrauerClass::Rep::kFirstFactor, BrauerClass::Rep::kSecondFactor,
                                                BrauerClass::Rep::kInverted};

/// Throws InvalidArgument unless s carries construction parameters.
BrauerClass brauer_class(const ChateletSurface& s);

/// inv_v of the class at a certified point: the inverted form at infinity,
/// otherwise the first factor, falling back to the second where it vanishes.
Invariant eval_invariant(const BrauerClass& A, const CertifiedLocalX& pt);

/// The invariant through every representation defined and nonzero at pt.
std::vector<Invariant> eval_invariant_all_reps(const BrauerClass& A, const CertifiedLocalX& pt);

/// n distinct certified x = m/w with |m| <= 1000 and 1 <= w <= 1000 (plus
/// infinity), drawn from a generator seeded by (seed, place). Throws
/// NotFound when the attempt budget runs out first.
std::vector<CertifiedLocalX> sample_certified_points(const ChateletSurface& s, const Place& v, std::size_t n,
                                                     std::uint64_t seed);

struct PlaceInvariant {
  Place place;
  bool solvable = false;
  std::optional<CertifiedLocalX> witness;
  /// Certified points evaluated, the witness included.
  std::size_t points = 0;
  /// The common invariant when every point agreed.
  std::optional<Invariant> invariant;
};

struct ObstructionReport {
  std::vector<PlaceInvariant> places;
  std::string good_places = "norm-argument";
  Invariant sum = Invariant::zero();
  bool certified_empty = false;

  std::string conclusion() const { return certified_empty ? "no-rational-point-certified" : "inconclusive"; }
};

/// Local solvability and invariants at every bad place; the invariant is 0
/// at every other place. Throws ObstructionFailure if a place yields two
/// different invariants.
ObstructionReport obstruction_report(const ChateletSurface& s, std::size_t samples_per_place, std::uint64_t seed);

struct PointSearchOptions {
  unsigned long height = 100;
  /// Passed to the conic witness search of the first solvable fiber.
  unsigned long witness_bound = 10000;
};

struct RationalPoint {
  Rational x;
  Rational y;
  Rational z;
};

struct PointSearchResult {
  enum class Status { kNone, kFound, kSolvableNoWitness };

  Status status = Status::kNone;
  unsigned long height = 0;
  std::uint64_t fibers_checked = 0;
  /// The first solvable fiber in search order.
  std::optional<ProjectivePoint> fiber;
  /// A point on y^2 - alpha z^2 = P(x) (on the fiber at infinity, a point of
  /// the chart w = 1/x, y' = y/x^2, z' = z/x^2 with w = 0).
  std::optional<RationalPoint> point;

  std::string status_string() const;
};

/// Every x in P^1(Q) of height <= H in a fixed order (height, then |m|,
/// sign, denominator), each fiber conic decided exactly; stops at the first
/// solvable fiber.
PointSearchResult rational_point_search(const ChateletSurface& s, const PointSearchOptions& options);

/// The order used by rational_point_search: all coprime (m : n) with
/// max(|m|, n) = h, n >= 1, plus infinity at h = 1.
std::vector<ProjectivePoint> points_of_height(unsigned long h);

}  // namespace chatelet
