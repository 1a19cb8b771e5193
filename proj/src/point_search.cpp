#include <algorithm>
#include <numeric>

#include "chatelet/obstruction.hpp"

namespace chatelet {

std::string PointSearchResult::status_string() const {
  switch (status) {
    case Status::kNone:
      return "none";
    case Status::kFound:
      return "found";
    case Status::kSolvableNoWitness:
      return "solvable-without-witness";
  }
  return "none";
}

std::vector<ProjectivePoint> points_of_height(unsigned long h) {
  std::vector<ProjectivePoint> out;
  if (h == 0) return out;
  const long H = static_cast<long>(h);
  for (long am = 0; am <= H; ++am) {
    for (long sign : {1L, -1L}) {
      if (am == 0 && sign < 0) continue;
      long m = sign * am;
      if (am == H) {
        for (long n = 1; n <= H; ++n) {
          if (std::gcd(am, n) == 1) out.push_back(ProjectivePoint{Integer(m), Integer(n)});
        }
      } else if (std::gcd(am, H) == 1) {
        out.push_back(ProjectivePoint{Integer(m), Integer(H)});
      }
    }
  }
  if (h == 1) out.push_back(ProjectivePoint::infinity());
  return out;
}

PointSearchResult rational_point_search(const ChateletSurface& s, const PointSearchOptions& options) {
  if (!s.is_smooth()) throw InvalidArgument("rational_point_search: surface is singular");
  const ConicFamily family(s.alpha());
  ConicSearchOptions decide_only{false, 0};
  PointSearchResult out;
  out.height = options.height;
  for (unsigned long h = 1; h <= options.height; ++h) {
    for (const auto& x : points_of_height(h)) {
      ++out.fibers_checked;
      Rational r = s.Ptilde().at(x);
      if (!family.decide(r, decide_only).solvable) continue;
      out.fiber = x;
      out.status = PointSearchResult::Status::kSolvableNoWitness;
      if (auto w = find_conic_witness(s.alpha(), r, options.witness_bound)) {
        out.status = PointSearchResult::Status::kFound;
        if (x.is_infinity()) {
          out.point = RationalPoint{Rational(0), w->y, w->z};
        } else {
          // Ptilde(n, m) = n^4 P(m/n).
          Rational n2 = Rational(x.w * x.w);
          out.point = RationalPoint{x.affine(), w->y / n2, w->z / n2};
        }
      }
      return out;
    }
  }
  return out;
}

}  // namespace chatelet
