// Exact local solvability of Chatelet surfaces.
//
// V(Q_v) is nonempty iff some x in P^1(Q_v) has (alpha, Ptilde(x))_v = +1 or
// Ptilde(x) = 0. At a finite place the search runs over p-adic disks
// center + scale * Z_p on the two affine charts. On a disk the chart
// polynomial becomes g(t) = p^e h(t) with h primitive; wherever h(t0) is a
// unit modulo p (modulo 8 when p = 2) the square class of Ptilde is constant
// on the sub-disk around t0 and one symbol evaluation settles it. Only the
// residues where h vanishes are refined further, and those shrink onto the
// p-adic roots of Ptilde, near which every square class is attained, so the
// search always terminates.

#include <stdexcept>

#include "chatelet/surface.hpp"

namespace chatelet {

namespace {

constexpr int kMaxDepth = 512;
const Integer kMaxEnumeratedPrime = 1000000;

struct DiskHit {
  Integer coordinate;
  bool degenerate = false;
};

class DiskSearch {
 public:
  DiskSearch(const Rational& alpha, const Integer& p, std::vector<Integer> chart)
      : alpha_(alpha), place_(Place::finite(p)), p_(p), chart_(std::move(chart)) {
    // The caller has already handled alpha a local square, so an even
    // valuation at odd p means a non-square unit class.
    unramified_ = p != 2 && valuation(alpha, p) % 2 == 0;
    step_modulus_ = p == 2 ? Integer(8) : p;
  }

  std::optional<DiskHit> run(const Integer& center, const Integer& scale) { return search(center, scale, 0); }

 private:
  std::optional<DiskHit> search(const Integer& center, const Integer& scale, int depth) {
    if (depth > kMaxDepth) throw std::logic_error("local search exceeded refinement depth");
    std::vector<Integer> g = taylor_shift(chart_, center, scale);
    if (g.empty() || g[0] == 0) return DiskHit{center, true};
    long e = -1;
    for (const auto& c : g) {
      if (c == 0) continue;
      long vc = valuation(c, p_);
      if (e < 0 || vc < e) e = vc;
    }
    Integer pe = pow(p_, static_cast<unsigned long>(e));
    std::vector<Integer> h;
    for (const auto& c : g) h.push_back(c / pe);
    return unramified_ ? search_parity(center, scale, h, e, depth) : search_residues(center, scale, h, depth);
  }

  // alpha is a unit non-square at odd p: the symbol is (-1)^v(Ptilde(x)).
  std::optional<DiskHit> search_parity(const Integer& center, const Integer& scale, const std::vector<Integer>& h,
                                       long e, int depth) {
    if (e % 2 == 0) {
      for (Integer t0 = 0; t0 < p_ && t0 <= 4; ++t0) {
        if (mod(eval(h, t0), p_) != 0) return DiskHit{center + scale * t0, false};
      }
    }
    for (const auto& t0 : roots_mod_p(h, p_)) {
      if (auto hit = search(center + scale * t0, scale * p_, depth + 1)) return hit;
    }
    return std::nullopt;
  }

  std::optional<DiskHit> search_residues(const Integer& center, const Integer& scale, const std::vector<Integer>& h,
                                         int depth) {
    if (p_ > kMaxEnumeratedPrime) {
      throw std::domain_error("local search: ramified prime " + p_.get_str() + " too large to enumerate");
    }
    for (Integer t0 = 0; t0 < step_modulus_; ++t0) {
      Integer point = center + scale * t0;
      Integer residue = mod(eval(h, t0), p_);
      if (residue != 0) {
        Integer value = eval(chart_, point);
        if (hilbert_symbol(alpha_, Rational(value), place_) == Symbol::kPlusOne) return DiskHit{point, false};
        continue;
      }
      if (auto hit = search(point, scale * step_modulus_, depth + 1)) return hit;
    }
    return std::nullopt;
  }

  Rational alpha_;
  Place place_;
  Integer p_;
  std::vector<Integer> chart_;
  bool unramified_ = false;
  Integer step_modulus_;
};

CertifiedLocalX certify(const ChateletSurface& s, const ProjectivePoint& x, const Place& v) {
  CertifiedLocalX out{x, v, CertifiedLocalX::Certificate::kSymbol};
  if (s.Ptilde().at(x) == 0) out.certificate = CertifiedLocalX::Certificate::kDegenerate;
  if (!check_certificate(s, out)) throw std::logic_error("local search produced an invalid certificate");
  return out;
}

LocalResult solve_real(const ChateletSurface& s) {
  const Place v = Place::real();
  const BinaryQuartic& q = s.Ptilde();
  auto found = [&](const ProjectivePoint& x) { return LocalResult{true, certify(s, x, v)}; };
  if (sgn(s.alpha()) > 0) {
    for (long x = 0;; ++x) {
      if (q(1, x) != 0) return found(ProjectivePoint::make(x, 1));
    }
  }
  if (q.a[4] >= 0) return found(ProjectivePoint::infinity());
  // Leading coefficient negative, so P < 0 outside its real roots. Every
  // bounded sign region contains the endpoints of the adjacent isolating
  // intervals.
  Polynomial p = q.x_chart();
  auto intervals = isolate_real_roots(p);
  if (intervals.empty()) return {false, std::nullopt};
  std::vector<Rational> candidates;
  for (const auto& iv : intervals) {
    candidates.push_back(iv.lo);
    candidates.push_back(iv.hi);
  }
  std::optional<Rational> root;
  for (const auto& x : candidates) {
    Rational value = p(x);
    if (sgn(value) > 0) return found(ProjectivePoint::from_rational(x));
    if (value == 0 && !root) root = x;
  }
  if (root) return found(ProjectivePoint::from_rational(*root));
  // Only irrational roots of even multiplicity remain, impossible for a
  // smooth surface.
  throw InvalidArgument("real local solvability needs a smooth surface");
}

}  // namespace

LocalResult local_solvable_surface(const ChateletSurface& s, const Place& v) {
  if (!s.is_smooth()) throw InvalidArgument("local_solvable_surface: surface is singular");
  if (v.is_real()) return solve_real(s);

  const Integer& p = v.prime();
  std::vector<Integer> ints = primitive_integer_coeffs(s.Ptilde().x_chart());
  ints.resize(5, Integer(0));
  // Integer coefficients of a positive rational multiple of Ptilde; any
  // scaling is absorbed as long as it is a square, so rescale by the
  // discrepancy squared.
  Rational ratio;
  for (int i = 0; i <= 4; ++i) {
    if (ints[i] != 0) {
      ratio = s.Ptilde().a[i] / Rational(ints[i]);
      break;
    }
  }
  // Ptilde = ratio * ints; multiply ints by num*den of ratio to stay in the
  // same square class.
  Integer fix = ratio.get_num() * ratio.get_den();
  for (auto& c : ints) c *= fix;

  if (is_local_square(s.alpha(), v)) {
    for (long x = 0;; ++x) {
      if (s.Ptilde()(1, x) != 0) return {true, certify(s, ProjectivePoint::make(x, 1), v)};
    }
  }

  std::vector<Integer> x_chart(ints.begin(), ints.end());
  std::vector<Integer> w_chart(ints.rbegin(), ints.rend());
  DiskSearch on_x(s.alpha(), p, x_chart);
  if (auto hit = on_x.run(Integer(0), Integer(1))) {
    return {true, certify(s, ProjectivePoint::make(hit->coordinate, 1), v)};
  }
  DiskSearch on_w(s.alpha(), p, w_chart);
  if (auto hit = on_w.run(Integer(0), p)) {
    return {true, certify(s, ProjectivePoint::make(1, hit->coordinate), v)};
  }
  return {false, std::nullopt};
}

}  // namespace chatelet
