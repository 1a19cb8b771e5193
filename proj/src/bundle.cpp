#include "chatelet/bundle.hpp"

#include <algorithm>
#include <set>

namespace chatelet {

FiberParam FiberParam::make(const Integer& u, const Integer& v) {
  if (u == 0 && v == 0) throw InvalidArgument("fiber parameter (0 : 0)");
  Integer g = gcd(u, v);
  Integer nu = u / g, nv = v / g;
  if (sgn(nu) < 0 || (nu == 0 && sgn(nv) < 0)) {
    nu = -nu;
    nv = -nv;
  }
  return {nu, nv};
}

Rational FiberParam::coordinate() const {
  if (v == 0) throw InvalidArgument("fiber parameter at infinity has no affine coordinate");
  return make_rational(u, v);
}

std::string FiberParam::to_string() const { return u.get_str() + ":" + v.get_str(); }

BinaryQuartic default_pinf() {
  return BinaryQuartic{{Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)}};
}

namespace {

bool proportional(const BinaryQuartic& p, const BinaryQuartic& q) {
  std::optional<Rational> ratio;
  for (int i = 0; i <= 4; ++i) {
    if ((p.a[i] == 0) != (q.a[i] == 0)) return false;
    if (p.a[i] == 0) continue;
    Rational r = p.a[i] / q.a[i];
    if (ratio && *ratio != r) return false;
    ratio = r;
  }
  return true;
}

bool share_root(const BinaryQuartic& p, const BinaryQuartic& q) {
  if (p.a[4] == 0 && q.a[4] == 0) return true;
  return gcd(p.x_chart(), q.x_chart()).degree() > 0;
}

BinaryQuartic combine(const Integer& u, const Integer& v, const BinaryQuartic& pinf, const BinaryQuartic& p0) {
  BinaryQuartic out;
  Rational u2(u * u), v2(v * v);
  for (int i = 0; i <= 4; ++i) out.a[i] = u2 * pinf.a[i] + v2 * p0.a[i];
  return out;
}

// Square classes of the affine nonzero coordinates of F; 0 and infinity
// have none.
std::set<Integer> excluded_classes(const BadFiberSet& F) {
  std::set<Integer> out;
  for (const auto& pt : F.points) {
    if (!pt.is_affine() || pt.u == 0) continue;
    out.insert(squarefree_part(pt.coordinate()));
  }
  return out;
}

}  // namespace

SurfaceBundle::SurfaceBundle(ChateletSurface base, BinaryQuartic pinf)
    : base_(std::move(base)), alpha_(base_.alpha()), p0_(base_.Ptilde()), pinf_(std::move(pinf)) {}

SurfaceBundle make_bundle(const ChateletSurface& s, const BinaryQuartic& pinf) {
  if (!s.params()) throw InvalidArgument("make_bundle: generating surface must be constructed");
  if (!s.is_smooth()) throw InvalidArgument("make_bundle: generating surface is singular");
  if (pinf.is_zero()) throw InvalidArgument("make_bundle: Pinf is zero");
  if (!quartic_irreducible(pinf)) throw InvalidArgument("make_bundle: Pinf is reducible over Q");
  if (proportional(pinf, s.Ptilde())) throw InvalidArgument("make_bundle: Pinf is proportional to P0");
  if (share_root(pinf, s.Ptilde())) throw InvalidArgument("make_bundle: Pinf and P0 share a root");
  return SurfaceBundle(s, pinf);
}

ChateletSurface fiber_at(const SurfaceBundle& B, const FiberParam& t) {
  if (FiberParam::make(t.u, t.v) != t) throw InvalidArgument("fiber_at: parameter not canonical");
  if (t.u == 0) return B.base();
  BinaryQuartic q = combine(t.u, t.v, B.Pinf(), B.P0());
  return ChateletSurface(B.alpha(), Poly4{q.a}, Provenance::kFiber);
}

Rational BadFiberSet::eval(const Integer& u, const Integer& v) const {
  Rational acc = 0;
  Integer up = 1;
  for (std::size_t i = 0; i < pencil.size(); ++i) {
    acc += pencil[i] * Rational(up * pow(v, static_cast<unsigned long>(pencil.size() - 1 - i)));
    up *= u;
  }
  return acc;
}

BadFiberSet bad_fibers(const SurfaceBundle& B) {
  // rho(s) = disc(s Pinf + P0) has degree <= 6; interpolate on s = 0..6.
  constexpr int kPoints = 7;
  Polynomial rho;
  for (int j = 0; j < kPoints; ++j) {
    BinaryQuartic q;
    for (int i = 0; i <= 4; ++i) q.a[i] = Rational(j) * B.Pinf().a[i] + B.P0().a[i];
    Rational value = q.is_zero() ? Rational(0) : quartic_disc(q);
    Polynomial basis{Rational(1)};
    Rational denom = 1;
    for (int k = 0; k < kPoints; ++k) {
      if (k == j) continue;
      basis = basis * Polynomial{Rational(-k), Rational(1)};
      denom *= j - k;
    }
    rho = rho + Rational(value / denom) * basis;
  }
  if (rho.is_zero()) throw InvalidArgument("bad_fibers: every fiber is singular");

  BadFiberSet out;
  out.pencil.assign(13, Rational(0));
  std::vector<Rational> in_m(13, Rational(0));
  for (int i = 0; i <= rho.degree(); ++i) {
    out.pencil[2 * i] = rho.coeff(i);
    in_m[2 * i] = rho.coeff(i);
  }
  for (const auto& m : rational_roots(Polynomial(in_m))) out.points.push_back(FiberParam::make(m.get_num(), m.get_den()));
  if (out.pencil[12] == 0) out.points.push_back(FiberParam::make(1, 0));
  return out;
}

std::vector<Integer> good_d_candidates(const BadFiberSet& F, std::size_t count) {
  std::set<Integer> excluded = excluded_classes(F);
  std::vector<Integer> out;
  for (Integer d = 1; out.size() < count; ++d) {
    if (is_squarefree(d) && !excluded.count(d)) out.push_back(d);
  }
  return out;
}

FiberParam PulledBackBundle::fiber_param(const ProjectivePoint& t) const {
  return FiberParam::make(d_ * t.w * t.w, t.x * t.x);
}

PulledBackBundle pullback(const SurfaceBundle& B, const Integer& d) {
  if (sgn(d) <= 0 || !is_squarefree(d)) throw InvalidArgument("pullback: d must be a positive squarefree integer");
  BadFiberSet F = bad_fibers(B);
  // 0 and infinity have no square class; t = infinity and t = 0 land on them.
  for (const auto& t : {FiberParam::make(0, 1), FiberParam::make(1, 0)}) {
    if (std::find(F.points.begin(), F.points.end(), t) != F.points.end()) {
      throw InvalidArgument("pullback: fiber " + t.to_string() + " is singular");
    }
  }
  std::set<Integer> excluded = excluded_classes(F);
  if (excluded.count(d)) {
    throw InvalidArgument("pullback: d = " + d.get_str() + " lies in the square class of a bad fiber");
  }
  return PulledBackBundle(B, d);
}

}  // namespace chatelet
