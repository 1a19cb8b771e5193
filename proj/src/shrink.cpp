#include <sstream>

#include "chatelet/bundle.hpp"

namespace chatelet {

namespace {

constexpr unsigned long kMaxResidueModulus = 10000000;

int map_degree(const Polynomial& num, const Polynomial& den) { return std::max(num.degree(), den.degree()); }

// (X : W) -> (W^D num(X/W) : W^D den(X/W)).
ProjectivePoint apply_map(const Polynomial& num, const Polynomial& den, const ProjectivePoint& pt) {
  const int D = map_degree(num, den);
  auto homog = [&](const Polynomial& f) {
    Rational acc = 0;
    for (int i = 0; i <= f.degree(); ++i) {
      acc += f.coeff(i) * Rational(pow(pt.x, i) * pow(pt.w, static_cast<unsigned long>(D - i)));
    }
    return acc;
  };
  Rational a = homog(num), b = homog(den);
  if (a == 0 && b == 0) throw InvalidArgument("shrink map undefined at " + pt.to_string());
  // Clear denominators jointly.
  Integer scale = lcm(a.get_den(), b.get_den());
  return ProjectivePoint::make(a.get_num() * (scale / a.get_den()), b.get_num() * (scale / b.get_den()));
}

std::string poly_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    if (f.coeff(i) == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << f.coeff(i).get_str();
    if (i > 0) out << "*t";
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

}  // namespace

ShrinkMap ShrinkMap::real(const Integer& m) {
  if (sgn(m) <= 0) throw InvalidArgument("shrink map: m must be positive");
  ShrinkMap out;
  out.kind_ = Kind::kReal;
  out.m_ = m;
  return out;
}

ShrinkMap ShrinkMap::nonarch(const Integer& p, unsigned r, const Polynomial& g_num, const Polynomial& g_den,
                             const ProjectivePoint& target) {
  if (p == 2 || !is_prime(p)) throw InvalidArgument("shrink map: p must be an odd prime");
  if (r < 1) throw InvalidArgument("shrink map: r must be at least 1");
  if (g_den.is_zero()) throw InvalidArgument("shrink map: g has zero denominator");
  if (map_degree(g_num, g_den) > 3) throw InvalidArgument("shrink map: g has degree above 3");
  ShrinkMap out;
  out.kind_ = Kind::kNonarch;
  out.p_ = p;
  out.r_ = r;
  out.g_num_ = g_num;
  out.g_den_ = g_den;
  out.target_ = target;
  for (const auto& pt : {ProjectivePoint::make(0, 1), ProjectivePoint::make(1, 1), ProjectivePoint::infinity()}) {
    if (apply_map(g_num, g_den, pt) != target) {
      throw InvalidArgument("shrink map: g does not send " + pt.to_string() + " to " + target.to_string());
    }
  }
  return out;
}

ProjectivePoint ShrinkMap::operator()(const ProjectivePoint& t) const {
  if (kind_ == Kind::kReal) return ProjectivePoint::make(t.w * t.w, t.x * t.x + m_ * t.w * t.w);
  unsigned long M = pow(p_, r_).get_ui() * (p_.get_ui() - 1);
  ProjectivePoint power = ProjectivePoint::make(pow(t.x, M), pow(t.w, M));
  return apply_map(g_num_, g_den_, power);
}

bool ShrinkMap::verify_certificate() const {
  if (kind_ == Kind::kReal) {
    if (sgn(m_) <= 0) return false;
    // 1/m - 1/(t^2 + m) = ((t^2 + m) - m) / (m (t^2 + m)); the numerator
    // must be t^2 and t^2 + m has no real zero.
    Polynomial denom{Rational(m_), Rational(0), Rational(1)};
    Polynomial numerator = denom - Polynomial{Rational(m_)};
    return numerator == Polynomial{Rational(0), Rational(0), Rational(1)} && isolate_real_roots(denom).empty();
  }
  Integer modulus = pow(p_, r_ + 2);
  if (modulus > kMaxResidueModulus) throw InvalidArgument("shrink map: residue modulus too large to enumerate");
  Integer inner = pow(p_, r_ + 1);
  Integer M = pow(p_, r_) * (p_ - 1);
  Integer value;
  for (Integer t = 1; t < modulus; ++t) {
    if (mod(t, p_) == 0) continue;
    mpz_powm(value.get_mpz_t(), t.get_mpz_t(), M.get_mpz_t(), inner.get_mpz_t());
    if (value != 1) return false;
  }
  for (const auto& pt : {ProjectivePoint::make(0, 1), ProjectivePoint::make(1, 1), ProjectivePoint::infinity()}) {
    if (apply_map(g_num_, g_den_, pt) != target_) return false;
  }
  return true;
}

std::string ShrinkMap::describe() const {
  if (kind_ == Kind::kReal) return "t -> 1/(t^2 + " + m_.get_str() + ")";
  Integer M = pow(p_, r_) * (p_ - 1);
  return "t -> g(t^" + M.get_str() + "), g = (" + poly_string(g_num_) + ")/(" + poly_string(g_den_) + ")";
}

}  // namespace chatelet
