// Irreducibility of binary quartics over Q without a general factoring
// routine. A reducible quartic form either has a linear factor (a rational
// root on one of the charts) or splits into two quadratics; after making the
// x-chart monic and depressed, y^4 + p y^2 + q y + r = (y^2 + s y + t)(y^2 - s y + t')
// forces S = s^2 to be a root of S^3 + 2p S^2 + (p^2 - 4r) S - q^2.

#include "chatelet/bundle.hpp"

namespace chatelet {

namespace {

bool has_rational_square_root(const Polynomial& f, bool positive_only) {
  for (const auto& root : rational_roots(f)) {
    if (positive_only && sgn(root) <= 0) continue;
    if (sgn(root) >= 0 && is_rational_square(root)) return true;
  }
  return false;
}

}  // namespace

bool quartic_irreducible(const BinaryQuartic& q) {
  if (q.is_zero()) throw InvalidArgument("quartic_irreducible: zero form");
  // w | q or x | q.
  if (q.a[4] == 0 || q.a[0] == 0) return false;
  Polynomial f = q.x_chart();
  if (!rational_roots(f).empty()) return false;

  // Monic, then x = y - b/4.
  const Rational lead = q.a[4];
  const Rational b = q.a[3] / lead, c = q.a[2] / lead, d = q.a[1] / lead, e = q.a[0] / lead;
  const Rational shift = b / 4;
  const Rational p = c - 6 * shift * shift;
  const Rational qq = d - 2 * c * shift + 8 * shift * shift * shift;
  const Rational r = e - d * shift + c * shift * shift - 3 * shift * shift * shift * shift;

  if (qq == 0) {
    // Biquadratic: y^4 + p y^2 + r splits with s = 0 iff p^2 - 4r is a
    // square; a split with s != 0 still shows up through the cubic below.
    Rational delta = p * p - 4 * r;
    if (sgn(delta) >= 0 && is_rational_square(delta)) return false;
  }
  Polynomial resolvent{-qq * qq, p * p - 4 * r, 2 * p, Rational(1)};
  return !has_rational_square_root(resolvent, true);
}

}  // namespace chatelet
