#pragma once

// Dense univariate polynomials over Q and Z, with the exact root machinery
// the rest of the library needs: Sturm-sequence real root isolation,
// factoring-free rational root extraction, and root finding over F_p.

#include <vector>

#include "chatelet/arith.hpp"

namespace chatelet {

/// Ascending coefficients over Q; the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  Polynomial derivative() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; divisor must be nonzero.
  static void divmod(const Polynomial& num, const Polynomial& den, Polynomial& quot, Polynomial& rem);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// f / gcd(f, f'), same roots, all simple.
Polynomial squarefree_kernel(const Polynomial& f);

/// Scales f by a positive rational so the coefficients are coprime integers.
std::vector<Integer> primitive_integer_coeffs(const Polynomial& f);

/// One real root of a squarefree polynomial lies in the half-open (lo, hi].
struct RootInterval {
  Rational lo;
  Rational hi;
};

/// Isolating intervals for the distinct real roots of a nonzero f, in
/// increasing order and pairwise disjoint.
std::vector<RootInterval> isolate_real_roots(const Polynomial& f);

/// Distinct rational roots of a nonzero f, ascending.
std::vector<Rational> rational_roots(const Polynomial& f);

/// The rational of least denominator strictly between lo and hi (lo < hi).
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

/// Distinct roots in [0, p) of an integer polynomial reduced mod the prime p.
/// Small p are enumerated; large p use gcd with x^p - x and Cantor-Zassenhaus
/// splitting with a fixed shift schedule.
std::vector<Integer> roots_mod_p(const std::vector<Integer>& f, const Integer& p);

Integer eval(const std::vector<Integer>& f, const Integer& x);

/// Coefficients of f(center + scale * t) as a polynomial in t.
std::vector<Integer> taylor_shift(const std::vector<Integer>& f, const Integer& center, const Integer& scale);

}  // namespace chatelet
