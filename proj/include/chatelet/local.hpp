#pragma once

// Places of Q, Hilbert symbols, local squares and conic solvability.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "chatelet/arith.hpp"

namespace chatelet {

/// The real place or a finite prime. Ordered real first, then primes
/// ascending.
class Place {
 public:
  static Place real() { return Place(Integer(0)); }
  /// Throws InvalidArgument unless p is prime.
  static Place finite(const Integer& p);

  bool is_real() const { return prime_ == 0; }
  bool is_odd() const { return !is_real() && prime_ != 2; }
  /// The prime of a finite place; 0 for the real place.
  const Integer& prime() const { return prime_; }

  /// "inf" or the decimal prime.
  std::string to_string() const;
  /// Inverse of to_string; also accepts "real".
  static Place parse(const std::string& text);

  std::strong_ordering operator<=>(const Place& other) const;
  bool operator==(const Place& other) const { return prime_ == other.prime_; }

 private:
  explicit Place(Integer p) : prime_(std::move(p)) {}
  Integer prime_;
};

enum class Symbol : int { kMinusOne = -1, kPlusOne = 1 };

inline int to_int(Symbol s) { return static_cast<int>(s); }
inline Symbol operator*(Symbol a, Symbol b) {
  return to_int(a) * to_int(b) == 1 ? Symbol::kPlusOne : Symbol::kMinusOne;
}

/// Local invariant of a quaternion class: 0 or 1/2 in Q/Z.
class Invariant {
 public:
  static Invariant zero() { return Invariant(false); }
  static Invariant half() { return Invariant(true); }
  bool is_half() const { return half_; }
  bool is_zero() const { return !half_; }
  Invariant operator+(Invariant other) const { return Invariant(half_ != other.half_); }
  bool operator==(const Invariant&) const = default;
  std::string to_string() const { return half_ ? "1/2" : "0"; }

 private:
  explicit Invariant(bool half) : half_(half) {}
  bool half_;
};

/// Closed-form Hilbert symbol (a, b)_v.
Symbol hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// Independent oracle: decides whether z^2 = a x^2 + b y^2 has a primitive
/// solution modulo p^precision by exhaustive search over residues.
/// precision must be at least 2*max(v_p(a), v_p(b)) + 3 (p odd) or + 5
/// (p = 2), computed after a and b are scaled by squares to integers.
Symbol hilbert_bruteforce_oracle(const Rational& a, const Rational& b, const Integer& p, unsigned precision);

/// Smallest precision hilbert_bruteforce_oracle accepts for (a, b, p).
unsigned oracle_min_precision(const Rational& a, const Rational& b, const Integer& p);

/// {real, 2} plus the primes dividing a numerator or denominator, sorted.
std::vector<Place> support_places(const std::vector<Rational>& values);

/// Product of (a, b)_v over the support places of a and b equals +1.
bool product_formula_check(const Rational& a, const Rational& b);

/// t in Q_v^{x2}.
bool is_local_square(const Rational& t, const Place& v);

inline Invariant inv_from_symbol(Symbol s) { return s == Symbol::kPlusOne ? Invariant::zero() : Invariant::half(); }

/// y^2 - alpha z^2 = r has a Q_v-point (true for r = 0).
bool conic_solvable_local(const Rational& alpha, const Rational& r, const Place& v);

struct ConicWitness {
  Rational y;
  Rational z;
};

struct ConicResult {
  bool solvable = false;
  /// Set when solvable and a witness was found within the search bound.
  std::optional<ConicWitness> witness;
  /// A place where the conic fails, when unsolvable. Real, 2 and the primes
  /// of alpha are tried before the primes of r.
  std::optional<Place> obstructing_place;
};

struct ConicSearchOptions {
  bool want_witness = true;
  /// Bound on numerators and the common denominator of the witness.
  unsigned long witness_bound = 10000;
};

/// The conics y^2 - alpha z^2 = r for fixed alpha, with the places of alpha
/// factored once.
class ConicFamily {
 public:
  explicit ConicFamily(Rational alpha);

  const Rational& alpha() const { return alpha_; }
  ConicResult decide(const Rational& r, const ConicSearchOptions& options = {}) const;

 private:
  Rational alpha_;
  std::vector<Place> early_;
};

/// Hasse-Minkowski decision for y^2 - alpha z^2 = r over Q, with an optional
/// bounded witness search.
ConicResult conic_solvable_global(const Rational& alpha, const Rational& r, const ConicSearchOptions& options = {});

/// Bounded search for y, z with y^2 - alpha z^2 = r. Enumerates the common
/// denominator and z's numerator by increasing height and tests the
/// remaining y^2 for being a square.
std::optional<ConicWitness> find_conic_witness(const Rational& alpha, const Rational& r, unsigned long bound);

}  // namespace chatelet
