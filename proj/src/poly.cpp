#include "chatelet/poly.hpp"

#include <algorithm>

namespace chatelet {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
  std::vector<Rational> out = a.coeffs_;
  for (auto& c : out) c *= s;
  return Polynomial(std::move(out));
}

void Polynomial::divmod(const Polynomial& num, const Polynomial& den, Polynomial& quot, Polynomial& rem) {
  if (den.is_zero()) throw InvalidArgument("polynomial division by zero");
  std::vector<Rational> r = num.coeffs_;
  std::vector<Rational> q(std::max<int>(num.degree() - den.degree() + 1, 0));
  const int dd = den.degree();
  for (int i = num.degree(); i >= dd; --i) {
    if (r[i] == 0) continue;
    Rational factor = r[i] / den.leading();
    q[i - dd] = factor;
    for (int j = 0; j <= dd; ++j) r[i - dd + j] -= factor * den.coeffs_[j];
  }
  quot = Polynomial(std::move(q));
  rem = Polynomial(std::move(r));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b, q, r;
  while (!y.is_zero()) {
    Polynomial::divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return Rational(1) / x.leading() * x;
}

Polynomial squarefree_kernel(const Polynomial& f) {
  if (f.degree() <= 0) return f;
  Polynomial g = gcd(f, f.derivative());
  Polynomial q, r;
  Polynomial::divmod(f, g, q, r);
  return q;
}

std::vector<Integer> primitive_integer_coeffs(const Polynomial& f) {
  Integer den = 1;
  for (const auto& c : f.coeffs()) den = lcm(den, c.get_den());
  std::vector<Integer> out;
  Integer content = 0;
  for (const auto& c : f.coeffs()) {
    Integer v = c.get_num() * (den / c.get_den());
    content = gcd(content, v);
    out.push_back(v);
  }
  if (content > 1) {
    for (auto& v : out) v /= content;
  }
  return out;
}

namespace {

using Sturm = std::vector<Polynomial>;

Sturm sturm_sequence(const Polynomial& f) {
  Sturm seq{f, f.derivative()};
  while (!seq.back().is_zero()) {
    Polynomial q, r;
    Polynomial::divmod(seq[seq.size() - 2], seq.back(), q, r);
    seq.push_back(Rational(-1) * r);
  }
  seq.pop_back();
  return seq;
}

int sign_changes(const Sturm& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& s : seq) {
    int v = sgn(s(x));
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

Rational cauchy_bound(const Polynomial& f) {
  Rational m = 0;
  for (int i = 0; i < f.degree(); ++i) m = std::max(m, Rational(abs(f.coeff(i) / f.leading())));
  return m + 1;
}

void isolate(const Sturm& seq, const Rational& lo, const Rational& hi, int vlo, int vhi,
             std::vector<RootInterval>& out) {
  int count = vlo - vhi;
  if (count <= 0) return;
  if (count == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rational mid = (lo + hi) / 2;
  int vmid = sign_changes(seq, mid);
  isolate(seq, lo, mid, vlo, vmid, out);
  isolate(seq, mid, hi, vmid, vhi, out);
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const Polynomial& f) {
  if (f.is_zero()) throw InvalidArgument("isolate_real_roots: zero polynomial");
  std::vector<RootInterval> out;
  if (f.degree() == 0) return out;
  Polynomial g = squarefree_kernel(f);
  Sturm seq = sturm_sequence(g);
  Rational bound = cauchy_bound(g) + 1;
  isolate(seq, -bound, bound, sign_changes(seq, -bound), sign_changes(seq, bound), out);
  return out;
}

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw InvalidArgument("simplest_rational_between: empty interval");
  if (sgn(lo) < 0 && sgn(hi) > 0) return 0;
  if (sgn(hi) <= 0) return -simplest_rational_between(-hi, -lo);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl + 1) < hi) return Rational(fl + 1);
  // lo and hi share the integer part fl (hi may equal fl + 1).
  Rational frac_lo = lo - fl;
  Rational upper_y = 1 / (hi - fl);
  Rational y;
  if (frac_lo == 0) {
    Integer c;
    mpz_fdiv_q(c.get_mpz_t(), upper_y.get_num_mpz_t(), upper_y.get_den_mpz_t());
    y = Rational(c + 1);
  } else {
    y = simplest_rational_between(upper_y, 1 / frac_lo);
  }
  return Rational(fl) + 1 / y;
}

std::vector<Rational> rational_roots(const Polynomial& f) {
  if (f.is_zero()) throw InvalidArgument("rational_roots: zero polynomial");
  Polynomial g = squarefree_kernel(f);
  std::vector<Integer> ints = primitive_integer_coeffs(g);
  Integer lead = abs(ints.back());
  Rational width_limit(1, lead * lead);
  Sturm seq = sturm_sequence(g);
  std::vector<Rational> out;
  for (auto iv : isolate_real_roots(g)) {
    if (g(iv.hi) == 0) {
      out.push_back(iv.hi);
      continue;
    }
    // Any rational root has denominator dividing lead; two such rationals
    // are at least 1/lead^2 apart, so a narrower interval holds at most one.
    int vlo = sign_changes(seq, iv.lo);
    while (iv.hi - iv.lo >= width_limit) {
      Rational mid = (iv.lo + iv.hi) / 2;
      if (g(mid) == 0) {
        iv.lo = iv.hi = mid;
        break;
      }
      int vmid = sign_changes(seq, mid);
      if (vlo - vmid == 1) {
        iv.hi = mid;
      } else {
        iv.lo = mid;
        vlo = vmid;
      }
    }
    Rational candidate = iv.lo == iv.hi ? iv.lo : simplest_rational_between(iv.lo, iv.hi);
    if (g(candidate) == 0) out.push_back(candidate);
  }
  return out;
}

Integer eval(const std::vector<Integer>& f, const Integer& x) {
  Integer acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Integer> taylor_shift(const std::vector<Integer>& f, const Integer& center, const Integer& scale) {
  // Horner in the polynomial ring: acc(t) <- acc(t) * (center + scale t) + c.
  std::vector<Integer> acc;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    std::vector<Integer> next(acc.size() + 1, Integer(0));
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j] += acc[j] * center;
      next[j + 1] += acc[j] * scale;
    }
    next[0] += *it;
    acc = std::move(next);
  }
  return acc;
}

namespace {

using ModPoly = std::vector<Integer>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly reduce(const ModPoly& a, const Integer& p) {
  ModPoly out;
  for (const auto& c : a) out.push_back(mod(c, p));
  trim(out);
  return out;
}

// Remainder of a by the monic b.
ModPoly rem_monic(ModPoly a, const ModPoly& b, const Integer& p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    Integer factor = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = mod(a[shift + j] - factor * b[j], p);
    trim(a);
  }
  return a;
}

ModPoly make_monic(ModPoly a, const Integer& p) {
  Integer inv = mod_inverse(a.back(), p);
  for (auto& c : a) c = mod(c * inv, p);
  return a;
}

ModPoly mul_mod(const ModPoly& a, const ModPoly& b, const ModPoly& m, const Integer& p) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return rem_monic(reduce(out, p), m, p);
}

ModPoly pow_mod(ModPoly base, Integer exp, const ModPoly& m, const Integer& p) {
  ModPoly result = rem_monic({Integer(1)}, m, p);
  base = rem_monic(base, m, p);
  while (exp > 0) {
    if (mpz_odd_p(exp.get_mpz_t())) result = mul_mod(result, base, m, p);
    base = mul_mod(base, base, m, p);
    exp >>= 1;
  }
  return result;
}

ModPoly gcd_mod(ModPoly a, ModPoly b, const Integer& p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    b = make_monic(b, p);
    a = rem_monic(a, b, p);
    std::swap(a, b);
  }
  if (a.empty()) return a;
  return make_monic(a, p);
}

ModPoly sub_mod(ModPoly a, const ModPoly& b, const Integer& p) {
  if (a.size() < b.size()) a.resize(b.size(), Integer(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] - b[i], p);
  trim(a);
  return a;
}

ModPoly div_exact_monic(const ModPoly& a, const ModPoly& b, const Integer& p) {
  ModPoly r = a;
  const std::size_t db = b.size() - 1;
  ModPoly q(a.size() - db, Integer(0));
  for (std::size_t i = a.size(); i-- > db;) {
    Integer factor = r[i];
    q[i - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = mod(r[i - db + j] - factor * b[j], p);
  }
  trim(q);
  return q;
}

void split_roots(const ModPoly& g, const Integer& p, std::vector<Integer>& out) {
  const std::size_t deg = g.size() - 1;
  if (deg == 0) return;
  if (deg == 1) {
    out.push_back(mod(-g[0], p));
    return;
  }
  Integer half = (p - 1) / 2;
  for (unsigned long shift = 1;; ++shift) {
    ModPoly h = pow_mod({Integer(shift), Integer(1)}, half, g, p);
    h = sub_mod(h, {Integer(1)}, p);
    ModPoly d = gcd_mod(g, h, p);
    if (!d.empty() && d.size() > 1 && d.size() < g.size()) {
      split_roots(d, p, out);
      split_roots(div_exact_monic(g, d, p), p, out);
      return;
    }
  }
}

}  // namespace

std::vector<Integer> roots_mod_p(const std::vector<Integer>& f, const Integer& p) {
  ModPoly g = reduce(f, p);
  if (g.empty()) throw InvalidArgument("roots_mod_p: polynomial vanishes identically mod p");
  std::vector<Integer> out;
  if (g.size() == 1) return out;
  if (p < 65536) {
    for (Integer x = 0; x < p; ++x) {
      if (mod(eval(g, x), p) == 0) out.push_back(x);
    }
    return out;
  }
  g = make_monic(g, p);
  ModPoly xp = pow_mod({Integer(0), Integer(1)}, p, g, p);
  ModPoly linear_part = gcd_mod(g, sub_mod(xp, {Integer(0), Integer(1)}, p), p);
  split_roots(linear_part, p, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace chatelet
