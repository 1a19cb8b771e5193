#include "chatelet/obstruction.hpp"

#include <random>
#include <set>

namespace chatelet {

std::optional<Rational> BrauerClass::value(Rep rep, const ProjectivePoint& pt) const {
  const Rational x(pt.x), w(pt.w);
  Rational out;
  switch (rep) {
    case Rep::kFirstFactor:
      out = x * x + Rational(c) * w * w;
      break;
    case Rep::kSecondFactor:
      out = Rational(a) * x * x + Rational(a * c + 1) * w * w;
      break;
    case Rep::kInverted:
      if (pt.x == 0) return std::nullopt;
      out = (x * x + Rational(c) * w * w) / (x * x);
      break;
  }
  if (out == 0) return std::nullopt;
  return out;
}

std::string BrauerClass::describe(Rep rep) {
  switch (rep) {
    case Rep::kFirstFactor:
      return "x^2+c";
    case Rep::kSecondFactor:
      return "a*x^2+a*c+1";
    case Rep::kInverted:
      return "1+c/x^2";
  }
  return "";
}

BrauerClass brauer_class(const ChateletSurface& s) {
  if (!s.params()) throw InvalidArgument("brauer_class: only constructed surfaces carry the class");
  const auto& prm = *s.params();
  return BrauerClass{s.alpha(), prm.a, prm.c};
}

Invariant eval_invariant(const BrauerClass& A, const CertifiedLocalX& pt) {
  using Rep = BrauerClass::Rep;
  std::optional<Rational> f;
  if (pt.x.is_infinity()) {
    f = A.value(Rep::kInverted, pt.x);
  } else {
    f = A.value(Rep::kFirstFactor, pt.x);
    if (!f) f = A.value(Rep::kSecondFactor, pt.x);
  }
  if (!f) throw InvalidArgument("eval_invariant: every representation vanishes at " + pt.x.to_string());
  return inv_from_symbol(hilbert_symbol(A.alpha, *f, pt.place));
}

std::vector<Invariant> eval_invariant_all_reps(const BrauerClass& A, const CertifiedLocalX& pt) {
  std::vector<Invariant> out;
  for (auto rep : kAllReps) {
    if (auto f = A.value(rep, pt.x)) out.push_back(inv_from_symbol(hilbert_symbol(A.alpha, *f, pt.place)));
  }
  return out;
}

std::vector<CertifiedLocalX> sample_certified_points(const ChateletSurface& s, const Place& v, std::size_t n,
                                                     std::uint64_t seed) {
  std::vector<CertifiedLocalX> out;
  if (n == 0) return out;
  constexpr long kHeight = 1000;
  // Mix the place into the seed so each place draws its own stream.
  std::uint64_t place_word = v.is_real() ? 0 : mpz_get_ui(v.prime().get_mpz_t());
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(place_word), static_cast<std::uint32_t>(place_word >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<long> num(-kHeight, kHeight), den(1, kHeight);
  std::set<std::pair<Integer, Integer>> seen;
  const std::size_t budget = 20000 + 200 * n;
  for (std::size_t attempt = 0; attempt < budget && out.size() < n; ++attempt) {
    ProjectivePoint x = ProjectivePoint::make(num(rng), den(rng));
    if (!seen.insert({x.x, x.w}).second) continue;
    Rational value = s.Ptilde().at(x);
    CertifiedLocalX pt{x, v, CertifiedLocalX::Certificate::kSymbol};
    if (value == 0) {
      pt.certificate = CertifiedLocalX::Certificate::kDegenerate;
    } else if (hilbert_symbol(s.alpha(), value, v) != Symbol::kPlusOne) {
      continue;
    }
    out.push_back(pt);
  }
  if (out.size() < n) {
    throw NotFound("insufficient points found at place " + v.to_string() + ": " + std::to_string(out.size()) +
                   " of " + std::to_string(n));
  }
  return out;
}

ObstructionReport obstruction_report(const ChateletSurface& s, std::size_t samples_per_place, std::uint64_t seed) {
  BrauerClass A = brauer_class(s);
  LocalReport local = verify_local_everywhere(s);
  ObstructionReport report;
  bool all_constant_and_solvable = true;
  for (const auto& entry : local.places) {
    PlaceInvariant row{entry.place, entry.solvable, entry.witness, 0, std::nullopt};
    if (!entry.solvable) {
      all_constant_and_solvable = false;
      report.places.push_back(row);
      continue;
    }
    std::vector<CertifiedLocalX> points{*entry.witness};
    for (auto& pt : sample_certified_points(s, entry.place, samples_per_place, seed)) points.push_back(pt);
    std::optional<Invariant> common;
    for (const auto& pt : points) {
      if (!check_certificate(s, pt)) throw ObstructionFailure("uncertified sample at " + entry.place.to_string());
      for (Invariant inv : eval_invariant_all_reps(A, pt)) {
        if (!common) common = inv;
        if (inv != *common) {
          throw ObstructionFailure("invariant not constant at place " + entry.place.to_string() + " (x = " +
                                   pt.x.to_string() + ")");
        }
      }
    }
    row.points = points.size();
    row.invariant = common;
    if (common) report.sum = report.sum + *common;
    report.places.push_back(row);
  }
  report.certified_empty = all_constant_and_solvable && report.sum.is_half();
  return report;
}

}  // namespace chatelet
