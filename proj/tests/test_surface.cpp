#include <gtest/gtest.h>

#include <random>

#include "chatelet/surface.hpp"

namespace chatelet {
namespace {

Rational q(long n, long d = 1) { return make_rational(Integer(n), Integer(d)); }
Place fin(long p) { return Place::finite(Integer(p)); }

ChateletSurface constructed() { return build_surface(find_params(Integer(100))); }

Poly4 poly(long c0, long c1, long c2, long c3, long c4) { return Poly4{{q(c0), q(c1), q(c2), q(c3), q(c4)}}; }

TEST(FindParams, Examples) {
  ChateletParams p = find_params(Integer(100));
  EXPECT_EQ(p, (ChateletParams{Integer(41), Integer(17), Integer(12)}));
  EXPECT_EQ(mod(p.a * p.c + 1, p.b), 0);
  EXPECT_EQ(p.a * p.c + 1, 493);
  EXPECT_THROW(find_params(Integer(16)), NotFound);
  try {
    find_params(Integer(16));
  } catch (const NotFound& e) {
    EXPECT_NE(std::string(e.what()).find("not found below bound"), std::string::npos);
  }
  EXPECT_EQ(find_params(Integer(1000)), p);
}

TEST(FindParams, ValidateRejectsBadParameters) {
  EXPECT_THROW(validate({Integer(41), Integer(17), Integer(13)}), InvalidArgument);
  EXPECT_THROW(validate({Integer(17), Integer(17), Integer(12)}), InvalidArgument);
  EXPECT_THROW(validate({Integer(13), Integer(17), Integer(12)}), InvalidArgument);
  // 73 = 5 mod 17 is a non-residue? 5 is a non-residue mod 17, so 73 passes;
  // 89 = 4 mod 17 is a residue and must fail.
  EXPECT_THROW(validate({Integer(89), Integer(17), Integer(0)}), InvalidArgument);
}

TEST(BuildSurface, Examples) {
  ChateletSurface s = constructed();
  EXPECT_EQ(s.alpha(), q(697));
  EXPECT_EQ(s.P(), poly(5916, 0, 985, 0, 41));
  EXPECT_NE(quartic_disc(s.Ptilde()), 0);
  EXPECT_EQ(s.P()(q(0)), q(12 * 493));
  EXPECT_EQ(s.provenance(), Provenance::kConstructed);
  ASSERT_TRUE(s.params());
  // The two factors multiply back to P.
  for (long x = -5; x <= 5; ++x) EXPECT_EQ(s.P()(q(x)), q((x * x + 12) * (41 * x * x + 493)));
}

TEST(Iskovskikh, Examples) {
  ChateletSurface s = iskovskikh();
  EXPECT_EQ(s.alpha(), q(-1));
  EXPECT_EQ(s.P(), poly(-6, 0, 5, 0, -1));
  EXPECT_NE(quartic_disc(s.Ptilde()), 0);
  EXPECT_EQ(s.provenance(), Provenance::kIskovskikh);
  EXPECT_FALSE(s.params());
}

TEST(Homogenize, Examples) {
  EXPECT_EQ(homogenize(poly(0, 0, 1, 0, 0)).a, (std::array<Rational, 5>{q(0), q(0), q(1), q(0), q(0)}));
  BinaryQuartic h = homogenize(poly(5916, 0, 985, 0, 41));
  EXPECT_EQ(h(q(2), q(3)), q(41 * 81 + 985 * 9 * 4 + 5916 * 16));
  BinaryQuartic one = homogenize(poly(1, 0, 0, 0, 0));
  EXPECT_EQ(one(q(3), q(7)), q(81));
  // Round trip: Ptilde(1, x) = P(x).
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    Poly4 p = poly(rng() % 21 - 10, rng() % 21 - 10, rng() % 21 - 10, rng() % 21 - 10, rng() % 21 - 10);
    if (homogenize(p).is_zero()) continue;
    for (long x = -3; x <= 3; ++x) EXPECT_EQ(homogenize(p)(q(1), q(x)), p(q(x)));
    EXPECT_EQ(homogenize(p).x_chart(), Polynomial(std::vector<Rational>(p.c.begin(), p.c.end())));
  }
}

TEST(QuarticDisc, Examples) {
  EXPECT_NE(quartic_disc(BinaryQuartic{{q(1), q(0), q(0), q(0), q(1)}}), 0);
  EXPECT_EQ(quartic_disc(BinaryQuartic{{q(0), q(0), q(0), q(0), q(1)}}), 0);
  // x w (x - w)(x + w) = x^3 w - x w^3.
  EXPECT_NE(quartic_disc(BinaryQuartic{{q(0), q(-1), q(0), q(1), q(0)}}), 0);
  EXPECT_EQ(quartic_disc(constructed().Ptilde()), q(3880896));
  EXPECT_THROW(quartic_disc(BinaryQuartic{}), InvalidArgument);
}

// Zero discriminant iff a repeated root in P^1: a repeated finite root shows
// up in gcd(f, f'), a repeated root at infinity as a4 = a3 = 0.
bool has_repeated_root(const BinaryQuartic& b) {
  if (b.a[4] == 0 && b.a[3] == 0) return true;
  return gcd(b.x_chart(), b.x_chart().derivative()).degree() > 0;
}

TEST(QuarticDisc, AgreesWithGcdOnPlantedProducts) {
  std::mt19937_64 rng(77);
  int repeated = 0;
  for (int trial = 0; trial < 300; ++trial) {
    // Product of four linear forms (m_i x - n_i w), sometimes with a repeat.
    std::vector<std::pair<long, long>> lin;
    for (int i = 0; i < 4; ++i) {
      long m = static_cast<long>(rng() % 7) - 3, n = static_cast<long>(rng() % 7) - 3;
      if (m == 0 && n == 0) m = 1;
      lin.push_back({m, n});
    }
    if (rng() % 3 == 0) lin[3] = lin[static_cast<std::size_t>(rng() % 3)];
    // Coefficients of prod (m x - n w) indexed by the power of x.
    std::vector<Rational> c{q(1)};
    for (auto [m, n] : lin) {
      std::vector<Rational> next(c.size() + 1, q(0));
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + 1] += q(m) * c[i];
        next[i] -= q(n) * c[i];
      }
      c = next;
    }
    BinaryQuartic b{{c[0], c[1], c[2], c[3], c[4]}};
    bool zero = quartic_disc(b) == 0;
    EXPECT_EQ(zero, has_repeated_root(b));
    repeated += zero;
  }
  EXPECT_GT(repeated, 50);
}

TEST(QuarticDisc, AgreesWithGcdOnRandomForms) {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 300; ++trial) {
    BinaryQuartic b;
    for (auto& c : b.a) c = q(static_cast<long>(rng() % 5) - 2);
    if (b.is_zero()) continue;
    EXPECT_EQ(quartic_disc(b) == 0, has_repeated_root(b));
  }
}

TEST(BadPlaces, Examples) {
  auto names = [](const std::vector<Place>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
  };
  EXPECT_EQ(names(bad_places(constructed())), (std::vector<std::string>{"inf", "2", "3", "17", "29", "41"}));
  // disc = 16 * 6 * (25 - 24)^2 = 96 = 2^5 * 3.
  EXPECT_EQ(names(bad_places(iskovskikh())), (std::vector<std::string>{"inf", "2", "3"}));
  // Denominators of alpha and of P count.
  ChateletSurface s(q(3, 5), Poly4{{q(1, 7), q(0), q(0), q(0), q(1)}}, Provenance::kUser);
  auto ps = bad_places(s);
  EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end()));
  for (long p : {3, 5, 7}) EXPECT_NE(std::find(ps.begin(), ps.end(), fin(p)), ps.end()) << p;
}

TEST(ProjectivePoint, CanonicalForms) {
  EXPECT_EQ(ProjectivePoint::make(Integer(4), Integer(-6)).to_string(), "-2/3");
  EXPECT_EQ(ProjectivePoint::make(Integer(-5), Integer(0)).to_string(), "inf");
  EXPECT_EQ(ProjectivePoint::parse("6/4"), ProjectivePoint::make(Integer(3), Integer(2)));
  EXPECT_EQ(ProjectivePoint::make(Integer(7), Integer(3)).height(), 7);
  EXPECT_THROW(ProjectivePoint::make(Integer(0), Integer(0)), InvalidArgument);
}

TEST(LocalSolvable, ConstructedSurfaceExamples) {
  ChateletSurface s = constructed();
  LocalResult at17 = local_solvable_surface(s, fin(17));
  ASSERT_TRUE(at17.solvable);
  ASSERT_TRUE(at17.witness);
  EXPECT_TRUE(check_certificate(s, *at17.witness));
  EXPECT_EQ(at17.witness->place, fin(17));
  // Places outside the bad set are solvable by the norm argument; spot check.
  for (long p : {5, 7, 11, 13, 19, 101, 1009}) {
    LocalResult r = local_solvable_surface(s, fin(p));
    ASSERT_TRUE(r.solvable) << p;
    EXPECT_TRUE(check_certificate(s, *r.witness));
  }
}

TEST(LocalSolvable, IskovskikhReal) {
  ChateletSurface s = iskovskikh();
  LocalResult r = local_solvable_surface(s, Place::real());
  ASSERT_TRUE(r.solvable);
  EXPECT_TRUE(check_certificate(s, *r.witness));
  EXPECT_GT(s.P()(q(3, 2)), 0);
  EXPECT_TRUE(check_certificate(s, CertifiedLocalX{ProjectivePoint::parse("3/2"), Place::real()}));
}

TEST(LocalSolvable, NegativeEverywhereFailsAtReal) {
  ChateletSurface s(q(-1), poly(-1, 0, 0, 0, -1), Provenance::kUser);
  EXPECT_FALSE(local_solvable_surface(s, Place::real()).solvable);
  LocalReport r = verify_local_everywhere(s);
  EXPECT_FALSE(r.all_solvable);
  EXPECT_EQ(r.places.front().place, Place::real());
  EXPECT_FALSE(r.places.front().solvable);
}

TEST(LocalSolvable, VerifyEverywhere) {
  for (const ChateletSurface& s : {constructed(), iskovskikh()}) {
    LocalReport r = verify_local_everywhere(s);
    EXPECT_TRUE(r.all_solvable);
    EXPECT_EQ(r.good_places, "norm-argument");
    EXPECT_EQ(r.places.size(), bad_places(s).size());
    for (const auto& row : r.places) {
      ASSERT_TRUE(row.witness);
      EXPECT_TRUE(check_certificate(s, *row.witness));
    }
  }
}

TEST(LocalSolvable, SingularSurfaceRejected) {
  ChateletSurface s(q(2), poly(0, 0, 1, 0, 0), Provenance::kUser);
  EXPECT_THROW(local_solvable_surface(s, fin(3)), InvalidArgument);
}

// Enumeration oracle: x over residues mod p^N on both charts with
// N = v_p(4 alpha disc) + 3, integer-scaled coefficients.
std::optional<bool> enumeration_oracle(const ChateletSurface& s, long p) {
  Integer den = 1;
  for (const auto& c : s.Ptilde().a) den = lcm(den, c.get_den());
  std::vector<Integer> coeffs;
  for (const auto& c : s.Ptilde().a) coeffs.push_back(c.get_num() * (den / c.get_den()) * den);
  Rational alpha_scaled = s.alpha() * Rational(s.alpha().get_den() * s.alpha().get_den());
  Rational d = quartic_disc(BinaryQuartic{{Rational(coeffs[0]), Rational(coeffs[1]), Rational(coeffs[2]),
                                            Rational(coeffs[3]), Rational(coeffs[4])}});
  long n = valuation(4 * alpha_scaled * d, Integer(p)) + 3;
  Integer modulus = pow(Integer(p), static_cast<unsigned long>(n));
  if (modulus > 400000) return std::nullopt;
  const Place v = fin(p);
  auto good = [&](const Integer& value) {
    return value == 0 || hilbert_symbol(s.alpha(), Rational(value), v) == Symbol::kPlusOne;
  };
  for (Integer x = 0; x < modulus; ++x) {
    Integer val = 0, xp = 1;
    for (int i = 0; i <= 4; ++i) {
      val += coeffs[i] * xp;
      xp *= x;
    }
    if (good(val)) return true;
  }
  for (Integer w = 0; w < modulus; w += p) {
    Integer val = 0, wp = 1;
    for (int i = 4; i >= 0; --i) {
      val += coeffs[i] * wp;
      wp *= w;
    }
    if (good(val)) return true;
  }
  return false;
}

TEST(LocalSolvable, AgreesWithEnumerationOracle) {
  std::mt19937_64 rng(2024);
  int compared = 0, unsolvable = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    long alpha = 0;
    while (alpha == 0) alpha = static_cast<long>(rng() % 41) - 20;
    Poly4 p = poly(rng() % 13 - 6, rng() % 7 - 3, rng() % 13 - 6, rng() % 7 - 3, rng() % 9 - 4);
    if (p.c[4] == 0 && p.c[3] == 0) continue;
    ChateletSurface s(q(alpha), p, Provenance::kUser);
    if (!s.is_smooth()) continue;
    for (long prime : {2, 3, 5, 7}) {
      auto oracle = enumeration_oracle(s, prime);
      if (!oracle) continue;
      LocalResult r = local_solvable_surface(s, fin(prime));
      ASSERT_EQ(r.solvable, *oracle) << "alpha " << alpha << " P " << s.Ptilde().x_chart().coeffs().size()
                                     << " p " << prime;
      if (r.solvable) EXPECT_TRUE(check_certificate(s, *r.witness));
      ++compared;
      unsolvable += !r.solvable;
    }
  }
  EXPECT_GT(compared, 2000);
  EXPECT_GT(unsolvable, 10);
}

TEST(LocalSolvable, RationalCoefficientsAndLargePrimes) {
  // A large prime in alpha forces the residue walk.
  ChateletSurface s(q(3 * 999983), Poly4{{q(5, 4), q(0), q(1, 9), q(0), q(7)}}, Provenance::kUser);
  for (const auto& v : bad_places(s)) {
    LocalResult r = local_solvable_surface(s, v);
    if (r.solvable) EXPECT_TRUE(check_certificate(s, *r.witness)) << v.to_string();
  }
  // Past the enumeration limit the walk refuses instead of guessing.
  ChateletSurface big(q(3 * 1000003), Poly4{{q(5, 4), q(0), q(1, 9), q(0), q(7)}}, Provenance::kUser);
  EXPECT_THROW(local_solvable_surface(big, fin(1000003)), std::domain_error);
  ChateletSurface t(q(-7), Poly4{{q(1000003), q(1), q(0), q(0), q(1)}}, Provenance::kUser);
  for (const auto& v : bad_places(t)) {
    LocalResult r = local_solvable_surface(t, v);
    if (r.solvable) EXPECT_TRUE(check_certificate(t, *r.witness)) << v.to_string();
  }
}

}  // namespace
}  // namespace chatelet
