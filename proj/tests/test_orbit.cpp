#include "floormap/orbit.hpp"

#include "floormap/analysis.hpp"

#include "doctest.h"

#include <stdexcept>
#include <utility>
#include <vector>

using namespace floormap;

TEST_CASE("apply_map floors exactly") {
  CHECK(apply_map(Rational(-3, 2), Rational(5, 2)) == -4);
  CHECK(apply_map(Rational(1, 2), Rational(7)) == 3);
  CHECK(apply_map(Rational(2), Rational(-1, 3)) == -1);
  CHECK(apply_map(Rational(0), Rational(-17, 5)) == 0);
  CHECK(apply_map(Rational(-1), Rational(5, 2)) == -3);

  SUBCASE("integer overload agrees with the rational one") {
    std::vector<Rational> lambdas = {Rational(-5, 2), Rational(-1), Rational(-3, 7), Rational(0),
                                     Rational(2, 3),  Rational(1),  Rational(8, 5),  Rational(3)};
    for (const Rational& lambda : lambdas)
      for (Int x = -25; x <= 25; ++x)
        CHECK(apply_map(lambda, x) == apply_map(lambda, Rational(x)));
  }

  SUBCASE("result is the floor: f(x) <= lambda*x < f(x)+1") {
    for (long long p = -20; p <= 20; ++p) {
      for (long long q = 1; q <= 7; ++q) {
        Rational lambda(p, q);
        for (Int x = -9; x <= 9; ++x) {
          Int y = apply_map(lambda, x);
          CHECK(Rational(y) <= lambda * Rational(x));
          CHECK(lambda * Rational(x) < Rational(y + 1));
        }
      }
    }
  }
}

TEST_CASE("certify_divergence issues sound certificates") {
  SUBCASE("frozen examples") {
    auto pos = certify_divergence(Rational(3, 2), 2);
    REQUIRE(pos.has_value());
    CHECK(pos->kind == DivergenceCertificate::Kind::PositiveRay);
    CHECK(pos->witness == 2);

    auto neg = certify_divergence(Rational(2), -1);
    REQUIRE(neg.has_value());
    CHECK(neg->kind == DivergenceCertificate::Kind::NegativeRay);
    CHECK(neg->witness == -1);

    auto alt = certify_divergence(Rational(-2), 1);
    REQUIRE(alt.has_value());
    CHECK(alt->kind == DivergenceCertificate::Kind::Alternating);
    CHECK(alt->witness == 1);

    CHECK(!certify_divergence(Rational(1, 2), 5).has_value());
    CHECK(!certify_divergence(Rational(1), 100).has_value());
    CHECK(!certify_divergence(Rational(-1), 100).has_value());
    CHECK(!certify_divergence(Rational(-1, 2), -7).has_value());
  }

  SUBCASE("no certificate below the region's divergence threshold") {
    // lambda = 3/2 has m = 2: values 0 and 1 are fixed, so not divergent.
    CHECK(!certify_divergence(Rational(3, 2), 0).has_value());
    CHECK(!certify_divergence(Rational(3, 2), 1).has_value());
    CHECK(certify_divergence(Rational(3, 2), 2).has_value());
    // lambda = -3/2: 0 is fixed, and only positive witnesses are certified
    // directly (a negative value certifies via its next, positive iterate).
    CHECK(!certify_divergence(Rational(-3, 2), 0).has_value());
    CHECK(certify_divergence(Rational(-3, 2), 1).has_value());
    CHECK(!certify_divergence(Rational(-3, 2), -1).has_value());
  }

  SUBCASE("certified witnesses really do run away") {
    std::vector<std::pair<Rational, Int>> cases = {
        {Rational(3, 2), 2},   {Rational(3, 2), 100},  {Rational(11, 10), 10},
        {Rational(2), -1},     {Rational(5, 2), -400}, {Rational(-2), 1},
        {Rational(-9, 8), 8},  {Rational(-50), 3},
    };
    for (const auto& [lambda, v] : cases) {
      auto cert = certify_divergence(lambda, v);
      REQUIRE(cert.has_value());
      Int a = v;
      if (cert->kind == DivergenceCertificate::Kind::PositiveRay) {
        for (int i = 0; i < 3; ++i) {
          Int b = apply_map(lambda, a);
          CHECK(b >= a + 1);
          a = b;
        }
      } else if (cert->kind == DivergenceCertificate::Kind::NegativeRay) {
        for (int i = 0; i < 3; ++i) {
          Int b = apply_map(lambda, a);
          CHECK(b <= a - 1);
          a = b;
        }
      } else {
        for (int i = 0; i < 3; ++i) {
          Int b = apply_map(lambda, a);
          CHECK(b <= -(a + 1));
          Int c = apply_map(lambda, b);
          CHECK(c >= a + 1);
          a = c;
        }
      }
    }
  }

  SUBCASE("region overload matches the two-argument form") {
    Rational lambda(7, 4);
    LambdaRegion region = classify_lambda(lambda);
    for (Int v = -6; v <= 6; ++v)
      CHECK(certify_divergence(lambda, v).has_value() ==
            certify_divergence(region, lambda, v).has_value());
  }
}

TEST_CASE("simulate_orbit reproduces frozen traces") {
  SUBCASE("convergent: lambda=-1/2, x0=9") {
    Orbit o = simulate_orbit(Rational(-1, 2), Rational(9), 100);
    CHECK(o.prefix == std::vector<Int>{-5, 2, -1, 0, 0});
    CHECK(o.steps == 5);
    REQUIRE(o.classification.has_value());
    CHECK(*o.classification == LimitBehavior{Fixed{0}});
    CHECK(!o.certificate.has_value());
    CHECK(!o.exhausted());
  }

  SUBCASE("immediately fixed: lambda=5/4, x0=2") {
    Orbit o = simulate_orbit(Rational(5, 4), Rational(2), 100);
    CHECK(o.prefix == std::vector<Int>{2, 2});
    CHECK(*o.classification == LimitBehavior{Fixed{2}});
  }

  SUBCASE("two-cycle: lambda=-1, x0=5/2") {
    Orbit o = simulate_orbit(Rational(-1), Rational(5, 2), 100);
    CHECK(o.prefix == std::vector<Int>{-3, 3, -3});
    CHECK(*o.classification == LimitBehavior{make_two_cycle(-3, 3)});
  }

  SUBCASE("certified +inf: lambda=3/2, x0=10") {
    Orbit o = simulate_orbit(Rational(3, 2), Rational(10), 100);
    CHECK(o.prefix == std::vector<Int>{15});
    CHECK(*o.classification == LimitBehavior{PlusInfinity{}});
    REQUIRE(o.certificate.has_value());
    CHECK(o.certificate->kind == DivergenceCertificate::Kind::PositiveRay);
    CHECK(o.certificate->witness == 15);
    CHECK(o.certificate->witness_index == 1);
  }

  SUBCASE("certified alternating: lambda=-3/2, x0=1") {
    Orbit o = simulate_orbit(Rational(-3, 2), Rational(1), 100);
    CHECK(o.prefix == std::vector<Int>{-2, 3});
    REQUIRE(o.classification.has_value());
    CHECK(*o.classification == LimitBehavior{AlternatingInfinity{+1}});
    REQUIRE(o.certificate.has_value());
    CHECK(o.certificate->kind == DivergenceCertificate::Kind::Alternating);
    CHECK(o.certificate->witness == 3);
    CHECK(o.certificate->witness_index == 2);
  }

  SUBCASE("negative alternating start flips the even sign") {
    Orbit o = simulate_orbit(Rational(-3, 2), Rational(-5), 100);
    REQUIRE(o.classification.has_value());
    CHECK(*o.classification == LimitBehavior{AlternatingInfinity{-1}});
    REQUIRE(o.certificate.has_value());
    CHECK(o.certificate->witness == 7);
    CHECK(o.certificate->witness_index == 1);
  }

  SUBCASE("budget exhaustion is first-class") {
    Orbit o = simulate_orbit(Rational(-9, 10), Rational(-10), 3);
    CHECK(o.exhausted());
    CHECK(!o.classification.has_value());
    CHECK(o.prefix.size() == 3);
    CHECK(o.steps == 3);
    CHECK(o.prefix == std::vector<Int>{9, -9, 8});
  }

  SUBCASE("a zero budget is rejected outright") {
    CHECK_THROWS_AS(simulate_orbit(Rational(1, 2), Rational(7), 0), std::invalid_argument);
  }
}

TEST_CASE("convergence speed for |lambda| <= 1") {
  // For 0 <= lambda <= 1 and lambda = -1 the orbit settles within
  // K + 3 entries, K = |floor(lambda*x0)|.  For -1 < lambda < 0 the
  // magnitude can decrease by as little as one per *pair* of steps,
  // so the tight bound is 2K + 3.
  SUBCASE("pinned counterexample to the K + 3 bound on (-1, 0)") {
    Rational lambda(-9, 10);
    Rational x0(-10);
    Int k = abs((lambda * x0).floor());
    CHECK(k == 9);
    Orbit o = simulate_orbit(lambda, x0, 1000);
    CHECK(*o.classification == LimitBehavior{Fixed{0}});
    CHECK(o.steps == 20);             // exceeds K + 3 = 12 ...
    CHECK(Int(o.steps) <= 2 * k + 3);  // ... but respects 2K + 3
  }

  SUBCASE("K + 3 holds for 0 <= lambda <= 1 and lambda = -1; 2K + 3 on (-1, 0)") {
    std::vector<Rational> nonneg = {Rational(0),      Rational(1, 7), Rational(1, 2),
                                    Rational(9, 10),  Rational(1),    Rational(99, 100)};
    std::vector<Rational> negopen = {Rational(-1, 7), Rational(-1, 2), Rational(-9, 10),
                                     Rational(-99, 100)};
    std::vector<Rational> starts;
    for (long long p = -60; p <= 60; p += 7) starts.push_back(Rational(p, 3));
    starts.push_back(Rational(-1000));
    starts.push_back(Rational(997, 10));

    auto settle_steps = [](const Rational& lambda, const Rational& x0) {
      Orbit o = simulate_orbit(lambda, x0, 100000);
      REQUIRE(!o.exhausted());
      return Int(o.steps);
    };
    for (const Rational& x0 : starts) {
      for (const Rational& lambda : nonneg) {
        Int k = abs((lambda * x0).floor());
        CHECK(settle_steps(lambda, x0) <= k + 3);
      }
      CHECK(settle_steps(Rational(-1), x0) <= abs((Rational(-1) * x0).floor()) + 3);
      for (const Rational& lambda : negopen) {
        Int k = abs((lambda * x0).floor());
        CHECK(settle_steps(lambda, x0) <= 2 * k + 3);
      }
    }
  }
}

TEST_CASE("omega_limit names the eventual behavior") {
  CHECK(omega_limit(Rational(-1), Rational(7, 3)) == LimitBehavior{make_two_cycle(-3, 3)});
  CHECK(omega_limit(Rational(2), Rational(-1)) == LimitBehavior{MinusInfinity{}});
  CHECK(omega_limit(Rational(1), Rational(7, 2)) == LimitBehavior{Fixed{3}});

  SUBCASE("omega_limit agrees with predict_limit on a mixed grid") {
    std::vector<Rational> lambdas = {Rational(-3),   Rational(-3, 2), Rational(-1),
                                     Rational(-1, 2), Rational(0),    Rational(1, 2),
                                     Rational(3, 4), Rational(1),     Rational(3, 2),
                                     Rational(4)};
    for (const Rational& lambda : lambdas)
      for (long long p = -30; p <= 30; p += 1)
        CHECK(omega_limit(lambda, Rational(p, 4)) == predict_limit(lambda, Rational(p, 4)));
  }
}

TEST_CASE("cobweb_points traces (x, f(x)) pairs") {
  using P = std::pair<Rational, Rational>;
  CHECK(cobweb_points(Rational(1, 2), Rational(7), 2) ==
        std::vector<P>{{Rational(7), Rational(3)},
                       {Rational(3), Rational(3)},
                       {Rational(3), Rational(1)},
                       {Rational(1), Rational(1)}});
  CHECK(cobweb_points(Rational(1), Rational(5), 1) ==
        std::vector<P>{{Rational(5), Rational(5)}, {Rational(5), Rational(5)}});
  CHECK(cobweb_points(Rational(-1), Rational(2), 2) ==
        std::vector<P>{{Rational(2), Rational(-2)},
                       {Rational(-2), Rational(-2)},
                       {Rational(-2), Rational(2)},
                       {Rational(2), Rational(2)}});

  SUBCASE("divergence truncates the trace") {
    auto pts = cobweb_points(Rational(3), Rational(1), 10);
    CHECK(pts.size() == 2);  // (1,3) then the vertical step; 3 is certified divergent
    CHECK(pts[0] == P{Rational(1), Rational(3)});
    CHECK(pts[1] == P{Rational(3), Rational(3)});
  }

  SUBCASE("n must be positive") {
    CHECK_THROWS_AS(cobweb_points(Rational(1, 2), Rational(7), 0), std::invalid_argument);
  }
}

TEST_CASE("default_max_steps scales with the start's size") {
  CHECK(default_max_steps(Rational(9)) == 10 * (9 + 1) + 64);
  CHECK(default_max_steps(Rational(-7, 3)) == 10 * (7 + 3) + 64);
  CHECK(default_max_steps(Rational(0)) == 10 * (0 + 1) + 64);
}

TEST_CASE("orbit structural invariants") {
  std::vector<Rational> lambdas = {Rational(-5, 2), Rational(-1), Rational(-3, 4), Rational(0),
                                   Rational(2, 5),  Rational(1),  Rational(7, 6),  Rational(3)};
  for (const Rational& lambda : lambdas) {
    for (long long p = -24; p <= 24; p += 3) {
      Rational x0(p, 5);
      Orbit o = simulate_orbit(lambda, x0, default_max_steps(x0));
      CHECK(o.lambda == lambda);
      CHECK(o.start == x0);
      CHECK(o.steps == o.prefix.size());
      REQUIRE(!o.exhausted());  // everything in this grid resolves

      // Every entry is the image of its predecessor.
      if (!o.prefix.empty()) CHECK(o.prefix[0] == apply_map(lambda, x0));
      for (size_t i = 1; i < o.prefix.size(); ++i)
        CHECK(o.prefix[i] == apply_map(lambda, o.prefix[i - 1]));

      // The terminal evidence matches the classification.
      const LimitBehavior& b = *o.classification;
      if (const Fixed* f = std::get_if<Fixed>(&b)) {
        REQUIRE(o.prefix.size() >= 2);
        CHECK(o.prefix.back() == f->value);
        CHECK(o.prefix[o.prefix.size() - 2] == f->value);
        CHECK(apply_map(lambda, f->value) == f->value);
      } else if (const TwoCycle* c = std::get_if<TwoCycle>(&b)) {
        CHECK(apply_map(lambda, c->low) == c->high);
        CHECK(apply_map(lambda, c->high) == c->low);
      } else {
        REQUIRE(o.certificate.has_value());
        CHECK(o.certificate->witness == o.prefix.back());
        CHECK(o.certificate->witness_index == Int(o.prefix.size()));
      }

      // Certified orbits agree with the closed-form prediction.
      CHECK(b == predict_limit(lambda, x0));
    }
  }
}
