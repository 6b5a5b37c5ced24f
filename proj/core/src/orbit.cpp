#include "floormap/orbit.hpp"

#include <boost/multiprecision/integer.hpp>

#include <stdexcept>
#include <string>

namespace floormap {

Int apply_map(const Rational& lambda, const Rational& x) { return (lambda * x).floor(); }

Int apply_map(const Rational& lambda, const Int& x) {
  // floor((num * x) / den) with den > 0; divide_qr truncates toward zero,
  // so negative non-exact quotients need the usual floor fix-up.
  Int t = lambda.num() * x;
  Int q, r;
  boost::multiprecision::divide_qr(t, lambda.den(), q, r);
  if (r != 0 && t < 0) --q;
  return q;
}

std::optional<DivergenceCertificate> certify_divergence(const LambdaRegion& region,
                                                        const Rational& lambda, const Int& v) {
  switch (region.tag) {
    case RegionTag::AboveOne: {
      if (v >= region.m) {
        // Escape upward: floor(lambda*v) >= v+1, verified rather than trusted.
        if (apply_map(lambda, v) >= v + 1)
          return DivergenceCertificate{DivergenceCertificate::Kind::PositiveRay, v, 0, region};
        return std::nullopt;
      }
      if (v < 0) {
        if (apply_map(lambda, v) <= v - 1)
          return DivergenceCertificate{DivergenceCertificate::Kind::NegativeRay, v, 0, region};
        return std::nullopt;
      }
      return std::nullopt;
    }
    case RegionTag::BelowMinusOne: {
      if (v < 1) return std::nullopt;
      // Two-step alternation check: one step drops below -(v+1), the
      // next swings back above v+1, so |iterates| grow forever.
      Int w = apply_map(lambda, v);
      if (w > -(v + 1)) return std::nullopt;
      if (apply_map(lambda, w) < v + 1) return std::nullopt;
      return DivergenceCertificate{DivergenceCertificate::Kind::Alternating, v, 0, region};
    }
    default:
      // |lambda| <= 1 has no divergent orbits; nothing to certify.
      return std::nullopt;
  }
}

std::optional<DivergenceCertificate> certify_divergence(const Rational& lambda, const Int& v) {
  return certify_divergence(classify_lambda(lambda), lambda, v);
}

Int default_max_steps(const Rational& x0) {
  Int n = x0.num();
  if (n < 0) n = -n;
  return 10 * (n + x0.den()) + 64;
}

Orbit simulate_orbit(const Rational& lambda, const Rational& x0, const Int& max_steps) {
  if (max_steps < 1) throw std::invalid_argument("simulate_orbit: max_steps must be >= 1");

  LambdaRegion region = classify_lambda(lambda);
  Orbit orbit;
  orbit.lambda = lambda;
  orbit.start = x0;

  Int v = apply_map(lambda, x0);
  for (Int step = 1;; ++step) {
    orbit.prefix.push_back(v);
    std::size_t n = orbit.prefix.size();

    if (n >= 2 && v == orbit.prefix[n - 2]) {
      orbit.classification = Fixed{v};
      break;
    }
    if (n >= 3 && v == orbit.prefix[n - 3] && v != orbit.prefix[n - 2]) {
      orbit.classification = make_two_cycle(v, orbit.prefix[n - 2]);
      break;
    }
    if (auto cert = certify_divergence(region, lambda, v)) {
      cert->witness_index = Int(n);
      switch (cert->kind) {
        case DivergenceCertificate::Kind::PositiveRay:
          orbit.classification = PlusInfinity{};
          break;
        case DivergenceCertificate::Kind::NegativeRay:
          orbit.classification = MinusInfinity{};
          break;
        case DivergenceCertificate::Kind::Alternating:
          // The witness is positive; even-indexed iterates share its sign
          // exactly when it sits at an even index.
          orbit.classification = AlternatingInfinity{n % 2 == 0 ? +1 : -1};
          break;
      }
      orbit.certificate = std::move(cert);
      break;
    }
    if (step >= max_steps) break;  // Exhausted: classification stays empty
    v = apply_map(lambda, v);
  }

  orbit.steps = orbit.prefix.size();
  return orbit;
}

LimitBehavior omega_limit(const Rational& lambda, const Rational& x0) {
  Orbit orbit = simulate_orbit(lambda, x0, default_max_steps(x0));
  if (orbit.exhausted())
    throw std::runtime_error("omega_limit: orbit of " + x0.str() + " under lambda=" +
                             lambda.str() + " exhausted " + std::to_string(orbit.steps) +
                             " steps without a decision");
  return *orbit.classification;
}

std::vector<std::pair<Rational, Rational>> cobweb_points(const Rational& lambda,
                                                         const Rational& x0, const Int& n) {
  if (n < 1) throw std::invalid_argument("cobweb_points: n must be >= 1");

  LambdaRegion region = classify_lambda(lambda);
  std::vector<std::pair<Rational, Rational>> points;
  Rational cur = x0;
  for (Int i = 0; i < n; ++i) {
    Int next = apply_map(lambda, cur);
    Rational next_r(next);
    points.emplace_back(cur, next_r);        // vertical: onto the graph
    points.emplace_back(next_r, next_r);     // horizontal: back to the diagonal
    if (certify_divergence(region, lambda, next)) break;
    cur = next_r;
  }
  return points;
}

}  // namespace floormap
