#pragma once

#include "floormap/analysis.hpp"
#include "floormap/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace floormap {

/// One application of f: x -> floor(lambda * x).
Int apply_map(const Rational& lambda, const Rational& x);
/// Same map on an integer iterate, avoiding the Rational detour.
Int apply_map(const Rational& lambda, const Int& x);

/// Proof of divergence anchored at a single orbit value. Each kind names
/// the monotone-escape inequality that the witness satisfies; once it
/// holds, it propagates to every later iterate, so the orbit's fate is
/// decided without further simulation.
struct DivergenceCertificate {
  enum class Kind {
    PositiveRay,  // AboveOne(m), witness v >= m:  floor(lambda*v) >= v+1
    NegativeRay,  // AboveOne,    witness v < 0:   floor(lambda*v) <= v-1
    Alternating,  // BelowMinusOne, witness v >= 1: floor(lambda*v) <= -(v+1)
                  //                               and f^2(v) >= v+1
  };

  Kind kind;
  Int witness;
  /// Iterate index n with f^n(x0) = witness (1-based; 0 when the
  /// certificate was issued outside an orbit context). For Alternating,
  /// the parity of this index fixes which infinity the even-indexed
  /// subsequence reaches.
  Int witness_index = 0;
  LambdaRegion region;
};

/// Checks the region-specific escape inequality at v and returns the
/// certificate when it provably holds. Regions with no divergent orbits
/// never certify.
std::optional<DivergenceCertificate> certify_divergence(const Rational& lambda, const Int& v);
/// Overload for callers that already classified lambda.
std::optional<DivergenceCertificate> certify_divergence(const LambdaRegion& region,
                                                        const Rational& lambda, const Int& v);

/// A simulated trajectory. `prefix` holds the iterates f(x0), f^2(x0), ...
/// up to and including the value at which the terminal decision was made.
/// `classification` is empty exactly when the step budget ran out before
/// any decision (Exhausted) — never conflated with a real limit.
struct Orbit {
  Rational lambda;
  Rational start;
  std::vector<Int> prefix;
  std::optional<LimitBehavior> classification;
  std::size_t steps = 0;  // == prefix.size()
  std::optional<DivergenceCertificate> certificate;

  bool exhausted() const { return !classification.has_value(); }
};

/// Step budget used by omega_limit: generous slack over the worst case
/// for |lambda| <= 1, while certificates end |lambda| > 1 runs within a
/// couple of steps of leaving the bounded region.
Int default_max_steps(const Rational& x0);

/// Iterates until a value repeats its predecessor (fixed point), repeats
/// the value two back (two-cycle), a divergence certificate fires, or
/// max_steps is exhausted. Throws std::invalid_argument if max_steps < 1.
Orbit simulate_orbit(const Rational& lambda, const Rational& x0, const Int& max_steps);

/// Certified classification under the default budget. Exhaustion is a
/// theory/implementation mismatch and throws std::runtime_error.
LimitBehavior omega_limit(const Rational& lambda, const Rational& x0);

/// Staircase plot data: (x, f(x)), (f(x), f(x)), (f(x), f^2(x)), ...
/// Stops after 2n points, or earlier once an emitted value carries a
/// divergence certificate. Throws std::invalid_argument if n < 1.
std::vector<std::pair<Rational, Rational>> cobweb_points(const Rational& lambda,
                                                         const Rational& x0, const Int& n);

}  // namespace floormap
