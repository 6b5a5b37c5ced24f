#pragma once

#include "floormap/rational.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace floormap {

// ---------------------------------------------------------------------------
// Parameter regions
// ---------------------------------------------------------------------------

/// The real line splits into seven regimes for f(x) = floor(lambda * x);
/// within each, the map's fixed points and long-run behavior have one shape.
enum class RegionTag {
  BelowMinusOne,  // lambda < -1
  MinusOne,       // lambda == -1
  NegOpenUnit,    // -1 < lambda < 0
  Zero,           // lambda == 0
  PosUnit,        // 0 < lambda < 1, subdivided by index m
  One,            // lambda == 1
  AboveOne,       // lambda > 1, subdivided by index m
};

/// Region of a parameter value. `m` is meaningful only for PosUnit and
/// AboveOne, where it names the subinterval:
///   PosUnit:  (m-1)/m < lambda <= m/(m+1),  m >= 1
///   AboveOne: (m+1)/m <= lambda < m/(m-1),  m >= 1 (upper bound absent at m=1)
struct LambdaRegion {
  RegionTag tag;
  Int m;  // 0 when the tag has no index

  friend bool operator==(const LambdaRegion& a, const LambdaRegion& b) {
    return a.tag == b.tag && a.m == b.m;
  }
  friend bool operator!=(const LambdaRegion& a, const LambdaRegion& b) { return !(a == b); }
};

LambdaRegion classify_lambda(const Rational& lambda);

// ---------------------------------------------------------------------------
// Fixed points
// ---------------------------------------------------------------------------

/// Fix(f) is always a finite set of consecutive integers, except at
/// lambda = 1 where every integer is fixed.
struct FixedPointSet {
  bool all_integers = false;
  std::vector<Int> points;  // ascending; empty iff all_integers

  bool contains(const Int& x) const;
  friend bool operator==(const FixedPointSet& a, const FixedPointSet& b) {
    return a.all_integers == b.all_integers && a.points == b.points;
  }
};

FixedPointSet fixed_points(const Rational& lambda);

// ---------------------------------------------------------------------------
// Limit behavior
// ---------------------------------------------------------------------------

struct Fixed {
  Int value;
  friend bool operator==(const Fixed& a, const Fixed& b) { return a.value == b.value; }
};

/// Period-2 orbit {low, high}, stored with low < high.
struct TwoCycle {
  Int low;
  Int high;
  friend bool operator==(const TwoCycle& a, const TwoCycle& b) {
    return a.low == b.low && a.high == b.high;
  }
};

struct PlusInfinity {
  friend bool operator==(PlusInfinity, PlusInfinity) { return true; }
};

struct MinusInfinity {
  friend bool operator==(MinusInfinity, MinusInfinity) { return true; }
};

/// Unbounded sign-alternating escape: |f^n(x)| -> inf with the sign of
/// f^n(x) flipping every step. `even_sign` is the sign (+1 or -1) of the
/// iterates at even indices n (counting the start as index 0), which pins
/// down which of the two interleaved subsequences goes to +inf.
struct AlternatingInfinity {
  int even_sign;
  friend bool operator==(AlternatingInfinity a, AlternatingInfinity b) {
    return a.even_sign == b.even_sign;
  }
};

using LimitBehavior = std::variant<Fixed, TwoCycle, PlusInfinity, MinusInfinity, AlternatingInfinity>;

/// Normalizes an unordered pair into a TwoCycle.
TwoCycle make_two_cycle(Int a, Int b);

/// Eventual behavior of the orbit of x0 under f, decided from the region
/// alone (no iteration).
LimitBehavior predict_limit(const Rational& lambda, const Rational& x0);

// ---------------------------------------------------------------------------
// Basin decomposition
// ---------------------------------------------------------------------------

/// One endpoint of an interval: -inf, a finite rational (open or closed),
/// or +inf.
struct IntervalBound {
  enum Kind { NegInf, Finite, PosInf } kind = Finite;
  Rational value;       // meaningful only when kind == Finite
  bool closed = false;  // ditto

  static IntervalBound neg_inf() { return {NegInf, Rational(0), false}; }
  static IntervalBound pos_inf() { return {PosInf, Rational(0), false}; }
  static IntervalBound open(Rational v) { return {Finite, std::move(v), false}; }
  static IntervalBound closed_at(Rational v) { return {Finite, std::move(v), true}; }
};

struct Interval {
  IntervalBound lo;
  IntervalBound hi;

  bool contains(const Rational& x) const;
};

/// A basin piece: an interval of starting points sharing one limit
/// behavior. `behavior` is empty when the limit depends on the individual
/// point inside the interval (lambda = +1 or -1), in which case
/// BasinDecomposition::per_point supplies the answer.
struct BasinPiece {
  Interval interval;
  std::optional<LimitBehavior> behavior;
};

/// Ordered decomposition of the real line into basin pieces. Pieces are
/// listed left to right, pairwise disjoint, and cover every rational.
struct BasinDecomposition {
  Rational lambda;
  std::vector<BasinPiece> pieces;

  /// Limit behavior at a specific point; defers to predict_limit for
  /// per-point pieces.
  LimitBehavior per_point(const Rational& x0) const;
};

BasinDecomposition basin_decomposition(const Rational& lambda);

}  // namespace floormap
