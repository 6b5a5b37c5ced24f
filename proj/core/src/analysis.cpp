#include "floormap/analysis.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace floormap {

namespace {

// (m-1)/m < lambda <= m/(m+1), the PosUnit(m) membership test.
bool pos_unit_holds(const Rational& lambda, const Int& m) {
  if (m < 1) return false;
  return Rational(m - 1, m) < lambda && lambda <= Rational(m, m + 1);
}

// (m+1)/m <= lambda < m/(m-1); the upper bound is absent at m = 1.
bool above_one_holds(const Rational& lambda, const Int& m) {
  if (m < 1) return false;
  if (lambda < Rational(m + 1, m)) return false;
  return m == 1 || lambda < Rational(m, m - 1);
}

Int scan_pos_unit(const Rational& lambda) {
  for (Int m = 1;; ++m) {
    if (pos_unit_holds(lambda, m)) return m;
  }
}

Int scan_above_one(const Rational& lambda) {
  for (Int m = 1;; ++m) {
    if (above_one_holds(lambda, m)) return m;
  }
}

}  // namespace

LambdaRegion classify_lambda(const Rational& lambda) {
  const Rational zero(0), one(1), minus_one(-1);
  if (lambda == zero) return {RegionTag::Zero, 0};
  if (lambda == one) return {RegionTag::One, 0};
  if (lambda == minus_one) return {RegionTag::MinusOne, 0};
  if (lambda < minus_one) return {RegionTag::BelowMinusOne, 0};
  if (lambda < zero) return {RegionTag::NegOpenUnit, 0};

  if (lambda < one) {
    // The subinterval index is the unique integer in
    // [lambda/(1-lambda), lambda/(1-lambda) + 1), i.e. the ceiling. The
    // closed form is validated against the defining inequality and a
    // linear scan stands by in case it ever fails.
    Int m = (lambda / (one - lambda)).ceil();
    if (m < 1) m = 1;
    if (!pos_unit_holds(lambda, m)) m = scan_pos_unit(lambda);
    return {RegionTag::PosUnit, std::move(m)};
  }

  // lambda > 1: unique integer in [1/(lambda-1), 1/(lambda-1) + 1).
  Int m = (one / (lambda - one)).ceil();
  if (m < 1) m = 1;
  if (!above_one_holds(lambda, m)) m = scan_above_one(lambda);
  return {RegionTag::AboveOne, std::move(m)};
}

bool FixedPointSet::contains(const Int& x) const {
  if (all_integers) return true;
  return std::binary_search(points.begin(), points.end(), x);
}

FixedPointSet fixed_points(const Rational& lambda) {
  LambdaRegion region = classify_lambda(lambda);
  FixedPointSet out;
  switch (region.tag) {
    case RegionTag::One:
      out.all_integers = true;
      break;
    case RegionTag::PosUnit:
      for (Int k = -region.m; k <= 0; ++k) out.points.push_back(k);
      break;
    case RegionTag::AboveOne:
      for (Int k = 0; k < region.m; ++k) out.points.push_back(k);
      break;
    default:
      // Every lambda <= 0 fixes exactly the origin.
      out.points.push_back(0);
      break;
  }
  return out;
}

TwoCycle make_two_cycle(Int a, Int b) {
  if (a == b) throw std::logic_error("two-cycle endpoints must differ");
  if (a > b) std::swap(a, b);
  return TwoCycle{std::move(a), std::move(b)};
}

LimitBehavior predict_limit(const Rational& lambda, const Rational& x0) {
  const Rational zero(0);
  LambdaRegion region = classify_lambda(lambda);
  switch (region.tag) {
    case RegionTag::Zero:
    case RegionTag::NegOpenUnit:
      // Every orbit is eventually the constant 0.
      return Fixed{0};

    case RegionTag::MinusOne: {
      // omega(x) = {f(x), f^2(x)} = {a, -a}; collapses to {0} when a = 0.
      Int a = (-x0).floor();
      if (a == 0) return Fixed{0};
      return make_two_cycle(a, -a);
    }

    case RegionTag::BelowMinusOne: {
      // Basin of 0 is exactly (1/lambda, 0]; everything else alternates
      // out to both infinities, even iterates carrying the sign of the
      // side the start lies on.
      Rational inv = Rational(1) / lambda;
      if (x0 > inv && x0 <= zero) return Fixed{0};
      return AlternatingInfinity{x0 > zero ? +1 : -1};
    }

    case RegionTag::One:
      return Fixed{x0.floor()};

    case RegionTag::PosUnit: {
      if (x0 >= zero) return Fixed{0};
      // For x0 in [k/lambda, (k+1)/lambda) the first iterate is already
      // the limit k; left of -m/lambda the orbit climbs into -m.
      Int k = (lambda * x0).floor();
      if (k < -region.m) k = -region.m;
      return Fixed{std::move(k)};
    }

    case RegionTag::AboveOne: {
      if (x0 < zero) return MinusInfinity{};
      Int k = (lambda * x0).floor();
      if (k >= region.m) return PlusInfinity{};
      return Fixed{std::move(k)};
    }
  }
  throw std::logic_error("unreachable: classify_lambda returned no region");
}

bool Interval::contains(const Rational& x) const {
  if (lo.kind == IntervalBound::Finite) {
    int c = cmp(x, lo.value);
    if (c < 0 || (c == 0 && !lo.closed)) return false;
  }
  if (hi.kind == IntervalBound::Finite) {
    int c = cmp(x, hi.value);
    if (c > 0 || (c == 0 && !hi.closed)) return false;
  }
  return true;
}

LimitBehavior BasinDecomposition::per_point(const Rational& x0) const {
  for (const BasinPiece& piece : pieces) {
    if (!piece.interval.contains(x0)) continue;
    if (piece.behavior) return *piece.behavior;
    return predict_limit(lambda, x0);
  }
  // The pieces partition the line; falling through means the
  // decomposition is broken, which verify is designed to catch.
  throw std::logic_error("basin pieces do not cover the query point");
}

BasinDecomposition basin_decomposition(const Rational& lambda) {
  LambdaRegion region = classify_lambda(lambda);
  BasinDecomposition out{lambda, {}};
  const Rational zero(0);

  auto span = [](IntervalBound lo, IntervalBound hi) {
    return Interval{std::move(lo), std::move(hi)};
  };

  switch (region.tag) {
    case RegionTag::Zero:
    case RegionTag::NegOpenUnit:
      out.pieces.push_back(
          {span(IntervalBound::neg_inf(), IntervalBound::pos_inf()), Fixed{0}});
      break;

    case RegionTag::MinusOne:
    case RegionTag::One:
      // Countably many unit cells, each with its own limit; exposed as a
      // single symbolic piece answered pointwise by predict_limit.
      out.pieces.push_back(
          {span(IntervalBound::neg_inf(), IntervalBound::pos_inf()), std::nullopt});
      break;

    case RegionTag::BelowMinusOne: {
      Rational inv = Rational(1) / lambda;
      out.pieces.push_back({span(IntervalBound::neg_inf(), IntervalBound::closed_at(inv)),
                            AlternatingInfinity{-1}});
      out.pieces.push_back(
          {span(IntervalBound::open(inv), IntervalBound::closed_at(zero)), Fixed{0}});
      out.pieces.push_back({span(IntervalBound::open(zero), IntervalBound::pos_inf()),
                            AlternatingInfinity{+1}});
      break;
    }

    case RegionTag::PosUnit: {
      Rational leftmost = Rational(-region.m) / lambda;
      out.pieces.push_back(
          {span(IntervalBound::neg_inf(), IntervalBound::open(leftmost)), Fixed{-region.m}});
      // The k-intervals are emitted separately even where the behavior
      // repeats, mirroring the case table piece by piece.
      for (Int k = -region.m; k < 0; ++k) {
        Rational a = Rational(k) / lambda;
        Rational b = Rational(k + 1) / lambda;
        out.pieces.push_back(
            {span(IntervalBound::closed_at(std::move(a)), IntervalBound::open(std::move(b))),
             Fixed{k}});
      }
      out.pieces.push_back(
          {span(IntervalBound::closed_at(zero), IntervalBound::pos_inf()), Fixed{0}});
      break;
    }

    case RegionTag::AboveOne: {
      out.pieces.push_back(
          {span(IntervalBound::neg_inf(), IntervalBound::open(zero)), MinusInfinity{}});
      for (Int k = 0; k < region.m; ++k) {
        Rational a = Rational(k) / lambda;
        Rational b = Rational(k + 1) / lambda;
        out.pieces.push_back(
            {span(IntervalBound::closed_at(std::move(a)), IntervalBound::open(std::move(b))),
             Fixed{k}});
      }
      Rational ray = Rational(region.m) / lambda;
      out.pieces.push_back(
          {span(IntervalBound::closed_at(std::move(ray)), IntervalBound::pos_inf()),
           PlusInfinity{}});
      break;
    }
  }
  return out;
}

}  // namespace floormap
