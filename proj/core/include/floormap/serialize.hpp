#pragma once

#include "floormap/analysis.hpp"
#include "floormap/orbit.hpp"
#include "floormap/verify.hpp"

#include <string>
#include <utility>
#include <vector>

namespace floormap {

// ---------------------------------------------------------------------------
// Canonical short strings (used in CSV/JSON fields and test fixtures)
// ---------------------------------------------------------------------------

/// Region tag as a kebab-case token: "pos-unit", "below-minus-one", ...
std::string region_str(RegionTag tag);

/// Human-oriented one-liner: "pos-unit, m=3"; the lambda=1 case reads
/// "one (Fix = all integers)"; tags without an index are bare.
std::string region_plain(const LambdaRegion& region);

/// Compact canonical behavior: "fixed(-1)", "two-cycle(-3,3)", "+inf",
/// "-inf", "alt(+inf,-inf)". For alternating divergence the first slot is
/// the limit of the even-indexed iterates, so even_sign=-1 reads
/// "alt(-inf,+inf)".
std::string behavior_str(const LimitBehavior& behavior);

/// Inverse of behavior_str; throws std::invalid_argument on anything else.
LimitBehavior parse_behavior_str(const std::string& text);

/// Spaced variant for terminal output: "fixed 0", "two-cycle {-3, 3}";
/// infinities render as in behavior_str.
std::string behavior_plain(const LimitBehavior& behavior);

/// "{-3,-2,-1,0}" for finite sets, "Z" for all integers.
std::string fixed_point_set_str(const FixedPointSet& set);

/// "[2/3, 4/3)", "(-inf, 0)", "[4/3, +inf)".
std::string interval_str(const Interval& interval);

/// |Fix| straight from the region index: "4" for PosUnit(3), "inf" at
/// lambda=1 — no set materialization, so it stays cheap for huge m.
std::string fix_count_str(const LambdaRegion& region);

// ---------------------------------------------------------------------------
// Whole-document renderings
// ---------------------------------------------------------------------------

std::string orbit_plain(const Orbit& orbit);
std::string basins_plain(const BasinDecomposition& dec);

/// CSV with header "x, y"; one cobweb vertex per row, canonical rationals.
std::string cobweb_csv(const std::vector<std::pair<Rational, Rational>>& points);

struct ScanRow {
  Rational lambda;
  LambdaRegion region;
};

/// CSV with header "lambda, region, m, fix_count"; rows like
/// "3/4, pos-unit, m=3, 4" (m=- for tags without an index).
std::string scan_csv(const std::vector<ScanRow>& rows);

// JSON documents, serialized with 2-space indentation and stable field
// names (lambda, region, m, fixed_points, pieces, behavior, prefix,
// certificate, steps). Rationals appear as canonical "p/q" strings;
// integers as JSON numbers when they fit 64 bits, decimal strings
// otherwise.
std::string classify_json(const Rational& lambda);
std::string fixed_points_json(const Rational& lambda);
std::string behavior_json(const char* id, const Rational& lambda, const Rational& x0,
                          const LimitBehavior& behavior);
std::string basins_json(const BasinDecomposition& dec);
std::string orbit_json(const Orbit& orbit);
std::string cobweb_json(const Rational& lambda, const Rational& x0,
                        const std::vector<std::pair<Rational, Rational>>& points);
std::string scan_json(const std::vector<ScanRow>& rows);

/// Sections in given order, e.g. {"lemma1", report}, plus an overall flag.
std::string verify_json(const std::vector<std::pair<std::string, VerifyReport>>& sections);

}  // namespace floormap
