#pragma once

#include "floormap/analysis.hpp"
#include "floormap/orbit.hpp"
#include "floormap/rational.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace floormap {

/// Deterministic uniform sampler. std::mt19937_64 has a pinned-down
/// portable output sequence; the rejection step keeps the integer mapping
/// portable too (std::uniform_int_distribution does not guarantee one).
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform integer in [lo, hi], inclusive; requires lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

private:
  std::mt19937_64 gen_;
};

/// Test-grid description. Identical GridSpec values (seed included) yield
/// byte-identical reports.
struct GridSpec {
  std::vector<Rational> lambda_samples;        // explicit parameter values
  int random_lambdas_per_family = 20;          // seeded draws per unbounded family
  int x0_samples_per_piece = 5;                // minimum starts per basin piece
  std::vector<Rational> extra_x0;              // extra starts checked for every lambda
  std::uint64_t seed = 0x666c6f6f72ULL;
};

/// Explicit coverage: the criterion grid, every expressible boundary
/// m/(m+1), (m+1)/m (m=1..8) and m/(m-1) (m=2..8), and a strictly
/// interior value for each region tag.
GridSpec default_grid();

/// Seeded parameters inside one family's window, reduced p/q with
/// q <= 1000: NegOpenUnit (-1,0), PosUnit (0,1), BelowMinusOne (-50,-1),
/// AboveOne (1,50]. Throws std::invalid_argument for other tags.
std::vector<Rational> random_lambdas(RegionTag family, int count, SeededRng& rng);

/// lambda_samples plus the seeded per-family draws, in deterministic order.
std::vector<Rational> grid_lambdas(const GridSpec& spec);

/// At least `want` starting points inside the piece: closed endpoints
/// exactly, open endpoints nudged inward by 1/(7*denominator), midpoint
/// and quartiles when both ends are finite, near and far points on rays.
std::vector<Rational> piece_samples(const Interval& interval, int want);

/// Ascending, disjoint, gap-free, first piece opens at -inf and last
/// closes at +inf; adjacent pieces share their endpoint with exactly one
/// closed side.
bool partition_ok(const BasinDecomposition& dec);

/// One prediction-vs-observation disagreement. `observed` is empty when
/// the orbit produced no decision (exhausted budget or an out-of-theory
/// cycle), which also counts as a failure.
struct Mismatch {
  Rational lambda;
  Rational x0;
  LimitBehavior predicted;
  std::optional<LimitBehavior> observed;
};

struct VerifyReport {
  long long cases_run = 0;
  std::vector<Mismatch> mismatches;
  std::vector<Rational> fixed_point_failures;
  std::vector<Rational> partition_failures;
  double elapsed_seconds = 0.0;

  bool passed() const {
    return mismatches.empty() && fixed_point_failures.empty() && partition_failures.empty();
  }

  /// Canonical plain-text rendering: lists sorted, duplicates in the
  /// failure lists removed, elapsed time deliberately excluded so that
  /// identical grids give byte-identical output.
  std::string render() const;

  VerifyReport& operator+=(const VerifyReport& other);
};

/// Fixed-point sets vs the brute-force oracle {x : |x| <= m+50,
/// floor(lambda*x) = x}; the all-integers case is membership-sampled over
/// |x| <= 1000.
VerifyReport verify_lemma1(const GridSpec& spec);

/// Basin partitions, per-piece prediction/simulation agreement, and the
/// lambda=-1 identity f^3 = f on 1000 seeded rationals.
VerifyReport verify_theorems(const GridSpec& spec);

/// Every x0 = p/q with |p| <= bound, 1 <= q <= 8, run through the
/// independent visited-set detector; eventual periods must be 1 or 2 and
/// agree with predict_limit. Throws std::invalid_argument if bound < 1.
VerifyReport verify_small_instance_exhaustive(const Rational& lambda, const Int& bound);

/// The independent observer: visited-set cycle detection with no
/// period assumption and no divergence certificates; divergence is called
/// observationally from the sign/growth pattern once |v| > 2^50 (or at
/// the step cap). Empty result = no decision.
std::optional<LimitBehavior> observe_orbit_exhaustively(const Rational& lambda,
                                                        const Rational& x0);

}  // namespace floormap
