#include "floormap/verify.hpp"

#include "floormap/serialize.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <stdexcept>

namespace floormap {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void sort_mismatches(std::vector<Mismatch>& v) {
  std::sort(v.begin(), v.end(), [](const Mismatch& a, const Mismatch& b) {
    int c = cmp(a.lambda, b.lambda);
    if (c != 0) return c < 0;
    c = cmp(a.x0, b.x0);
    if (c != 0) return c < 0;
    return behavior_str(a.predicted) < behavior_str(b.predicted);
  });
}

void sort_unique(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Offset that stays strictly inside a half-open piece: 1/(7*den) is
// always smaller than the width of any piece these decompositions emit.
Rational boundary_offset(const Rational& endpoint) { return Rational(1, 7 * endpoint.den()); }

// Divergence pattern at a runaway value: one extra application tells the
// monotone rays and the alternating swing apart.
std::optional<LimitBehavior> classify_escape(const Rational& lambda, const Int& v, long idx) {
  Int next = apply_map(lambda, v);
  if (v > 0 && next > v) return PlusInfinity{};
  if (v < 0 && next < v) return MinusInfinity{};
  bool v_pos = v > 0;
  bool next_pos = next > 0;
  Int grow = next < 0 ? Int(-next) : next;
  Int mag = v < 0 ? Int(-v) : v;
  if (v_pos != next_pos && grow > mag) {
    long positive_index = v_pos ? idx : idx + 1;
    return AlternatingInfinity{positive_index % 2 == 0 ? +1 : -1};
  }
  return std::nullopt;
}

}  // namespace

std::int64_t SeededRng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("SeededRng::uniform: empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(gen_());  // full 64-bit range
  std::uint64_t limit = (std::numeric_limits<std::uint64_t>::max() / span) * span;
  std::uint64_t r;
  do {
    r = gen_();
  } while (r >= limit);
  return lo + static_cast<std::int64_t>(r % span);
}

GridSpec default_grid() {
  GridSpec spec;
  auto add = [&spec](long long p, long long q) { spec.lambda_samples.emplace_back(p, q); };
  // The fixed criterion grid.
  for (auto [p, q] : {std::pair<long long, long long>{-2, 1}, {-1, 1}, {-1, 2}, {0, 1}, {1, 2},
                      {2, 3}, {3, 4}, {4, 5}, {1, 1}, {6, 5}, {5, 4}, {4, 3}, {3, 2}, {2, 1},
                      {7, 1}})
    add(p, q);
  // Every expressible boundary of the two indexed families.
  for (long long m = 1; m <= 8; ++m) {
    add(m, m + 1);      // PosUnit(m) right edge
    add(m + 1, m);      // AboveOne(m) left edge
    if (m >= 2) add(m, m - 1);  // AboveOne(m-1) right edge
  }
  // Strictly interior representatives for each region tag.
  add(-3, 2);   // BelowMinusOne
  add(-1, 4);   // NegOpenUnit
  add(2, 5);    // inside PosUnit(1), off both edges
  add(7, 5);    // inside AboveOne(3)
  add(3, 1);    // deep AboveOne(1)
  sort_unique(spec.lambda_samples);
  return spec;
}

std::vector<Rational> random_lambdas(RegionTag family, int count, SeededRng& rng) {
  std::vector<Rational> out;
  out.reserve(count > 0 ? static_cast<std::size_t>(count) : 0);
  for (int i = 0; i < count; ++i) {
    switch (family) {
      case RegionTag::NegOpenUnit: {
        std::int64_t q = rng.uniform(2, 1000);
        out.emplace_back(rng.uniform(-q + 1, -1), q);
        break;
      }
      case RegionTag::PosUnit: {
        std::int64_t q = rng.uniform(2, 1000);
        out.emplace_back(rng.uniform(1, q - 1), q);
        break;
      }
      case RegionTag::BelowMinusOne: {
        std::int64_t q = rng.uniform(1, 1000);
        out.emplace_back(rng.uniform(-50 * q + 1, -q - 1), q);
        break;
      }
      case RegionTag::AboveOne: {
        std::int64_t q = rng.uniform(1, 1000);
        out.emplace_back(rng.uniform(q + 1, 50 * q), q);
        break;
      }
      default:
        throw std::invalid_argument("random_lambdas: family has no interior to sample");
    }
  }
  return out;
}

std::vector<Rational> grid_lambdas(const GridSpec& spec) {
  std::vector<Rational> out = spec.lambda_samples;
  SeededRng rng(spec.seed);
  for (RegionTag family : {RegionTag::BelowMinusOne, RegionTag::NegOpenUnit, RegionTag::PosUnit,
                           RegionTag::AboveOne}) {
    std::vector<Rational> extra = random_lambdas(family, spec.random_lambdas_per_family, rng);
    out.insert(out.end(), extra.begin(), extra.end());
  }
  return out;
}

std::vector<Rational> piece_samples(const Interval& interval, int want) {
  std::vector<Rational> out;
  bool lo_finite = interval.lo.kind == IntervalBound::Finite;
  bool hi_finite = interval.hi.kind == IntervalBound::Finite;

  if (lo_finite && hi_finite) {
    const Rational& a = interval.lo.value;
    const Rational& b = interval.hi.value;
    out.push_back(interval.lo.closed ? a : a + boundary_offset(a));
    out.push_back(interval.hi.closed ? b : b - boundary_offset(b));
    out.push_back((a + b) / Rational(2));
    out.push_back((a * Rational(3) + b) / Rational(4));
    out.push_back((a + b * Rational(3)) / Rational(4));
    for (int j = 1; static_cast<int>(out.size()) < want; ++j)
      out.push_back(a + (b - a) * Rational(j, j + 5));
  } else if (!lo_finite && hi_finite) {
    const Rational& b = interval.hi.value;
    out.push_back(interval.hi.closed ? b : b - boundary_offset(b));
    out.push_back(b - Rational(1));
    out.push_back(b - Rational(7, 2));
    out.push_back(b - Rational(9876, 5));
    out.push_back(b - Rational(10000, 7));
    for (int j = 2; static_cast<int>(out.size()) < want; ++j) out.push_back(b - Rational(j));
  } else if (lo_finite && !hi_finite) {
    const Rational& a = interval.lo.value;
    out.push_back(interval.lo.closed ? a : a + boundary_offset(a));
    out.push_back(a + Rational(1));
    out.push_back(a + Rational(7, 2));
    out.push_back(a + Rational(9876, 5));
    out.push_back(a + Rational(10000, 7));
    for (int j = 2; static_cast<int>(out.size()) < want; ++j) out.push_back(a + Rational(j));
  } else {
    out.emplace_back(0);
    out.emplace_back(1);
    out.emplace_back(-1);
    out.emplace_back(7, 2);
    out.emplace_back(-7, 2);
    out.emplace_back(9876, 5);
    out.emplace_back(-10000, 7);
    for (int j = 2; static_cast<int>(out.size()) < want; ++j)
      out.push_back(Rational(j % 2 == 0 ? j : -j));
  }
  return out;
}

bool partition_ok(const BasinDecomposition& dec) {
  const auto& pieces = dec.pieces;
  if (pieces.empty()) return false;
  if (pieces.front().interval.lo.kind != IntervalBound::NegInf) return false;
  if (pieces.back().interval.hi.kind != IntervalBound::PosInf) return false;

  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Interval& iv = pieces[i].interval;
    if (i > 0 && iv.lo.kind != IntervalBound::Finite) return false;
    if (i + 1 < pieces.size() && iv.hi.kind != IntervalBound::Finite) return false;
    if (iv.lo.kind == IntervalBound::Finite && iv.hi.kind == IntervalBound::Finite &&
        !(iv.lo.value < iv.hi.value))
      return false;
    if (i > 0) {
      const IntervalBound& prev_hi = pieces[i - 1].interval.hi;
      // Gap-free and overlap-free: shared endpoint, exactly one owner.
      if (prev_hi.value != iv.lo.value) return false;
      if (prev_hi.closed == iv.lo.closed) return false;
    }
  }
  return true;
}

std::string VerifyReport::render() const {
  auto mism = mismatches;
  sort_mismatches(mism);
  auto fp = fixed_point_failures;
  auto part = partition_failures;
  sort_unique(fp);
  sort_unique(part);

  std::string out = "cases_run: " + std::to_string(cases_run) + "\n";
  out += "mismatches: " + std::to_string(mism.size()) + "\n";
  for (const Mismatch& m : mism) {
    out += "  lambda=" + m.lambda.str() + " x0=" + m.x0.str() +
           " predicted=" + behavior_str(m.predicted) +
           " observed=" + (m.observed ? behavior_str(*m.observed) : "none") + "\n";
  }
  out += "fixed_point_failures: " + std::to_string(fp.size()) + "\n";
  for (const Rational& l : fp) out += "  lambda=" + l.str() + "\n";
  out += "partition_failures: " + std::to_string(part.size()) + "\n";
  for (const Rational& l : part) out += "  lambda=" + l.str() + "\n";
  out += std::string("result: ") + (passed() ? "PASS" : "FAIL") + "\n";
  return out;
}

VerifyReport& VerifyReport::operator+=(const VerifyReport& other) {
  cases_run += other.cases_run;
  mismatches.insert(mismatches.end(), other.mismatches.begin(), other.mismatches.end());
  fixed_point_failures.insert(fixed_point_failures.end(), other.fixed_point_failures.begin(),
                              other.fixed_point_failures.end());
  partition_failures.insert(partition_failures.end(), other.partition_failures.begin(),
                            other.partition_failures.end());
  elapsed_seconds += other.elapsed_seconds;
  return *this;
}

VerifyReport verify_lemma1(const GridSpec& spec) {
  auto start = Clock::now();
  VerifyReport rep;
  for (const Rational& lambda : grid_lambdas(spec)) {
    ++rep.cases_run;
    LambdaRegion region = classify_lambda(lambda);
    FixedPointSet predicted = fixed_points(lambda);

    if (predicted.all_integers) {
      for (Int x = -1000; x <= 1000; ++x) {
        if (apply_map(lambda, x) != x) {
          rep.fixed_point_failures.push_back(lambda);
          break;
        }
      }
      continue;
    }

    Int bound = region.m + 50;
    std::vector<Int> brute;
    for (Int x = -bound; x <= bound; ++x) {
      if (apply_map(lambda, x) == x) brute.push_back(x);
    }
    if (brute != predicted.points) rep.fixed_point_failures.push_back(lambda);
  }
  rep.elapsed_seconds = seconds_since(start);
  return rep;
}

VerifyReport verify_theorems(const GridSpec& spec) {
  auto start = Clock::now();
  VerifyReport rep;
  const Rational minus_one(-1);

  for (const Rational& lambda : grid_lambdas(spec)) {
    BasinDecomposition dec = basin_decomposition(lambda);
    if (!partition_ok(dec)) rep.partition_failures.push_back(lambda);

    auto check = [&](const Rational& x0) {
      ++rep.cases_run;
      LimitBehavior predicted = dec.per_point(x0);
      Orbit orbit = simulate_orbit(lambda, x0, default_max_steps(x0));
      if (!orbit.classification)
        rep.mismatches.push_back({lambda, x0, predicted, std::nullopt});
      else if (!(*orbit.classification == predicted))
        rep.mismatches.push_back({lambda, x0, predicted, *orbit.classification});
    };

    for (const BasinPiece& piece : dec.pieces)
      for (const Rational& x0 : piece_samples(piece.interval, spec.x0_samples_per_piece))
        check(x0);
    for (const Rational& x0 : spec.extra_x0) check(x0);

    if (lambda == minus_one) {
      // f^3 = f everywhere at lambda = -1; seeded spot-check.
      SeededRng rng(spec.seed ^ 0x3f3f3f3fULL);
      for (int i = 0; i < 1000; ++i) {
        ++rep.cases_run;
        Rational x(rng.uniform(-1000000, 1000000), rng.uniform(1, 1000));
        Int f1 = apply_map(lambda, x);
        Int f3 = apply_map(lambda, apply_map(lambda, f1));
        if (f3 != f1) {
          rep.partition_failures.push_back(lambda);
          break;
        }
      }
    }
  }
  rep.elapsed_seconds = seconds_since(start);
  return rep;
}

std::optional<LimitBehavior> observe_orbit_exhaustively(const Rational& lambda,
                                                        const Rational& x0) {
  static const Int escape = Int(1) << 50;
  constexpr long step_cap = 200000;

  std::map<Int, long> seen;
  Int v = apply_map(lambda, x0);
  long idx = 1;
  while (true) {
    Int mag = v < 0 ? Int(-v) : v;
    if (mag > escape) return classify_escape(lambda, v, idx);

    auto [it, inserted] = seen.emplace(v, idx);
    if (!inserted) {
      long period = idx - it->second;
      if (period == 1) return Fixed{v};
      if (period == 2) return make_two_cycle(v, apply_map(lambda, v));
      return std::nullopt;  // longer period: outside the theory, flag it
    }
    if (idx >= step_cap) return classify_escape(lambda, v, idx);
    v = apply_map(lambda, v);
    ++idx;
  }
}

VerifyReport verify_small_instance_exhaustive(const Rational& lambda, const Int& bound) {
  if (bound < 1)
    throw std::invalid_argument("verify_small_instance_exhaustive: bound must be >= 1");
  auto start = Clock::now();
  VerifyReport rep;
  for (Int p = -bound; p <= bound; ++p) {
    for (int q = 1; q <= 8; ++q) {
      Rational x0(p, Int(q));
      ++rep.cases_run;
      LimitBehavior predicted = predict_limit(lambda, x0);
      std::optional<LimitBehavior> observed = observe_orbit_exhaustively(lambda, x0);
      if (!observed)
        rep.mismatches.push_back({lambda, x0, predicted, std::nullopt});
      else if (!(*observed == predicted))
        rep.mismatches.push_back({lambda, x0, predicted, *observed});
    }
  }
  rep.elapsed_seconds = seconds_since(start);
  return rep;
}

}  // namespace floormap
