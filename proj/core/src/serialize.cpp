#include "floormap/serialize.hpp"

#include "json.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace floormap {

namespace {

using ordered_json = nlohmann::ordered_json;

// Integers become JSON numbers when they fit 64 bits, decimal strings
// otherwise; keeps typical output numeric without ever overflowing.
ordered_json int_json(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return ordered_json(v.convert_to<std::int64_t>());
  return ordered_json(v.str());
}

ordered_json region_m_json(const LambdaRegion& region) {
  if (region.tag == RegionTag::PosUnit || region.tag == RegionTag::AboveOne)
    return int_json(region.m);
  return ordered_json(nullptr);
}

ordered_json bound_json(const IntervalBound& b) {
  switch (b.kind) {
    case IntervalBound::NegInf: return ordered_json("-inf");
    case IntervalBound::PosInf: return ordered_json("+inf");
    case IntervalBound::Finite: return ordered_json(b.value.str());
  }
  return ordered_json(nullptr);
}

const char* certificate_kind_str(DivergenceCertificate::Kind kind) {
  switch (kind) {
    case DivergenceCertificate::Kind::PositiveRay: return "positive-ray";
    case DivergenceCertificate::Kind::NegativeRay: return "negative-ray";
    case DivergenceCertificate::Kind::Alternating: return "alternating";
  }
  return "?";
}

ordered_json certificate_json(const DivergenceCertificate& cert) {
  ordered_json j;
  j["kind"] = certificate_kind_str(cert.kind);
  j["witness"] = int_json(cert.witness);
  j["index"] = int_json(cert.witness_index);
  j["region"] = region_str(cert.region.tag);
  j["m"] = region_m_json(cert.region);
  return j;
}

ordered_json report_json(const VerifyReport& rep) {
  auto sorted = rep;  // render() sorts; mirror that order here
  std::sort(sorted.mismatches.begin(), sorted.mismatches.end(),
            [](const Mismatch& a, const Mismatch& b) {
              int c = cmp(a.lambda, b.lambda);
              if (c != 0) return c < 0;
              c = cmp(a.x0, b.x0);
              if (c != 0) return c < 0;
              return behavior_str(a.predicted) < behavior_str(b.predicted);
            });
  auto sort_unique = [](std::vector<Rational>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  sort_unique(sorted.fixed_point_failures);
  sort_unique(sorted.partition_failures);

  ordered_json j;
  j["cases_run"] = sorted.cases_run;
  j["mismatches"] = ordered_json::array();
  for (const Mismatch& m : sorted.mismatches) {
    ordered_json e;
    e["lambda"] = m.lambda.str();
    e["x0"] = m.x0.str();
    e["predicted"] = behavior_str(m.predicted);
    e["observed"] = m.observed ? ordered_json(behavior_str(*m.observed)) : ordered_json("none");
    j["mismatches"].push_back(std::move(e));
  }
  j["fixed_point_failures"] = ordered_json::array();
  for (const Rational& l : sorted.fixed_point_failures)
    j["fixed_point_failures"].push_back(l.str());
  j["partition_failures"] = ordered_json::array();
  for (const Rational& l : sorted.partition_failures) j["partition_failures"].push_back(l.str());
  j["passed"] = rep.passed();
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string region_str(RegionTag tag) {
  switch (tag) {
    case RegionTag::BelowMinusOne: return "below-minus-one";
    case RegionTag::MinusOne: return "minus-one";
    case RegionTag::NegOpenUnit: return "neg-open-unit";
    case RegionTag::Zero: return "zero";
    case RegionTag::PosUnit: return "pos-unit";
    case RegionTag::One: return "one";
    case RegionTag::AboveOne: return "above-one";
  }
  return "?";
}

std::string region_plain(const LambdaRegion& region) {
  switch (region.tag) {
    case RegionTag::PosUnit:
    case RegionTag::AboveOne:
      return region_str(region.tag) + ", m=" + region.m.str();
    case RegionTag::One:
      return "one (Fix = all integers)";
    default:
      return region_str(region.tag);
  }
}

std::string behavior_str(const LimitBehavior& behavior) {
  struct Visitor {
    std::string operator()(const Fixed& f) const { return "fixed(" + f.value.str() + ")"; }
    std::string operator()(const TwoCycle& c) const {
      return "two-cycle(" + c.low.str() + "," + c.high.str() + ")";
    }
    std::string operator()(PlusInfinity) const { return "+inf"; }
    std::string operator()(MinusInfinity) const { return "-inf"; }
    std::string operator()(const AlternatingInfinity& a) const {
      return a.even_sign > 0 ? "alt(+inf,-inf)" : "alt(-inf,+inf)";
    }
  };
  return std::visit(Visitor{}, behavior);
}

LimitBehavior parse_behavior_str(const std::string& text) {
  if (text == "+inf") return PlusInfinity{};
  if (text == "-inf") return MinusInfinity{};
  if (text == "alt(+inf,-inf)") return AlternatingInfinity{+1};
  if (text == "alt(-inf,+inf)") return AlternatingInfinity{-1};
  auto parse_int = [](const std::string& s) { return Rational::parse(s).num(); };
  if (text.rfind("fixed(", 0) == 0 && text.back() == ')')
    return Fixed{parse_int(text.substr(6, text.size() - 7))};
  if (text.rfind("two-cycle(", 0) == 0 && text.back() == ')') {
    std::string body = text.substr(10, text.size() - 11);
    auto comma = body.find(',');
    if (comma != std::string::npos)
      return make_two_cycle(parse_int(body.substr(0, comma)), parse_int(body.substr(comma + 1)));
  }
  throw std::invalid_argument("unrecognized behavior: '" + text + "'");
}

std::string behavior_plain(const LimitBehavior& behavior) {
  struct Visitor {
    std::string operator()(const Fixed& f) const { return "fixed " + f.value.str(); }
    std::string operator()(const TwoCycle& c) const {
      return "two-cycle {" + c.low.str() + ", " + c.high.str() + "}";
    }
    std::string operator()(PlusInfinity) const { return "+inf"; }
    std::string operator()(MinusInfinity) const { return "-inf"; }
    std::string operator()(const AlternatingInfinity& a) const {
      return a.even_sign > 0 ? "alt(+inf,-inf)" : "alt(-inf,+inf)";
    }
  };
  return std::visit(Visitor{}, behavior);
}

std::string fixed_point_set_str(const FixedPointSet& set) {
  if (set.all_integers) return "Z";
  std::string out = "{";
  for (std::size_t i = 0; i < set.points.size(); ++i) {
    if (i) out += ',';
    out += set.points[i].str();
  }
  out += '}';
  return out;
}

std::string interval_str(const Interval& interval) {
  std::string out;
  out += interval.lo.kind == IntervalBound::Finite && interval.lo.closed ? '[' : '(';
  out += interval.lo.kind == IntervalBound::NegInf ? "-inf" : interval.lo.value.str();
  out += ", ";
  out += interval.hi.kind == IntervalBound::PosInf ? "+inf" : interval.hi.value.str();
  out += interval.hi.kind == IntervalBound::Finite && interval.hi.closed ? ']' : ')';
  return out;
}

std::string fix_count_str(const LambdaRegion& region) {
  switch (region.tag) {
    case RegionTag::One: return "inf";
    case RegionTag::PosUnit: return Int(region.m + 1).str();
    case RegionTag::AboveOne: return region.m.str();
    default: return "1";
  }
}

std::string orbit_plain(const Orbit& orbit) {
  std::string out = "prefix: [";
  for (std::size_t i = 0; i < orbit.prefix.size(); ++i) {
    if (i) out += ", ";
    out += orbit.prefix[i].str();
  }
  out += "]\nsteps: " + std::to_string(orbit.steps) + "\nclassification: ";
  out += orbit.classification ? behavior_plain(*orbit.classification) : "exhausted";
  out += '\n';
  if (orbit.certificate) {
    const DivergenceCertificate& c = *orbit.certificate;
    out += "certificate: ";
    out += certificate_kind_str(c.kind);
    out += "(witness=" + c.witness.str() + ", index=" + c.witness_index.str() +
           ", region=" + region_str(c.region.tag);
    if (c.region.tag == RegionTag::PosUnit || c.region.tag == RegionTag::AboveOne)
      out += ", m=" + c.region.m.str();
    out += ")\n";
  }
  return out;
}

std::string basins_plain(const BasinDecomposition& dec) {
  std::string out;
  for (const BasinPiece& piece : dec.pieces) {
    out += interval_str(piece.interval);
    out += " -> ";
    out += piece.behavior ? behavior_plain(*piece.behavior) : "per-point (use predict)";
    out += '\n';
  }
  return out;
}

std::string cobweb_csv(const std::vector<std::pair<Rational, Rational>>& points) {
  std::string out = "x, y\n";
  for (const auto& [x, y] : points) out += x.str() + ", " + y.str() + "\n";
  return out;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::string out = "lambda, region, m, fix_count\n";
  for (const ScanRow& row : rows) {
    bool has_m = row.region.tag == RegionTag::PosUnit || row.region.tag == RegionTag::AboveOne;
    out += row.lambda.str() + ", " + region_str(row.region.tag) +
           ", m=" + (has_m ? row.region.m.str() : "-") + ", " + fix_count_str(row.region) + "\n";
  }
  return out;
}

std::string classify_json(const Rational& lambda) {
  LambdaRegion region = classify_lambda(lambda);
  ordered_json j;
  j["lambda"] = lambda.str();
  j["region"] = region_str(region.tag);
  j["m"] = region_m_json(region);
  return dump(j);
}

std::string fixed_points_json(const Rational& lambda) {
  LambdaRegion region = classify_lambda(lambda);
  FixedPointSet set = fixed_points(lambda);
  ordered_json j;
  j["lambda"] = lambda.str();
  j["region"] = region_str(region.tag);
  j["m"] = region_m_json(region);
  if (set.all_integers) {
    j["fixed_points"] = "Z";
  } else {
    j["fixed_points"] = ordered_json::array();
    for (const Int& p : set.points) j["fixed_points"].push_back(int_json(p));
  }
  return dump(j);
}

std::string behavior_json(const char* id, const Rational& lambda, const Rational& x0,
                          const LimitBehavior& behavior) {
  ordered_json j;
  j["lambda"] = lambda.str();
  j[id] = x0.str();
  j["behavior"] = behavior_str(behavior);
  return dump(j);
}

std::string basins_json(const BasinDecomposition& dec) {
  LambdaRegion region = classify_lambda(dec.lambda);
  ordered_json j;
  j["lambda"] = dec.lambda.str();
  j["region"] = region_str(region.tag);
  j["m"] = region_m_json(region);
  j["pieces"] = ordered_json::array();
  for (const BasinPiece& piece : dec.pieces) {
    ordered_json p;
    p["interval"]["lower"] = bound_json(piece.interval.lo);
    p["interval"]["lower_closed"] =
        piece.interval.lo.kind == IntervalBound::Finite && piece.interval.lo.closed;
    p["interval"]["upper"] = bound_json(piece.interval.hi);
    p["interval"]["upper_closed"] =
        piece.interval.hi.kind == IntervalBound::Finite && piece.interval.hi.closed;
    p["behavior"] = piece.behavior ? behavior_str(*piece.behavior) : "per-point";
    j["pieces"].push_back(std::move(p));
  }
  return dump(j);
}

std::string orbit_json(const Orbit& orbit) {
  ordered_json j;
  j["lambda"] = orbit.lambda.str();
  j["start"] = orbit.start.str();
  j["prefix"] = ordered_json::array();
  for (const Int& v : orbit.prefix) j["prefix"].push_back(int_json(v));
  j["steps"] = orbit.steps;
  j["behavior"] = orbit.classification ? behavior_str(*orbit.classification) : "exhausted";
  j["certificate"] =
      orbit.certificate ? certificate_json(*orbit.certificate) : ordered_json(nullptr);
  return dump(j);
}

std::string cobweb_json(const Rational& lambda, const Rational& x0,
                        const std::vector<std::pair<Rational, Rational>>& points) {
  ordered_json j;
  j["lambda"] = lambda.str();
  j["x0"] = x0.str();
  j["points"] = ordered_json::array();
  for (const auto& [x, y] : points) j["points"].push_back({x.str(), y.str()});
  return dump(j);
}

std::string scan_json(const std::vector<ScanRow>& rows) {
  ordered_json j;
  j["rows"] = ordered_json::array();
  for (const ScanRow& row : rows) {
    ordered_json r;
    r["lambda"] = row.lambda.str();
    r["region"] = region_str(row.region.tag);
    r["m"] = region_m_json(row.region);
    r["fix_count"] = row.region.tag == RegionTag::One
                         ? ordered_json("inf")
                         : int_json(row.region.tag == RegionTag::PosUnit ? Int(row.region.m + 1)
                                    : row.region.tag == RegionTag::AboveOne ? row.region.m
                                                                            : Int(1));
    j["rows"].push_back(std::move(r));
  }
  return dump(j);
}

std::string verify_json(const std::vector<std::pair<std::string, VerifyReport>>& sections) {
  ordered_json j;
  bool all = true;
  for (const auto& [name, rep] : sections) {
    j[name] = report_json(rep);
    all = all && rep.passed();
  }
  j["passed"] = all;
  return dump(j);
}

}  // namespace floormap
