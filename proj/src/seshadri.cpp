#include "grasshadri/seshadri.hpp"

#include "grasshadri/error.hpp"

namespace grasshadri {

std::string_view stratum_name(PointStratum s) {
  switch (s) {
    case PointStratum::OnGammaS: return "gamma-s";
    case PointStratum::InBaseLocusOffGammaS: return "base-locus";
    case PointStratum::Generic: return "generic";
  }
  return "generic";
}

std::optional<PointStratum> parse_stratum(std::string_view name) {
  for (PointStratum s : kAllStrata) {
    if (stratum_name(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view criterion_name(Criterion c) {
  switch (c) {
    case Criterion::SlopeGap: return "slope-gap";
    case Criterion::AlignedHead: return "aligned-head";
    case Criterion::BoundsOnly: return "bounds-only";
  }
  return "bounds-only";
}

std::string_view family_name(CurveFamily f) {
  switch (f) {
    case CurveFamily::Fiber: return "fiber";
    case CurveFamily::Section: return "gamma-s";
    case CurveFamily::Horizontal: return "horizontal";
  }
  return "fiber";
}

const StratumResult& SeshadriReport::at(PointStratum s) const {
  for (const StratumResult& r : strata) {
    if (r.stratum == s) return r;
  }
  throw Error(ErrorCode::InvalidInput, "stratum missing from report");
}

EngineDiagnostics diagnose(const HNData& hn, Rank r) {
  const LevelSelection raw = select_level(hn, r);
  const Normalized norm = normalize_twist(hn, raw);
  return {raw, norm.level, norm.alpha, check_slope_gap(norm.hn, norm.level),
          check_aligned_head(hn, r)};
}

namespace {

void require_ample(const Rational& a, const Rational& b) {
  if (a <= 0 || b <= 0) {
    throw Error(ErrorCode::NotAmple,
                "a L + b M is ample only for a > 0 and b > 0 (got a = " +
                    to_string(a) + ", b = " + to_string(b) + ")");
  }
}

Criterion criterion_of(const EngineDiagnostics& diag) {
  if (diag.slope_gap.holds) return Criterion::SlopeGap;
  if (diag.aligned_head.holds) return Criterion::AlignedHead;
  return Criterion::BoundsOnly;
}

StratumResult evaluate(Criterion criterion, const Rational& a, const Rational& b,
                       PointStratum stratum) {
  StratumResult out{stratum, SeshadriValue::exactly(b), criterion};
  switch (criterion) {
    case Criterion::SlopeGap:
      // The base-locus stratum behaves like any point off Gamma_s.
      if (a < b && stratum == PointStratum::OnGammaS) {
        out.value = SeshadriValue::exactly(a);
      }
      break;
    case Criterion::AlignedHead:
      if (a < b) {
        if (stratum == PointStratum::OnGammaS) {
          out.value = SeshadriValue::exactly(a);
        } else if (stratum == PointStratum::InBaseLocusOffGammaS) {
          out.value = {a, b};
        }
      }
      break;
    case Criterion::BoundsOnly:
      out.value = {min(a, b), b};
      break;
  }
  return out;
}

}  // namespace

StratumResult seshadri_at(const HNData& hn, Rank r, const Rational& a,
                          const Rational& b, PointStratum stratum) {
  require_ample(a, b);
  return evaluate(criterion_of(diagnose(hn, r)), a, b, stratum);
}

SeshadriReport analyze_seshadri(const HNData& hn, Rank r, const Rational& a,
                                const Rational& b) {
  require_ample(a, b);
  SeshadriReport report;
  report.a = a;
  report.b = b;
  report.diagnostics = diagnose(hn, r);
  report.criterion = criterion_of(report.diagnostics);
  for (std::size_t i = 0; i < kAllStrata.size(); ++i) {
    report.strata[i] = evaluate(report.criterion, a, b, kAllStrata[i]);
  }
  report.eps_one = report.strata[0].value.upper;
  report.eps_inf = report.strata[0].value.lower;
  for (const StratumResult& s : report.strata) {
    report.eps_one = max(report.eps_one, s.value.upper);
    report.eps_inf = min(report.eps_inf, s.value.lower);
  }
  return report;
}

SeshadriReport seshadri_summary(const HNData& hn, Rank r, const Rational& a,
                                const Rational& b) {
  SeshadriReport report = analyze_seshadri(hn, r, a, b);
  if (!report.authoritative()) {
    throw Error(ErrorCode::HypothesisUnavailable,
                "neither the slope-gap nor the aligned-head criterion holds; "
                "only bounds are available");
  }
  return report;
}

HNData ruled_surface_hn(const Integer& e) {
  if (e < 1) {
    throw Error(ErrorCode::InvalidInput, "ruled surface invariant e must be >= 1");
  }
  return HNData({{1, Integer(0)}, {1, Integer(-e)}}, 0);
}

SeshadriReport ruled_surface(const Integer& e, const Rational& a, const Rational& b) {
  return seshadri_summary(ruled_surface_hn(e), 1, a, b);
}

OracleResult oracle_min_ratio(const HNData& hn, Rank r, const Rational& a,
                              const Rational& b, PointStratum stratum, long box) {
  require_ample(a, b);
  if (box < 1) {
    throw Error(ErrorCode::InvalidInput, "oracle box must be >= 1");
  }
  const EngineDiagnostics diag = diagnose(hn, r);
  const Criterion criterion = criterion_of(diag);
  if (criterion == Criterion::BoundsOnly) {
    throw Error(ErrorCode::HypothesisUnavailable,
                "the oracle needs the slope-gap or aligned-head criterion");
  }

  // Lower bound on n_l / n_s for horizontal curves other than Gamma_s, from
  // O(1) . C >= 0 in the frame where the relevant O(1) is effective or has
  // Gamma_s as its only negative curve.
  Integer horizontal_slope = 0;
  if (criterion == Criterion::SlopeGap) {
    horizontal_slope = -diag.normalized_level.theta;
  } else if (stratum == PointStratum::Generic) {
    horizontal_slope = diag.aligned_head.head->zeta - diag.raw_level.theta;
  }

  OracleResult best;
  best.criterion = criterion;
  bool found = false;
  auto consider = [&](CurveFamily family, const Integer& n_s, const Integer& n_l,
                      const Integer& mult) {
    Rational ratio = (a * Rational(n_s) + b * Rational(n_l)) / Rational(mult);
    if (!found || ratio < best.min) {
      found = true;
      best.min = ratio;
      best.witness = {family, n_s, n_l, mult};
    }
  };

  for (long n_l = 1; n_l <= box; ++n_l) {
    for (long mult = 1; mult <= n_l; ++mult) {
      consider(CurveFamily::Fiber, 0, n_l, mult);
    }
  }
  if (stratum == PointStratum::OnGammaS) {
    consider(CurveFamily::Section, 1, 0, 1);
  }
  for (long n_s = 1; n_s <= box; ++n_s) {
    const Integer lo = horizontal_slope * n_s;
    for (long mult = 1; mult <= n_s; ++mult) {
      for (Integer n_l = lo; n_l <= lo + box; ++n_l) {
        consider(CurveFamily::Horizontal, n_s, n_l, mult);
      }
    }
  }
  return best;
}

bool oracle_agrees(const OracleResult& oracle, const SeshadriValue& value) {
  return oracle.min == value.lower;
}

}  // namespace grasshadri
