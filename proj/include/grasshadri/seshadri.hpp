#pragma once

// Exact Seshadri constants of an ample class a L + b M on Gr(E), per point
// stratum, and a brute-force ratio oracle over the admissible curve-class
// families.
//
// Two criteria on the HN data give exact answers:
//   slope gap:    slope(E_m/E_{m-1}) - slope(E_{m-1}/E_{m-2}) <= theta after
//                 normalizing theta into [-r, 0). Gamma_s is then the only
//                 curve meeting O(1) negatively.
//   aligned head: some E_c has rank r and r | degree(E_c). O(1) is then
//                 effective after twisting.
// The slope-gap criterion takes precedence when both hold.

#include "grasshadri/hn_core.hpp"
#include "grasshadri/numeric.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace grasshadri {

enum class PointStratum { OnGammaS, InBaseLocusOffGammaS, Generic };

inline constexpr std::array<PointStratum, 3> kAllStrata = {
    PointStratum::OnGammaS, PointStratum::InBaseLocusOffGammaS,
    PointStratum::Generic};

/// "gamma-s", "base-locus", "generic".
std::string_view stratum_name(PointStratum s);
std::optional<PointStratum> parse_stratum(std::string_view name);

enum class Criterion { SlopeGap, AlignedHead, BoundsOnly };

/// "slope-gap", "aligned-head", "bounds-only".
std::string_view criterion_name(Criterion c);

struct SeshadriValue {
  Rational lower;
  Rational upper;

  static SeshadriValue exactly(const Rational& v) { return {v, v}; }
  bool exact() const { return lower == upper; }
  bool operator==(const SeshadriValue&) const = default;
};

struct StratumResult {
  PointStratum stratum = PointStratum::Generic;
  SeshadriValue value;
  Criterion criterion = Criterion::BoundsOnly;
};

struct EngineDiagnostics {
  LevelSelection raw_level;
  LevelSelection normalized_level;
  Integer alpha;
  HypothesisCheck slope_gap;
  AlignedHeadCheck aligned_head;
};

struct SeshadriReport {
  Rational a;
  Rational b;
  Criterion criterion = Criterion::BoundsOnly;
  /// Indexed like kAllStrata.
  std::array<StratumResult, 3> strata;
  /// Only meaningful when criterion != BoundsOnly; otherwise these hold the
  /// largest upper and smallest lower bound of the strata.
  Rational eps_one;
  Rational eps_inf;
  EngineDiagnostics diagnostics;

  bool authoritative() const { return criterion != Criterion::BoundsOnly; }
  const StratumResult& at(PointStratum s) const;
};

/// Normalizes and evaluates both criteria.
EngineDiagnostics diagnose(const HNData& hn, Rank r);

/// Throws Error(NotAmple) unless a > 0 and b > 0; Error(RankNotAligned)
/// when r is not a tail rank.
StratumResult seshadri_at(const HNData& hn, Rank r, const Rational& a,
                          const Rational& b, PointStratum stratum);

/// Report for all strata. When neither criterion applies the report is
/// labelled BoundsOnly and carries intervals [min(a, b), b].
SeshadriReport analyze_seshadri(const HNData& hn, Rank r, const Rational& a,
                                const Rational& b);

/// As analyze_seshadri, but throws Error(HypothesisUnavailable) when neither
/// criterion applies.
SeshadriReport seshadri_summary(const HNData& hn, Rank r, const Rational& a,
                                const Rational& b);

/// Rank-2 ruled surface with invariant e >= 1: HN data [(1, 0), (1, -e)],
/// r = 1.
HNData ruled_surface_hn(const Integer& e);
SeshadriReport ruled_surface(const Integer& e, const Rational& a, const Rational& b);

enum class CurveFamily { Fiber, Section, Horizontal };

std::string_view family_name(CurveFamily f);

struct OracleWitness {
  CurveFamily family = CurveFamily::Fiber;
  Integer n_s;
  Integer n_l;
  Integer mult;
};

struct OracleResult {
  Rational min;
  OracleWitness witness;
  Criterion criterion = Criterion::BoundsOnly;
};

/// Minimizes (a n_s + b n_l) / mult over the curve-class families admitted
/// by the applicable criterion, with all coordinates bounded by box.
/// Throws Error(HypothesisUnavailable) when neither criterion holds.
OracleResult oracle_min_ratio(const HNData& hn, Rank r, const Rational& a,
                              const Rational& b, PointStratum stratum, long box);

/// The oracle agrees with a stratum result when it reproduces an exact
/// value, or the lower end of an interval.
bool oracle_agrees(const OracleResult& oracle, const SeshadriValue& value);

}  // namespace grasshadri
