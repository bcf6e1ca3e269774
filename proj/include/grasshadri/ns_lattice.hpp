#pragma once

// Rational Neron-Severi group of the Grassmann bundle Gr(E) and its dual
// curve lattice. Divisor classes are stored in the basis ([O(1)], L) where
// L is the fiber class; the nef basis is (L, M) with M = [O(1)] - theta L.
// Curves are stored over the Mori generators (Gamma_s, Gamma_l).
//
// All functions assume the theta passed in belongs to the same twist of E
// as the O(1) coefficient of the class.

#include "grasshadri/hn_core.hpp"
#include "grasshadri/numeric.hpp"

#include <array>
#include <optional>
#include <vector>

namespace grasshadri {

struct DivisorClass {
  Rational taut;  // coefficient of [O(1)]
  Rational fib;   // coefficient of L

  bool operator==(const DivisorClass&) const = default;
};

struct LMCoords {
  Rational a;  // coefficient of L
  Rational b;  // coefficient of M

  bool operator==(const LMCoords&) const = default;
};

struct CurveClass {
  Rational n_s;  // multiple of Gamma_s
  Rational n_l;  // multiple of Gamma_l

  bool operator==(const CurveClass&) const = default;
};

struct SectionCount {
  Integer value;
  /// false means value is only a lower bound.
  bool exact = true;

  bool operator==(const SectionCount&) const = default;
};

LMCoords to_lm(const DivisorClass& c, const Integer& theta);
DivisorClass from_lm(const LMCoords& lm, const Integer& theta);

DivisorClass fiber_class();
DivisorClass tautological_class();
DivisorClass nef_m_class(const Integer& theta);

/// Intersection number of a divisor class with a curve class.
Rational pair(const DivisorClass& c, const CurveClass& curve, const Integer& theta);

bool is_nef(const DivisorClass& c, const Integer& theta);
bool is_ample(const DivisorClass& c, const Integer& theta);

/// Pseudo-effective iff taut >= 0 and fib + zeta * taut >= 0.
bool is_pseff(const DivisorClass& c, const Integer& zeta);
/// Throws Error(ZetaUnavailable) when no head of rank r exists: the cone is
/// then undetermined, not empty.
bool is_pseff(const DivisorClass& c, const std::optional<AlignedHead>& head);

/// The two pseudo-effective generators L and [O(1)] - zeta L.
std::array<DivisorClass, 2> pseff_generators(const Integer& zeta);
std::array<DivisorClass, 2> nef_generators(const Integer& theta);

struct MoriGenerators {
  CurveClass gamma_s{1, 0};
  CurveClass gamma_l{0, 1};
};

MoriGenerators curve_cone_generators();

/// Rows (L, M), columns (Gamma_s, Gamma_l).
std::array<std::array<Rational, 2>, 2> pairing_matrix(const Integer& theta);

/// Class of the section of Gr(E) -> X defined by a rank-r quotient of
/// degree delta. Throws Error(BelowThetaBound) if delta < theta.
CurveClass section_class(const Integer& delta, const Integer& theta);

struct ExteriorEntry {
  Integer degree;
  /// Every member summand is trivial.
  bool trivial = false;
  /// The entry's line bundle is known to be trivial or known to be
  /// nontrivial. Degree-0 products of nontrivial factors are flagged
  /// nontrivial without being determined.
  bool determined = true;
  Integer count;

  bool operator==(const ExteriorEntry&) const = default;
};

/// Line-bundle summands of the r-th exterior power of a split bundle,
/// aggregated by (degree, trivial, determined) with multiplicities, sorted by
/// decreasing degree.
std::vector<ExteriorEntry> exterior_power_degrees(const SplitBundle& bundle, Rank r);

/// Riemann-Roch style estimate of h^0 of a line bundle on a genus-g curve.
/// Nontrivial degree-0 bundles are taken to be generic (no sections).
SectionCount h0_estimate(const Integer& degree, bool trivial, long genus);

/// h^0 of the r-th exterior power of a split bundle, i.e. h^0(O(1)) on Gr(E).
SectionCount h0_exterior_power(const SplitBundle& bundle, Rank r);

struct UniqueDivisorReport {
  bool hypothesis_holds = false;
  std::optional<AlignedHead> head;
  /// E is twisted by a line bundle of degree -alpha_twist = -zeta / r.
  std::optional<Integer> alpha_twist;
  bool class_is_effective = false;
  bool unique = false;
  /// Present for split input when the hypothesis holds.
  std::optional<SectionCount> h0;
  std::vector<ExteriorEntry> twisted_entries;
};

/// Existence and uniqueness of the effective divisor in [O(1)] - zeta L when
/// an aligned head has degree divisible by r.
UniqueDivisorReport unique_divisor_check(const HNData& hn, Rank r);
UniqueDivisorReport unique_divisor_check(const SplitBundle& bundle, Rank r);

}  // namespace grasshadri
