#pragma once

// Harder-Narasimhan data of a non-semistable bundle on a smooth projective
// curve, the level selection (m, r, theta), normalization by twisting, and
// the degree bounds for rank-r quotients.
//
// Pieces are indexed from 1 in the mathematical sense: piece i is the graded
// quotient E_i / E_{i-1}. In code, pieces()[i - 1] holds piece i.

#include "grasshadri/numeric.hpp"

#include <optional>
#include <span>
#include <vector>

namespace grasshadri {

struct HNPiece {
  Rank rank = 1;
  Integer degree;

  bool operator==(const HNPiece&) const = default;
};

Rational slope(const HNPiece& piece);

class HNData {
 public:
  /// Validates rank >= 1, at least two pieces, strictly decreasing slopes
  /// and genus >= 0. Throws Error(SemistableInput) for a single piece and
  /// Error(InvalidInput) for everything else.
  HNData(std::vector<HNPiece> pieces, long genus);

  std::span<const HNPiece> pieces() const { return pieces_; }
  const HNPiece& piece(std::size_t index) const { return pieces_.at(index - 1); }
  std::size_t length() const { return pieces_.size(); }
  long genus() const { return genus_; }

  Rank total_rank() const;
  Integer total_degree() const;

  /// rank and degree of E / E_k (tail above level k), 0 <= k <= d.
  Rank tail_rank(std::size_t k) const;
  Integer tail_degree(std::size_t k) const;
  /// rank and degree of E_k.
  Rank head_rank(std::size_t k) const;
  Integer head_degree(std::size_t k) const;

  bool operator==(const HNData&) const = default;

 private:
  std::vector<HNPiece> pieces_;
  long genus_ = 0;
};

struct Summand {
  Integer degree;
  Rank multiplicity = 1;
  bool trivial = false;

  bool operator==(const Summand&) const = default;
};

/// Direct sum of line bundles on a curve of the given genus.
class SplitBundle {
 public:
  SplitBundle(std::vector<Summand> summands, long genus);

  std::span<const Summand> summands() const { return summands_; }
  long genus() const { return genus_; }
  Rank total_rank() const;
  Integer total_degree() const;

 private:
  std::vector<Summand> summands_;
  long genus_ = 0;
};

/// The chosen HN level: r = rank(E / E_{m-1}), theta = degree(E / E_{m-1}).
struct LevelSelection {
  std::size_t m = 2;
  Rank r = 1;
  Integer theta;

  bool operator==(const LevelSelection&) const = default;
};

struct Normalized {
  HNData hn;
  LevelSelection level;
  /// E was twisted by a line bundle of degree -alpha.
  Integer alpha;
};

/// Head of the filtration with rank exactly r: E_c with c < d.
struct AlignedHead {
  std::size_t c = 1;
  Integer zeta;

  bool operator==(const AlignedHead&) const = default;
};

/// A hypothesis verdict together with both sides of the governing inequality.
struct HypothesisCheck {
  bool holds = false;
  Rational lhs;
  Rational rhs;
};

struct AlignedHeadCheck {
  bool holds = false;
  std::optional<AlignedHead> head;
  Rank r = 1;
};

struct QuotientBounds {
  /// Every rank-r quotient has degree >= base.
  Rational base;
  /// Every rank-r quotient other than E / E_{m-1} has degree >= refined.
  /// Under the slope-gap hypothesis on normalized data refined >= 0, and
  /// since degrees scale by the cover degree the same holds after pullback
  /// to any finite cover of the curve.
  Rational refined;
};

/// Groups summands by degree, in decreasing degree order.
HNData hn_filtration(const SplitBundle& bundle);

/// Throws Error(RankNotAligned) unless r is the rank of some tail E / E_{m-1}
/// with 2 <= m <= d.
LevelSelection select_level(const HNData& hn, Rank r);

/// Twists so that the selected theta lands in [-r, 0).
Normalized normalize_twist(const HNData& hn, const LevelSelection& level);

std::optional<AlignedHead> zeta_if_aligned(const HNData& hn, Rank r);

/// Lower bound for the degree of a rank-rho quotient obtained by truncating
/// the filtration at the first level t with rank(E / E_t) <= rho.
/// Requires 1 <= rho < total rank, else Error(RhoOutOfRange).
Rational theta_for_rank(const HNData& hn, Rank rho);

QuotientBounds quotient_degree_bounds(const HNData& hn,
                                      const LevelSelection& level);

/// slope(piece m) - slope(piece m-1) <= theta, on normalized data.
/// lhs is the slope gap, rhs is theta. Throws Error(NotNormalized) when
/// theta lies outside [-r, 0).
HypothesisCheck check_slope_gap(const HNData& normalized,
                                const LevelSelection& level);

/// An aligned head E_c exists with rank r and r | degree(E_c).
AlignedHeadCheck check_aligned_head(const HNData& hn, Rank r);

}  // namespace grasshadri
