#include "grasshadri/hn_core.hpp"

#include "grasshadri/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace grasshadri {

Rational slope(const HNPiece& piece) {
  return slope_of(piece.degree, piece.rank);
}

HNData::HNData(std::vector<HNPiece> pieces, long genus)
    : pieces_(std::move(pieces)), genus_(genus) {
  if (genus_ < 0) {
    throw Error(ErrorCode::InvalidInput, "genus must be >= 0");
  }
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (pieces_[i].rank < 1) {
      throw Error(ErrorCode::InvalidInput,
                  "HN piece " + std::to_string(i + 1) + " has rank < 1");
    }
  }
  if (pieces_.size() < 2) {
    throw Error(ErrorCode::SemistableInput,
                "HN filtration needs at least two pieces; the bundle is "
                "semistable");
  }
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
    if (!(slope(pieces_[i]) > slope(pieces_[i + 1]))) {
      throw Error(ErrorCode::InvalidInput,
                  "HN slopes must strictly decrease: piece " +
                      std::to_string(i + 1) + " has slope " +
                      to_string(slope(pieces_[i])) + ", piece " +
                      std::to_string(i + 2) + " has slope " +
                      to_string(slope(pieces_[i + 1])));
    }
  }
}

Rank HNData::total_rank() const { return head_rank(pieces_.size()); }

Integer HNData::total_degree() const { return head_degree(pieces_.size()); }

Rank HNData::head_rank(std::size_t k) const {
  Rank sum = 0;
  for (std::size_t i = 0; i < k; ++i) sum += pieces_.at(i).rank;
  return sum;
}

Integer HNData::head_degree(std::size_t k) const {
  Integer sum = 0;
  for (std::size_t i = 0; i < k; ++i) sum += pieces_.at(i).degree;
  return sum;
}

Rank HNData::tail_rank(std::size_t k) const {
  return total_rank() - head_rank(k);
}

Integer HNData::tail_degree(std::size_t k) const {
  return total_degree() - head_degree(k);
}

SplitBundle::SplitBundle(std::vector<Summand> summands, long genus)
    : summands_(std::move(summands)), genus_(genus) {
  if (genus_ < 0) {
    throw Error(ErrorCode::InvalidInput, "genus must be >= 0");
  }
  std::set<Integer> degrees;
  for (std::size_t i = 0; i < summands_.size(); ++i) {
    const Summand& s = summands_[i];
    const std::string where = "summand " + std::to_string(i + 1);
    if (s.multiplicity < 1) {
      throw Error(ErrorCode::InvalidInput, where + ": multiplicity must be >= 1");
    }
    if (s.trivial && s.degree != 0) {
      throw Error(ErrorCode::InvalidInput,
                  where + ": only a degree-0 line bundle can be trivial");
    }
    if (!s.trivial && s.degree == 0 && genus_ == 0) {
      throw Error(ErrorCode::InvalidInput,
                  where + ": a nontrivial degree-0 line bundle needs genus >= 1");
    }
    degrees.insert(s.degree);
  }
  if (degrees.size() < 2) {
    throw Error(ErrorCode::SemistableInput,
                "a split bundle with a single summand degree is semistable");
  }
}

Rank SplitBundle::total_rank() const {
  Rank sum = 0;
  for (const Summand& s : summands_) sum += s.multiplicity;
  return sum;
}

Integer SplitBundle::total_degree() const {
  Integer sum = 0;
  for (const Summand& s : summands_) sum += s.degree * static_cast<long>(s.multiplicity);
  return sum;
}

HNData hn_filtration(const SplitBundle& bundle) {
  std::map<Integer, Rank, std::greater<>> by_degree;
  for (const Summand& s : bundle.summands()) by_degree[s.degree] += s.multiplicity;
  if (by_degree.size() < 2) {
    throw Error(ErrorCode::SemistableInput,
                "a split bundle with a single summand degree is semistable");
  }
  std::vector<HNPiece> pieces;
  pieces.reserve(by_degree.size());
  for (const auto& [degree, rank] : by_degree) {
    pieces.push_back({rank, degree * static_cast<long>(rank)});
  }
  return HNData(std::move(pieces), bundle.genus());
}

LevelSelection select_level(const HNData& hn, Rank r) {
  for (std::size_t m = 2; m <= hn.length(); ++m) {
    if (hn.tail_rank(m - 1) == r) {
      return {m, r, hn.tail_degree(m - 1)};
    }
  }
  std::string tails;
  for (std::size_t m = 2; m <= hn.length(); ++m) {
    if (!tails.empty()) tails += ", ";
    tails += std::to_string(hn.tail_rank(m - 1));
  }
  throw Error(ErrorCode::RankNotAligned,
              "r = " + std::to_string(r) +
                  " is not the rank of an HN tail (tail ranks: " + tails + ")");
}

Normalized normalize_twist(const HNData& hn, const LevelSelection& level) {
  const Integer r(static_cast<long>(level.r));
  const Integer alpha = floor_div(level.theta, r) + 1;
  std::vector<HNPiece> twisted;
  twisted.reserve(hn.length());
  for (const HNPiece& p : hn.pieces()) {
    twisted.push_back({p.rank, p.degree - alpha * static_cast<long>(p.rank)});
  }
  LevelSelection shifted = level;
  shifted.theta = level.theta - alpha * r;
  return {HNData(std::move(twisted), hn.genus()), shifted, alpha};
}

std::optional<AlignedHead> zeta_if_aligned(const HNData& hn, Rank r) {
  for (std::size_t c = 1; c < hn.length(); ++c) {
    if (hn.head_rank(c) == r) return AlignedHead{c, hn.head_degree(c)};
  }
  return std::nullopt;
}

Rational theta_for_rank(const HNData& hn, Rank rho) {
  if (rho < 1 || rho >= hn.total_rank()) {
    throw Error(ErrorCode::RhoOutOfRange,
                "rho = " + std::to_string(rho) + " outside [1, " +
                    std::to_string(hn.total_rank() - 1) + "]");
  }
  std::size_t t = 1;
  while (hn.tail_rank(t) > rho) ++t;
  const Rational excess(static_cast<long>(rho - hn.tail_rank(t)));
  return Rational(hn.tail_degree(t)) + excess * slope(hn.piece(t));
}

QuotientBounds quotient_degree_bounds(const HNData& hn,
                                      const LevelSelection& level) {
  const Rational base(level.theta);
  Rational refined = base + slope(hn.piece(level.m - 1)) - slope(hn.piece(level.m));
  return {base, refined};
}

HypothesisCheck check_slope_gap(const HNData& normalized,
                                const LevelSelection& level) {
  const Integer r(static_cast<long>(level.r));
  if (level.theta < -r || level.theta >= 0) {
    throw Error(ErrorCode::NotNormalized,
                "theta = " + to_string(level.theta) + " is outside [-" +
                    to_string(r) + ", 0)");
  }
  Rational gap = slope(normalized.piece(level.m)) - slope(normalized.piece(level.m - 1));
  const Rational theta(level.theta);
  return {gap <= theta, gap, theta};
}

AlignedHeadCheck check_aligned_head(const HNData& hn, Rank r) {
  AlignedHeadCheck out;
  out.r = r;
  out.head = zeta_if_aligned(hn, r);
  out.holds = out.head.has_value() &&
              mpz_divisible_ui_p(out.head->zeta.get_mpz_t(),
                                 static_cast<unsigned long>(r)) != 0;
  return out;
}

}  // namespace grasshadri
