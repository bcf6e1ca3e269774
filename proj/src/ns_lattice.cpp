#include "grasshadri/ns_lattice.hpp"

#include "grasshadri/error.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace grasshadri {

LMCoords to_lm(const DivisorClass& c, const Integer& theta) {
  return {c.fib + Rational(theta) * c.taut, c.taut};
}

DivisorClass from_lm(const LMCoords& lm, const Integer& theta) {
  return {lm.b, lm.a - Rational(theta) * lm.b};
}

DivisorClass fiber_class() { return {0, 1}; }

DivisorClass tautological_class() { return {1, 0}; }

DivisorClass nef_m_class(const Integer& theta) { return {1, Rational(-theta)}; }

Rational pair(const DivisorClass& c, const CurveClass& curve, const Integer& theta) {
  // O(1).Gamma_s = theta, O(1).Gamma_l = 1, L.Gamma_s = 1, L.Gamma_l = 0.
  return c.taut * (Rational(theta) * curve.n_s + curve.n_l) + c.fib * curve.n_s;
}

bool is_nef(const DivisorClass& c, const Integer& theta) {
  const LMCoords lm = to_lm(c, theta);
  return lm.a >= 0 && lm.b >= 0;
}

bool is_ample(const DivisorClass& c, const Integer& theta) {
  const LMCoords lm = to_lm(c, theta);
  return lm.a > 0 && lm.b > 0;
}

bool is_pseff(const DivisorClass& c, const Integer& zeta) {
  return c.taut >= 0 && c.fib + Rational(zeta) * c.taut >= 0;
}

bool is_pseff(const DivisorClass& c, const std::optional<AlignedHead>& head) {
  if (!head) {
    throw Error(ErrorCode::ZetaUnavailable,
                "no HN head has rank r; the pseudo-effective cone is not "
                "determined");
  }
  return is_pseff(c, head->zeta);
}

std::array<DivisorClass, 2> pseff_generators(const Integer& zeta) {
  return {fiber_class(), DivisorClass{1, Rational(-zeta)}};
}

std::array<DivisorClass, 2> nef_generators(const Integer& theta) {
  return {fiber_class(), nef_m_class(theta)};
}

MoriGenerators curve_cone_generators() { return {}; }

std::array<std::array<Rational, 2>, 2> pairing_matrix(const Integer& theta) {
  const MoriGenerators mori = curve_cone_generators();
  const auto gens = nef_generators(theta);
  std::array<std::array<Rational, 2>, 2> out;
  for (std::size_t i = 0; i < 2; ++i) {
    out[i][0] = pair(gens[i], mori.gamma_s, theta);
    out[i][1] = pair(gens[i], mori.gamma_l, theta);
  }
  return out;
}

CurveClass section_class(const Integer& delta, const Integer& theta) {
  if (delta < theta) {
    throw Error(ErrorCode::BelowThetaBound,
                "a rank-r quotient of degree " + to_string(delta) +
                    " would be below theta = " + to_string(theta));
  }
  return {1, Rational(delta - theta)};
}

namespace {

struct Group {
  Integer degree;  // after twisting
  Rank multiplicity = 1;
  bool trivial = false;  // after twisting
  bool in_head = false;
};

using EntryKey = std::tuple<Integer, bool, bool>;

struct Enumerator {
  const std::vector<Group>& groups;
  std::map<EntryKey, Integer>& out;
  std::vector<Rank> picks;

  void run(std::size_t index, Rank remaining) {
    if (index == groups.size()) {
      if (remaining == 0) record();
      return;
    }
    const Rank cap = std::min(remaining, groups[index].multiplicity);
    for (Rank k = 0; k <= cap; ++k) {
      picks[index] = k;
      run(index + 1, remaining - k);
    }
    picks[index] = 0;
  }

  void record() {
    Integer degree = 0;
    Integer count = 1;
    Rank nontrivial_members = 0;
    bool head_subset = true;
    bool any_head = false;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      const Group& g = groups[i];
      const Rank k = picks[i];
      degree += g.degree * static_cast<long>(k);
      count *= binomial(g.multiplicity, k);
      if (!g.trivial) nontrivial_members += k;
      if (g.in_head) {
        any_head = true;
        if (k != g.multiplicity) head_subset = false;
      } else if (k != 0) {
        head_subset = false;
      }
    }
    bool trivial = nontrivial_members == 0 || (any_head && head_subset);
    bool determined = trivial || degree != 0 || nontrivial_members == 1;
    out[{degree, trivial, determined}] += count;
  }
};

std::vector<ExteriorEntry> enumerate_exterior(const std::vector<Group>& groups,
                                              Rank r) {
  std::map<EntryKey, Integer> acc;
  Enumerator e{groups, acc, std::vector<Rank>(groups.size(), 0)};
  if (r >= 0) e.run(0, r);
  std::vector<ExteriorEntry> entries;
  entries.reserve(acc.size());
  for (const auto& [key, count] : acc) {
    entries.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), count});
  }
  std::sort(entries.begin(), entries.end(),
            [](const ExteriorEntry& x, const ExteriorEntry& y) {
              if (x.degree != y.degree) return x.degree > y.degree;
              if (x.trivial != y.trivial) return x.trivial;
              return x.determined && !y.determined;
            });
  return entries;
}

SectionCount sum_sections(const std::vector<ExteriorEntry>& entries, long genus) {
  SectionCount total{0, true};
  for (const ExteriorEntry& e : entries) {
    const SectionCount h = h0_estimate(e.degree, e.trivial, genus);
    total.value += h.value * e.count;
    if (!h.exact || (e.degree == 0 && !e.determined)) total.exact = false;
  }
  return total;
}

}  // namespace

std::vector<ExteriorEntry> exterior_power_degrees(const SplitBundle& bundle, Rank r) {
  if (r < 0 || r > bundle.total_rank()) {
    throw Error(ErrorCode::InvalidInput,
                "exterior power " + std::to_string(r) + " of a rank-" +
                    std::to_string(bundle.total_rank()) + " bundle");
  }
  std::vector<Group> groups;
  for (const Summand& s : bundle.summands()) {
    groups.push_back({s.degree, s.multiplicity, s.trivial, false});
  }
  return enumerate_exterior(groups, r);
}

SectionCount h0_estimate(const Integer& degree, bool trivial, long genus) {
  if (degree < 0) return {0, true};
  if (degree == 0) {
    return {(trivial || genus == 0) ? 1 : 0, true};
  }
  if (genus == 0) return {degree + 1, true};
  const Integer rr = degree - genus + 1;
  if (degree > 2 * genus - 2) return {rr, true};
  return {rr > 0 ? rr : Integer(0), false};
}

SectionCount h0_exterior_power(const SplitBundle& bundle, Rank r) {
  return sum_sections(exterior_power_degrees(bundle, r), bundle.genus());
}

UniqueDivisorReport unique_divisor_check(const HNData& hn, Rank r) {
  const AlignedHeadCheck check = check_aligned_head(hn, r);
  UniqueDivisorReport report;
  report.hypothesis_holds = check.holds;
  report.head = check.head;
  if (check.holds) {
    report.alpha_twist = check.head->zeta / static_cast<long>(r);
    report.class_is_effective = true;
    report.unique = true;
  }
  return report;
}

UniqueDivisorReport unique_divisor_check(const SplitBundle& bundle, Rank r) {
  const HNData hn = hn_filtration(bundle);
  UniqueDivisorReport report = unique_divisor_check(hn, r);
  if (!report.hypothesis_holds) return report;

  const Integer& alpha = *report.alpha_twist;
  // The head consists of the summands in the c largest distinct degrees.
  const HNPiece& last_head = hn.piece(report.head->c);
  const Rational head_floor = slope(last_head);
  bool head_all_trivial = true;
  for (const Summand& s : bundle.summands()) {
    if (Rational(s.degree) >= head_floor && !s.trivial) head_all_trivial = false;
  }
  // The twist L satisfies L^r = det(E_c)^*; it can be taken trivial exactly
  // when det(E_c) is known trivial.
  const bool twist_trivial = alpha == 0 && head_all_trivial;

  std::vector<Group> groups;
  for (const Summand& s : bundle.summands()) {
    const bool in_head = Rational(s.degree) >= head_floor;
    groups.push_back({s.degree - alpha, s.multiplicity,
                      twist_trivial && s.trivial, in_head});
  }
  report.twisted_entries = enumerate_exterior(groups, r);
  report.h0 = sum_sections(report.twisted_entries, bundle.genus());
  return report;
}

}  // namespace grasshadri
