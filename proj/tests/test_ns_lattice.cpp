#include "grasshadri/error.hpp"
#include "grasshadri/ns_lattice.hpp"

#include "support/fixtures.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

using namespace grasshadri;
using namespace grasshadri::testing;

namespace {

Rational q(long num, long den = 1) { return make_rational(num, den); }

std::vector<Rational> grid_values() {
  std::vector<Rational> v;
  for (long k = -10; k <= 10; ++k) v.push_back(q(k, 2));
  return v;
}

}  // namespace

TEST(to_lm, examples) {
  const Integer theta = -1;
  EXPECT_EQ(to_lm(nef_m_class(theta), theta), (LMCoords{0, 1}));
  EXPECT_EQ(to_lm(fiber_class(), theta), (LMCoords{1, 0}));
  EXPECT_EQ(to_lm(DivisorClass{3, 1}, Integer(-2)), (LMCoords{-5, 3}));
}

TEST(to_lm, round_trip) {
  Rng rng(0x1a77);
  for (int i = 0; i < 500; ++i) {
    const DivisorClass c{random_rational(rng, -20, 20, 7), random_rational(rng, -20, 20, 7)};
    const Integer theta(uniform(rng, -50, 50));
    EXPECT_EQ(from_lm(to_lm(c, theta), theta), c);
  }
}

TEST(pair, intersection_numbers) {
  const Integer theta = -3;
  const MoriGenerators g = curve_cone_generators();
  EXPECT_EQ(pair(nef_m_class(theta), g.gamma_s, theta), 0);
  EXPECT_EQ(pair(nef_m_class(theta), g.gamma_l, theta), 1);
  EXPECT_EQ(pair(fiber_class(), g.gamma_s, theta), 1);
  EXPECT_EQ(pair(fiber_class(), g.gamma_l, theta), 0);
  EXPECT_EQ(pair(tautological_class(), g.gamma_s, theta), Rational(theta));
  EXPECT_EQ(pair(tautological_class(), g.gamma_l, theta), 1);
  // the section of the quotient O + L_{-1} in the r = 2 example
  EXPECT_EQ(pair(tautological_class(), CurveClass{1, 1}, Integer(-2)), -1);
}

TEST(pair, bilinear_in_lm_coordinates) {
  Rng rng(0x1a78);
  for (int i = 0; i < 300; ++i) {
    const Integer theta(uniform(rng, -8, -1));
    const LMCoords lm{random_rational(rng, -9, 9, 4), random_rational(rng, -9, 9, 4)};
    const CurveClass c{random_rational(rng, 0, 9, 3), random_rational(rng, 0, 9, 3)};
    EXPECT_EQ(pair(from_lm(lm, theta), c, theta), lm.a * c.n_s + lm.b * c.n_l);
  }
}

TEST(pairing_matrix, identity_for_any_theta) {
  for (long t = -12; t <= 12; ++t) {
    const auto m = pairing_matrix(Integer(t));
    EXPECT_EQ(m[0][0], 1);
    EXPECT_EQ(m[0][1], 0);
    EXPECT_EQ(m[1][0], 0);
    EXPECT_EQ(m[1][1], 1);
  }
}

TEST(is_nef, examples) {
  const Integer theta = -1;
  EXPECT_TRUE(is_nef(fiber_class(), theta));
  EXPECT_FALSE(is_ample(fiber_class(), theta));
  EXPECT_TRUE(is_ample(from_lm({2, 3}, theta), theta));
  EXPECT_FALSE(is_nef(tautological_class(), theta));
}

TEST(is_nef, iff_nonnegative_on_mori_generators) {
  const MoriGenerators g = curve_cone_generators();
  for (long t : {-3L, -2L, -1L}) {
    const Integer theta(t);
    for (const Rational& taut : grid_values()) {
      for (const Rational& fib : grid_values()) {
        const DivisorClass c{taut, fib};
        const bool by_pairing =
            pair(c, g.gamma_s, theta) >= 0 && pair(c, g.gamma_l, theta) >= 0;
        EXPECT_EQ(is_nef(c, theta), by_pairing);
        const bool strictly =
            pair(c, g.gamma_s, theta) > 0 && pair(c, g.gamma_l, theta) > 0;
        EXPECT_EQ(is_ample(c, theta), strictly);
      }
    }
  }
}

TEST(is_pseff, examples) {
  const auto head = zeta_if_aligned(hn_filtration(ex2()), 2);
  ASSERT_TRUE(head);
  EXPECT_TRUE(is_pseff(tautological_class(), head));
  EXPECT_TRUE(is_pseff(fiber_class(), head));
  EXPECT_FALSE(is_pseff(DivisorClass{1, -1}, head));
  try {
    is_pseff(fiber_class(), zeta_if_aligned(hn_filtration(ex1()), 1));
    FAIL() << "expected ZetaUnavailable";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZetaUnavailable);
  }
}

TEST(is_pseff, nef_cone_inside_pseff_cone) {
  Rng rng(0x1a79);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const HNData hn = random_hn(rng, 12);
    const Rank r = random_tail_rank(rng, hn);
    const Normalized n = normalize_twist(hn, select_level(hn, r));
    const auto head = zeta_if_aligned(n.hn, r);
    if (!head) continue;
    ++checked;
    for (const Rational& taut : grid_values()) {
      for (const Rational& fib : grid_values()) {
        const DivisorClass c{taut, fib};
        if (is_nef(c, n.level.theta)) EXPECT_TRUE(is_pseff(c, head));
      }
    }
  }
  EXPECT_GT(checked, 10);
}

TEST(section_class, examples) {
  const Integer theta = -2;
  EXPECT_EQ(section_class(theta, theta), curve_cone_generators().gamma_s);
  EXPECT_EQ(section_class(Integer(-1), theta), (CurveClass{1, 1}));
  try {
    section_class(Integer(-3), theta);
    FAIL() << "expected BelowThetaBound";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BelowThetaBound);
  }
  const CurveClass c = section_class(Integer(5), theta);
  EXPECT_EQ(pair(fiber_class(), c, theta), 1);
  EXPECT_EQ(pair(tautological_class(), c, theta), 5);
}

TEST(exterior_power_degrees, examples) {
  const auto e2 = exterior_power_degrees(ex2(), 2);
  ASSERT_EQ(e2.size(), 3u);
  EXPECT_EQ(e2[0], (ExteriorEntry{Integer(0), true, true, Integer(1)}));
  EXPECT_EQ(e2[1], (ExteriorEntry{Integer(-1), false, true, Integer(4)}));
  EXPECT_EQ(e2[2], (ExteriorEntry{Integer(-2), false, true, Integer(1)}));

  const auto det = exterior_power_degrees(ex3(), 4);
  ASSERT_EQ(det.size(), 1u);
  EXPECT_EQ(det[0].degree, ex3().total_degree());
  EXPECT_EQ(det[0].count, 1);

  const auto e1 = exterior_power_degrees(ex1(), 1);
  ASSERT_EQ(e1.size(), 2u);
  EXPECT_EQ(e1[0], (ExteriorEntry{Integer(0), true, true, Integer(3)}));
  EXPECT_EQ(e1[1], (ExteriorEntry{Integer(-1), false, true, Integer(1)}));
}

TEST(exterior_power_degrees, counts_and_degree_sum) {
  Rng rng(0x1a7a);
  for (int trial = 0; trial < 200; ++trial) {
    const SplitBundle b = random_split_bundle(rng);
    const Rank n = b.total_rank();
    for (Rank r = 1; r <= n; ++r) {
      Integer count = 0;
      Integer degree_sum = 0;
      for (const ExteriorEntry& e : exterior_power_degrees(b, r)) {
        count += e.count;
        degree_sum += e.degree * e.count;
      }
      EXPECT_EQ(count, binomial(n, r));
      EXPECT_EQ(degree_sum, binomial(n - 1, r - 1) * b.total_degree());
    }
  }
}

TEST(exterior_power_degrees, degree_zero_products_of_nontrivial_factors) {
  // L_0 + L_0 + L_1 + L_{-1}: L_0^2 and L_1 L_{-1} have unknown triviality.
  const SplitBundle b({{Integer(0), 2, false}, {Integer(1), 1}, {Integer(-1), 1}}, 2);
  Integer undetermined = 0;
  for (const ExteriorEntry& e : exterior_power_degrees(b, 2)) {
    if (e.degree == 0) {
      EXPECT_FALSE(e.trivial);
      if (!e.determined) undetermined += e.count;
    }
  }
  EXPECT_EQ(undetermined, 2);
  EXPECT_FALSE(h0_exterior_power(b, 2).exact);
}

TEST(h0_estimate, cases) {
  EXPECT_EQ(h0_estimate(-1, false, 0), (SectionCount{0, true}));
  EXPECT_EQ(h0_estimate(-1, false, 5), (SectionCount{0, true}));
  EXPECT_EQ(h0_estimate(0, true, 1), (SectionCount{1, true}));
  EXPECT_EQ(h0_estimate(0, false, 1), (SectionCount{0, true}));
  EXPECT_EQ(h0_estimate(3, false, 0), (SectionCount{4, true}));
  EXPECT_EQ(h0_estimate(3, false, 1), (SectionCount{3, true}));
  // degree 5 > 2g - 2 = 4 on genus 3
  EXPECT_EQ(h0_estimate(5, false, 3), (SectionCount{3, true}));
  // below the Riemann-Roch range only a lower bound is known
  EXPECT_EQ(h0_estimate(4, false, 3), (SectionCount{2, false}));
  EXPECT_EQ(h0_estimate(1, false, 3), (SectionCount{0, false}));
}

TEST(h0_exterior_power, nontrivial_degree_zero_summand_has_no_sections) {
  const SectionCount h = h0_exterior_power(ex4(), 1);
  EXPECT_EQ(h, (SectionCount{2, true}));
  const SplitBundle b = ex4();
  Integer by_summand = 0;
  for (const Summand& s : b.summands()) {
    by_summand += h0_estimate(s.degree, s.trivial, 1).value * static_cast<long>(s.multiplicity);
  }
  EXPECT_EQ(by_summand, 2);
}

TEST(h0_exterior_power, additive_over_summands) {
  Rng rng(0x1a7b);
  for (int trial = 0; trial < 200; ++trial) {
    const SplitBundle b = random_split_bundle(rng);
    Integer total = 0;
    bool exact = true;
    for (const Summand& s : b.summands()) {
      const SectionCount h = h0_estimate(s.degree, s.trivial, b.genus());
      total += h.value * static_cast<long>(s.multiplicity);
      exact = exact && h.exact;
    }
    EXPECT_EQ(h0_exterior_power(b, 1), (SectionCount{total, exact}));
  }
}

TEST(unique_divisor_check, examples) {
  const UniqueDivisorReport e2 = unique_divisor_check(ex2(), 2);
  EXPECT_TRUE(e2.hypothesis_holds);
  EXPECT_EQ(*e2.alpha_twist, 0);
  EXPECT_TRUE(e2.class_is_effective);
  EXPECT_TRUE(e2.unique);
  ASSERT_TRUE(e2.h0);
  EXPECT_EQ(*e2.h0, (SectionCount{1, true}));

  const UniqueDivisorReport e1 = unique_divisor_check(ex1(), 1);
  EXPECT_FALSE(e1.hypothesis_holds);
  EXPECT_FALSE(e1.h0);

  const UniqueDivisorReport e3 = unique_divisor_check(ex3(), 2);
  EXPECT_TRUE(e3.hypothesis_holds);
  EXPECT_EQ(*e3.alpha_twist, 1);
  EXPECT_TRUE(e3.class_is_effective);
  EXPECT_TRUE(e3.unique);
  EXPECT_EQ(*e3.h0, (SectionCount{1, true}));
}

TEST(unique_divisor_check, hn_only_input_reports_without_sections) {
  const UniqueDivisorReport r = unique_divisor_check(hn_filtration(ex3()), 2);
  EXPECT_TRUE(r.hypothesis_holds);
  EXPECT_EQ(*r.alpha_twist, 1);
  EXPECT_FALSE(r.h0);
}

TEST(unique_divisor_check, single_section_for_random_split_bundles) {
  // When the head E_c has rank r and r | deg(E_c), the twisted r-th exterior
  // power has exactly one section: the head subset is trivial, every other
  // r-subset has negative degree.
  Rng rng(0x1a7c);
  int checked = 0;
  for (int trial = 0; trial < 600 && checked < 60; ++trial) {
    const SplitBundle b = random_split_bundle(rng, 7);
    const HNData hn = hn_filtration(b);
    const Rank r = random_tail_rank(rng, hn);
    const UniqueDivisorReport rep = unique_divisor_check(b, r);
    if (!rep.hypothesis_holds) continue;
    ++checked;
    ASSERT_TRUE(rep.h0);
    EXPECT_EQ(rep.h0->value, 1);
  }
  EXPECT_GE(checked, 20);
}
