#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "udrfusion/dihedral.hpp"

namespace udrfusion {
namespace {

TEST(DihedralParams, DefaultsAndValidation) {
  const auto params = DihedralParams::smallest(3);
  EXPECT_EQ(params.p(), 7);
  EXPECT_EQ(params.omega().value(), 2);
  EXPECT_EQ(params.group_order(), 6);
  EXPECT_THROW(DihedralParams::with_prime(6, 6), ParameterError);
  EXPECT_THROW(DihedralParams::with_prime(5, 13), ParameterError);  // 13 != 1 mod 5
  EXPECT_EQ(DihedralParams(3, 7, 16).omega().value(), 2);
  EXPECT_THROW(DihedralParams(3, 7, 1), ParameterError);
  EXPECT_THROW(DihedralParams(6, 7, 2), ParameterError);  // order 3, not 6
  EXPECT_THROW(DihedralParams::smallest(2), ParameterError);
}

TEST(Group, MultiplicationIsAssociativeWithInverses) {
  for (int n = 3; n <= 9; ++n) {
    const auto elements = all_elements(n);
    ASSERT_EQ(elements.size(), static_cast<std::size_t>(2 * n));
    const GroupElement e{0, false};
    for (const auto& g : elements) {
      EXPECT_EQ(multiply(n, g, invert(n, g)), e);
      for (const auto& h : elements) {
        for (const auto& k : elements) {
          EXPECT_EQ(multiply(n, multiply(n, g, h), k), multiply(n, g, multiply(n, h, k)));
        }
      }
    }
  }
}

TEST(Group, CenterBySize) {
  EXPECT_EQ(center(5).size(), 1u);
  const auto c6 = center(6);
  ASSERT_EQ(c6.size(), 2u);
  EXPECT_EQ(c6[1], (GroupElement{3, false}));
}

TEST(Irr2Reps, CountsAndLabels) {
  EXPECT_EQ(irr2_reps(DihedralParams::smallest(3)).size(), 1u);
  EXPECT_EQ(irr2_reps(DihedralParams::smallest(6)).size(), 2u);
  const auto reps7 = irr2_reps(DihedralParams::smallest(7));
  ASSERT_EQ(reps7.size(), 3u);
  EXPECT_EQ(reps7[2].label, RepLabel::irr2(3));
}

TEST(RepMatrix, ThetaOneForNThree) {
  const auto theta = irr2_rep(DihedralParams::smallest(3), 1);
  const PrimeModulus p7(7);
  EXPECT_EQ(rep_matrix(theta, {1, false}), FpMatrix::from_rows(p7, {{2, 0}, {0, 4}}));
  EXPECT_EQ(rep_matrix(theta, {0, true}), FpMatrix::from_rows(p7, {{0, 1}, {1, 0}}));
  EXPECT_EQ(rep_matrix(theta, {1, true}), FpMatrix::from_rows(p7, {{0, 4}, {2, 0}}));
}

TEST(RepMatrix, RelationsAndHomomorphism) {
  for (int n = 3; n <= 14; ++n) {
    for (std::int64_t p : smallest_primes_congruent_one(n, 2)) {
      const auto params = DihedralParams::with_prime(n, p);
      const auto elements = all_elements(n);
      for (const auto& rep : irr2_reps(params)) {
        EXPECT_TRUE(satisfies_relations(rep, n));
        for (const auto& g : elements) {
          for (const auto& h : elements) {
            EXPECT_EQ(rep_matrix(rep, multiply(n, g, h)), rep_matrix(rep, g) * rep_matrix(rep, h));
          }
        }
      }
    }
  }
}

TEST(RepMatrix, CharacterFormula) {
  for (int n = 3; n <= 12; ++n) {
    const auto params = DihedralParams::smallest(n);
    for (const auto& rep : irr2_reps(params)) {
      const int i = rep.label.index;
      for (int a = 0; a < n; ++a) {
        const auto w = params.omega();
        EXPECT_EQ(rep_matrix(rep, {a, false}).trace(), w.pow(i * a) + w.pow(-i * a));
        EXPECT_TRUE(rep_matrix(rep, {a, true}).trace().is_zero());
      }
    }
  }
}

TEST(TMap, Examples) {
  EXPECT_EQ(t_map(DihedralParams::smallest(5), 1), RepLabel::irr2(2));
  EXPECT_EQ(t_map(DihedralParams::smallest(6), 2), RepLabel::irr2(2));
  EXPECT_EQ(t_map(DihedralParams::smallest(4), 1), RepLabel::reducible_ind(2));
  EXPECT_EQ(t_map(DihedralParams::smallest(5), 1).to_string(), "theta_2");
  EXPECT_EQ(t_map(DihedralParams::smallest(4), 1).to_string(), "Ind(chi_2)");
}

TEST(TMap, MatchesTensorSquareSymmetricCharacter) {
  // T(theta_i) is theta_{2i} up to the identification theta_m ~ theta_{n-m}.
  for (int n = 3; n <= 20; ++n) {
    const auto params = DihedralParams::smallest(n);
    for (int i = 1; params.is_irr2_index(i); ++i) {
      const auto label = t_map(params, i);
      const int two_i = (2 * i) % n;
      const int folded = std::min(two_i, n - two_i);
      if (label.kind == RepLabel::Kind::Irr2) {
        EXPECT_EQ(label.index, folded);
      } else {
        EXPECT_EQ(2 * folded, n);
      }
    }
  }
}

TEST(ReducibleInduced, HasInvariantLine) {
  const auto params = DihedralParams::smallest(4);
  const auto ind = induced_rep(params, 2);
  EXPECT_TRUE(satisfies_relations(ind, 4));
  // The line through (1, 1) is stable when chi_2 = chi_2^{-1}: r acts by -1, s by +1.
  const FpScalar one(1, params.modulus());
  const std::vector<FpScalar> v = {one, one};
  const std::vector<FpScalar> minus_v = {-one, -one};
  EXPECT_EQ(ind.mat_r * std::span<const FpScalar>(v), minus_v);
  EXPECT_EQ(ind.mat_s * std::span<const FpScalar>(v), v);
}

TEST(Omega, Examples) {
  EXPECT_EQ(omega_set(DihedralParams::smallest(5)), (std::vector<int>{1, 2}));
  EXPECT_EQ(omega_set(DihedralParams::smallest(6)), (std::vector<int>{2}));
  EXPECT_TRUE(omega_set(DihedralParams::smallest(4)).empty());
}

TEST(Omega, EqualsCenterTrivialIndices) {
  for (int n = 3; n <= 40; ++n) {
    const auto params = DihedralParams::smallest(n);
    std::vector<int> expected;
    for (int i = 1; params.is_irr2_index(i); ++i) {
      if (center_acts_trivially(params, i)) expected.push_back(i);
    }
    EXPECT_EQ(omega_set(params), expected) << "n=" << n;
  }
}

TEST(TPreimage, Examples) {
  EXPECT_EQ(t_preimage(DihedralParams::smallest(5), 2), (std::vector<int>{1}));
  EXPECT_EQ(t_preimage(DihedralParams::smallest(6), 2), (std::vector<int>{1, 2}));
  EXPECT_EQ(t_preimage(DihedralParams::smallest(12), 2), (std::vector<int>{1, 5}));
  EXPECT_THROW(t_preimage(DihedralParams::smallest(6), 1), ParameterError);
}

TEST(TPreimage, SizesAndSection) {
  for (int n = 3; n <= 40; ++n) {
    const auto params = DihedralParams::smallest(n);
    for (int i0 : omega_set(params)) {
      const auto pre = t_preimage(params, i0);
      EXPECT_EQ(pre.size(), n % 2 == 0 ? 2u : 1u) << "n=" << n << " i0=" << i0;
      for (int j : pre) EXPECT_EQ(t_map(params, j), RepLabel::irr2(i0));
      if (n % 2 == 0) {
        const int d0 = i0 / 2;
        std::vector<int> expected = {std::min(d0, n / 2 - d0), std::max(d0, n / 2 - d0)};
        EXPECT_EQ(pre, expected);
      }
    }
  }
}

TEST(Kernel, Examples) {
  const auto p6 = DihedralParams::smallest(6);
  const auto k62 = kernel_invariant(p6, 2);
  EXPECT_EQ(k62.gcd, 2);
  EXPECT_EQ(k62.kernel.order(), 2u);
  EXPECT_EQ(k62.kernel.elements[1], (GroupElement{3, false}));
  EXPECT_EQ(kernel_invariant(p6, 1).kernel.order(), 1u);
  const auto k123 = kernel_invariant(DihedralParams::smallest(12), 3);
  EXPECT_EQ(k123.gcd, 3);
  EXPECT_EQ(k123.kernel.order(), 3u);
  ASSERT_EQ(k123.kernel.generators.size(), 1u);
  EXPECT_EQ(k123.kernel.generators[0].word(), "r^4");
}

TEST(Kernel, ScanMatchesFormula) {
  for (int n = 3; n <= 30; ++n) {
    const auto params = DihedralParams::smallest(n);
    for (int i = 1; params.is_irr2_index(i); ++i) {
      const auto formula = kernel_invariant(params, i);
      const auto scan = kernel_by_scan(params, i);
      EXPECT_EQ(formula.kernel, scan) << "n=" << n << " i=" << i;
      EXPECT_EQ(static_cast<int>(scan.order()), std::gcd(i, n));
    }
  }
}

TEST(Center, Examples) {
  EXPECT_TRUE(center_acts_trivially(DihedralParams::smallest(5), 2));
  EXPECT_FALSE(center_acts_trivially(DihedralParams::smallest(6), 1));
  EXPECT_TRUE(center_acts_trivially(DihedralParams::smallest(6), 2));
}

TEST(Words, Formatting) {
  EXPECT_EQ((GroupElement{0, false}).word(), "e");
  EXPECT_EQ((GroupElement{1, false}).word(), "r");
  EXPECT_EQ((GroupElement{0, true}).word(), "s");
  EXPECT_EQ((GroupElement{2, true}).word(), "s r^2");
}

}  // namespace
}  // namespace udrfusion
