#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fusion;

namespace {

FiniteAbelianGroup group(std::initializer_list<int> factors) {
  std::vector<Integer> f;
  for (int x : factors) f.emplace_back(x);
  return FiniteAbelianGroup(f);
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
  return m;
}

void expect_smith_properties(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  ASSERT_EQ(s.u * m * s.v, s.d);
  EXPECT_EQ(abs(oracle::bareiss_determinant(s.u)), 1);
  EXPECT_EQ(abs(oracle::bareiss_determinant(s.v)), 1);
  const auto diag = s.diagonal();
  for (std::size_t i = 0; i < s.d.rows(); ++i)
    for (std::size_t j = 0; j < s.d.cols(); ++j)
      if (i != j) EXPECT_EQ(s.d(i, j), 0);
  for (std::size_t i = 0; i < diag.size(); ++i) {
    EXPECT_GE(diag[i], 0);
    if (i + 1 < diag.size() && diag[i] != 0) EXPECT_EQ(diag[i + 1] % diag[i], 0);
    if (diag[i] == 0)
      for (std::size_t k = i; k < diag.size(); ++k) EXPECT_EQ(diag[k], 0);
  }
  if (m.rows() == m.cols()) {
    Integer prod = 1;
    for (const auto& x : diag) prod *= x;
    EXPECT_EQ(abs(oracle::bareiss_determinant(m)), prod);
  }
}

// All (group, action) pairs with |A| <= 4 and action order dividing m.
struct Case {
  FiniteAbelianGroup a;
  IntMatrix t;
  std::string name;
};

std::vector<Case> coefficient_cases(std::size_t m) {
  std::vector<Case> cases;
  auto add = [&](FiniteAbelianGroup a, IntMatrix t, std::string name) {
    CoefficientModule c(a, t);
    if (c.order_divides(m)) cases.push_back({std::move(a), std::move(t), std::move(name)});
  };
  add(FiniteAbelianGroup(), IntMatrix(0, 0), "0");
  add(group({2}), {{1}}, "Z/2");
  add(group({3}), {{1}}, "Z/3");
  add(group({3}), {{-1}}, "Z/3 inverted");
  add(group({4}), {{1}}, "Z/4");
  add(group({4}), {{-1}}, "Z/4 inverted");
  add(group({2, 2}), {{1, 0}, {0, 1}}, "V");
  add(group({2, 2}), {{0, 1}, {1, 0}}, "V swapped");
  add(group({2, 2}), {{0, 1}, {1, 1}}, "V order 3");
  return cases;
}

}  // namespace

TEST(Smith, KnownExamples) {
  const SmithForm s = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
  EXPECT_EQ(s.diagonal(), (std::vector<Integer>{2, 4}));
  EXPECT_EQ(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).diagonal(), (std::vector<Integer>{1, 6}));
  EXPECT_EQ(smith_normal_form(IntMatrix{{0, 0}, {0, 0}}).rank(), 0u);
  EXPECT_EQ(smith_normal_form(IntMatrix{{1, 2, 3}}).diagonal(), (std::vector<Integer>{1}));
}

TEST(Smith, RandomMatricesSatisfyAllProperties) {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> dim(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_matrix(rng, dim(rng), dim(rng), 20);
    expect_smith_properties(m);
  }
}

TEST(Smith, RankDeficientAndLargeEntries) {
  IntMatrix m{{1, 2, 3}, {2, 4, 6}, {3, 6, 9}};
  expect_smith_properties(m);
  EXPECT_EQ(smith_normal_form(m).rank(), 1u);
  IntMatrix big(2, 2);
  big(0, 0) = Integer("123456789012345678901234567890");
  big(0, 1) = 7;
  big(1, 0) = Integer("987654321098765432109876543210");
  big(1, 1) = 11;
  expect_smith_properties(big);
}

TEST(AbelianGroup, Normalization) {
  EXPECT_EQ(FiniteAbelianGroup::from_cyclic_orders({2, 3}), group({6}));
  EXPECT_EQ(FiniteAbelianGroup::from_cyclic_orders({2, 2}), group({2, 2}));
  EXPECT_EQ(FiniteAbelianGroup::from_cyclic_orders({4, 6}), group({2, 12}));
  EXPECT_TRUE(FiniteAbelianGroup::from_cyclic_orders({1, 1}).trivial());
  EXPECT_EQ(group({2, 6}).to_string(), "Z/2 + Z/6");
  EXPECT_EQ(FiniteAbelianGroup().to_string(), "0");
  EXPECT_EQ(group({2, 6}).order(), 12);
  EXPECT_EQ(group({2, 6}).exponent(), 6);
  EXPECT_THROW(group({2, 3}), std::invalid_argument);
  EXPECT_THROW(group({1}), std::invalid_argument);
}

TEST(Coefficients, RejectsInvalidActions) {
  EXPECT_THROW(CoefficientModule(group({4}), IntMatrix{{2}}), std::invalid_argument);
  EXPECT_THROW(CoefficientModule(group({2, 4}), IntMatrix{{1, 0}, {1, 1}}), std::invalid_argument);
  EXPECT_THROW(CoefficientModule(group({3}), IntMatrix{{1, 0}}), std::invalid_argument);
  // Inversion on Z/3 has order 2, so it is not a Z/3-action.
  EXPECT_THROW(cyclic_cohomology(3, CoefficientModule(group({3}), IntMatrix{{-1}}), 1),
               std::invalid_argument);
}

TEST(Cohomology, SpotValues) {
  EXPECT_EQ(cyclic_cohomology(2, CoefficientModule(group({2})), 3), group({2}));
  EXPECT_TRUE(cyclic_cohomology(2, CoefficientModule(group({3})), 3).trivial());
  EXPECT_EQ(cyclic_cohomology(4, CoefficientModule(group({6})), 2), group({2}));
  EXPECT_EQ(cyclic_cohomology(3, CoefficientModule(group({3})), 0), group({3}));
  // Coprime orders kill everything in positive degree, whatever the action.
  const CoefficientModule inv3(group({3}), IntMatrix{{-1}});
  for (std::size_t n = 0; n <= 3; ++n) EXPECT_TRUE(cyclic_cohomology(2, inv3, n).trivial());
  // Z/4 with inversion: fixed points {0, 2}, N = 0, T - 1 = -2.
  const CoefficientModule inv4(group({4}), IntMatrix{{-1}});
  EXPECT_EQ(cyclic_cohomology(2, inv4, 0), group({2}));
  EXPECT_EQ(cyclic_cohomology(2, inv4, 1), group({2}));
  EXPECT_EQ(cyclic_cohomology(2, inv4, 2), group({2}));
  // Swap on Z/2 + Z/2 is the regular module: cohomologically trivial.
  const CoefficientModule swap(group({2, 2}), IntMatrix{{0, 1}, {1, 0}});
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_TRUE(cyclic_cohomology(2, swap, n).trivial());
  EXPECT_EQ(cyclic_cohomology(2, swap, 0), group({2}));
}

TEST(Cohomology, UnitsHaveClosedForm) {
  for (std::size_t m = 1; m <= 12; ++m) {
    EXPECT_TRUE(cyclic_cohomology_units(m, 4).trivial());
    EXPECT_TRUE(cyclic_cohomology_units(m, 2).trivial());
    EXPECT_EQ(cyclic_cohomology_units(m, 3).order(), m);
    EXPECT_EQ(cyclic_cohomology_units(m, 1).order(), m);
  }
  EXPECT_THROW(cyclic_cohomology_units(3, 0), std::invalid_argument);
}

TEST(Cohomology, AgreesWithBruteForce) {
  std::size_t checked = 0;
  for (std::size_t m = 1; m <= 4; ++m)
    for (const auto& c : coefficient_cases(m)) {
      const CoefficientModule coeff(c.a, c.t);
      for (std::size_t n = 0; n <= (m == 2 ? 3u : 2u); ++n) {
        EXPECT_EQ(cyclic_cohomology(m, coeff, n), brute_force_cohomology(m, coeff, n))
            << "m=" << m << " A=" << c.name << " n=" << n;
        ++checked;
      }
    }
  EXPECT_GE(checked, 40u);
}

TEST(Cohomology, LatticePathMatchesTrivialFastPath) {
  for (std::size_t m = 1; m <= 6; ++m)
    for (auto a : {group({2}), group({6}), group({2, 4}), group({3, 9})})
      for (std::size_t n = 0; n <= 4; ++n) {
        const CoefficientModule coeff(a);
        EXPECT_EQ(cyclic_cohomology(m, coeff, n), cyclic_cohomology_lattice(m, coeff, n));
      }
}

TEST(Cohomology, AnnihilationAndPeriodicity) {
  for (std::size_t m = 1; m <= 6; ++m)
    for (const auto& c : coefficient_cases(m)) {
      const CoefficientModule coeff(c.a, c.t);
      const Integer bound = gcd(Integer(m), c.a.order());
      Integer cap = 1;
      for (std::size_t i = 0; i < c.a.rank(); ++i) cap *= bound;
      for (std::size_t n = 1; n <= 4; ++n) {
        const auto h = cyclic_cohomology(m, coeff, n);
        EXPECT_EQ(cap % h.order(), 0) << c.name << " m=" << m << " n=" << n;
        EXPECT_EQ(h, cyclic_cohomology(m, coeff, n + 2));
        if (bound == 1) EXPECT_TRUE(h.trivial());
      }
    }
}

TEST(Cohomology, BruteForceRespectsCap) {
  EXPECT_THROW(brute_force_cohomology(4, CoefficientModule(group({4})), 3), std::invalid_argument);
  EXPECT_EQ(brute_force_cohomology(1, CoefficientModule(group({4})), 2), FiniteAbelianGroup());
}
