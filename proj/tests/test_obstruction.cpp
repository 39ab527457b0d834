#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace fusion;

namespace {

const Assumptions kPaperHypotheses{true, true, std::nullopt};

}  // namespace

TEST(Obstruction, TwoSupertransitiveGenerator) {
  for (std::size_t p = 1; p <= 7; ++p) EXPECT_EQ(two_supertransitive_generator(near_group_ring(p)), p);
  EXPECT_EQ(two_supertransitive_generator(fibonacci()), 1u);
  EXPECT_FALSE(two_supertransitive_generator(ising()));
  EXPECT_FALSE(two_supertransitive_generator(cyclic_group_ring(2)));
  EXPECT_FALSE(two_supertransitive_generator(cyclic_group_ring(1)));
}

TEST(Obstruction, CenterBounds) {
  const auto ng3 = center_bound(near_group_ring(3));
  EXPECT_TRUE(ng3.kernel_part.trivial());
  EXPECT_EQ(ng3.cokernel_order(), 3);
  EXPECT_EQ(ng3.order_bound, 3);
  EXPECT_FALSE(ng3.exact_order);

  const auto fib = center_bound(fibonacci());
  EXPECT_EQ(fib.order_bound, 1);
  EXPECT_EQ(fib.exact_order, Integer(1));

  // S3: characters Z/2; only the identity conjugates every element trivially.
  const auto s3 = center_bound(symmetric_group_ring());
  EXPECT_EQ(s3.kernel_part, FiniteAbelianGroup::cyclic(2));
  EXPECT_EQ(s3.cokernel_order(), 1);
  EXPECT_EQ(s3.order_bound, 2);

  const auto z4 = center_bound(cyclic_group_ring(4));
  EXPECT_EQ(z4.order_bound, 16);
}

TEST(Obstruction, NoInvertiblesMeansTrivialCenterGroup) {
  for (const auto& key : catalog_ring_instances()) {
    const auto ring = catalog_ring(key);
    if (two_supertransitive_generator(*ring) && invertibles(*ring).order() == 1)
      EXPECT_EQ(center_bound(*ring).exact_order, Integer(1)) << key;
  }
}

TEST(Obstruction, OddNearGroupsHaveTwoExtensions) {
  for (std::size_t p : {3u, 5u, 7u}) {
    const auto r = obstruction_report(near_group_ring(p), 2, kPaperHypotheses);
    EXPECT_EQ(r.o3_status, O3Status::vanishes_certified) << p;
    EXPECT_EQ(r.o4_status, O4Status::vanishes_certified) << p;
    ASSERT_TRUE(r.extension_count) << p;
    EXPECT_EQ(*r.extension_count, 2) << p;
    EXPECT_TRUE(r.offending_primes.empty());
  }
}

TEST(Obstruction, EvenNearGroupIsNotCertified) {
  const auto r = obstruction_report(near_group_ring(2), 2, kPaperHypotheses);
  EXPECT_EQ(r.o3_status, O3Status::group_possibly_nonzero);
  EXPECT_EQ(r.offending_primes, (std::vector<Integer>{2}));
  EXPECT_FALSE(r.extension_count);
  const auto r4 = obstruction_report(near_group_ring(4), 2, kPaperHypotheses);
  EXPECT_EQ(r4.o3_status, O3Status::group_possibly_nonzero);
}

TEST(Obstruction, GroupOrderCoprimeToBound) {
  const auto r = obstruction_report(near_group_ring(2), 3, kPaperHypotheses);
  EXPECT_EQ(r.o3_status, O3Status::vanishes_certified);
  EXPECT_EQ(*r.extension_count, 3);
}

TEST(Obstruction, AssumptionsAreEchoed) {
  const auto r = obstruction_report(near_group_ring(3), 2, {false, true, std::nullopt});
  EXPECT_FALSE(r.assumptions.self_dual);
  EXPECT_TRUE(r.assumptions.trivial_out);
  ASSERT_FALSE(r.narrative.empty());
  EXPECT_NE(r.narrative.front().find("self-dual=no"), std::string::npos);
}

TEST(Obstruction, MonotoneInEvidence) {
  for (const auto& key : catalog_ring_instances())
    for (std::size_t m = 1; m <= 6; ++m) {
      const auto ring = catalog_ring(key);
      const auto without = obstruction_report(*ring, m, kPaperHypotheses);
      const auto with = obstruction_report(*ring, m, {true, true, Integer(1)});
      if (without.o3_status == O3Status::vanishes_certified)
        EXPECT_EQ(with.o3_status, O3Status::vanishes_certified) << key << " m=" << m;
      EXPECT_EQ(with.o3_status, O3Status::vanishes_certified);
      EXPECT_EQ(with.o4_status, O4Status::vanishes_certified);
    }
}

TEST(Obstruction, CountForZ2IsAlwaysTwo) {
  for (const auto& key : catalog_ring_instances()) {
    const auto r = obstruction_report(*catalog_ring(key), 2, kPaperHypotheses);
    if (r.o3_status == O3Status::vanishes_certified && r.extension_count)
      EXPECT_EQ(*r.extension_count, 2) << key;
  }
}

TEST(Obstruction, RejectsTrivialGroupOrder) {
  EXPECT_THROW(obstruction_report(fibonacci(), 0, kPaperHypotheses), std::invalid_argument);
}
