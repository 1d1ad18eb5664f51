#include <algorithm>
#include <set>
#include <thread>

#include <gtest/gtest.h>

#include "nckit/nc_table.hpp"
#include "nckit/oracle.hpp"
#include "nckit/parity.hpp"
#include "nckit/partitions.hpp"
#include "support.hpp"

using namespace nckit;
using test::one;
using test::P;
using test::zero;

TEST(Partition, CanonicalFormAndText) {
  const Partition p = P(4, {{3, 2}, {4, 1}});
  EXPECT_EQ(p.to_string(), "[[1,4],[2,3]]");
  EXPECT_EQ(p, P(4, {{1, 4}, {2, 3}}));
  EXPECT_EQ(Partition::from_labels(p.labels()), p);
  EXPECT_EQ(p.block_count(), 2);
  EXPECT_EQ(p.block_of(4), p.block_of(1));
}

TEST(Partition, RejectsInvalidBlocks) {
  EXPECT_THROW(P(3, {{1, 2}}), domain_error);
  EXPECT_THROW(P(3, {{1, 2}, {2, 3}}), domain_error);
  EXPECT_THROW(P(3, {{1, 2}, {3, 4}}), domain_error);
  EXPECT_THROW(P(2, {{1, 2}, {}}), domain_error);
  EXPECT_THROW(Partition::finest(0), domain_error);
}

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation({1, 1}), domain_error);
  EXPECT_THROW(Permutation({0, 1}), domain_error);
  const Permutation c = Permutation::full_cycle(4);
  EXPECT_EQ(c * c.inverse(), Permutation::identity(4));
}

TEST(AllPartitions, BellNumbers) {
  EXPECT_EQ(all_partitions(1), std::vector<Partition>{one(1)});
  EXPECT_EQ(all_partitions(3).size(), 5u);
  EXPECT_EQ(all_partitions(4).size(), 15u);
  const auto six = all_partitions(6);
  EXPECT_EQ(six.size(), 203u);
  EXPECT_EQ(std::set<Partition>(six.begin(), six.end()).size(), six.size());
  EXPECT_THROW(all_partitions(0), size_error);
  EXPECT_THROW(all_partitions(13), size_error);
}

TEST(IsNoncrossing, Examples) {
  EXPECT_FALSE(is_noncrossing(P(4, {{1, 3}, {2, 4}})));
  EXPECT_TRUE(is_noncrossing(one(6)));
  EXPECT_TRUE(is_noncrossing(P(4, {{1, 4}, {2, 3}})));
  EXPECT_FALSE(is_noncrossing(P(6, {{1, 5}, {2, 6}, {3}, {4}})));
}

TEST(EnumerateNc, CountsAndOrder) {
  EXPECT_EQ(enumerate_nc(2), (std::vector<Partition>{zero(2), one(2)}));
  EXPECT_EQ(enumerate_nc(3).size(), 5u);
  EXPECT_EQ(enumerate_nc(10).size(), 16796u);
  for (int n = 1; n <= 8; ++n) {
    const auto nc = enumerate_nc(n);
    EXPECT_TRUE(std::is_sorted(nc.begin(), nc.end()));
    EXPECT_TRUE(std::adjacent_find(nc.begin(), nc.end()) == nc.end());
    EXPECT_TRUE(std::all_of(nc.begin(), nc.end(), [](const Partition& p) { return is_noncrossing(p); }));
  }
  EXPECT_THROW(enumerate_nc(15), size_error);
}

TEST(EnumerateInterval, Counts) {
  EXPECT_EQ(enumerate_interval(1), std::vector<Partition>{one(1)});
  EXPECT_EQ(enumerate_interval(3).size(), 4u);
  EXPECT_EQ(enumerate_interval(5).size(), 16u);
  for (const Partition& p : enumerate_interval(7)) EXPECT_TRUE(is_interval(p));
  EXPECT_THROW(enumerate_interval(21), size_error);
}

TEST(Refines, Examples) {
  EXPECT_TRUE(refines(zero(4), P(4, {{1, 4}, {2, 3}})));
  EXPECT_FALSE(refines(P(4, {{1, 2}, {3, 4}}), P(4, {{1, 4}, {2, 3}})));
  EXPECT_TRUE(refines(P(3, {{1}, {2, 3}}), one(3)));
  EXPECT_THROW(refines(zero(3), zero(4)), domain_error);
}

TEST(Ll, Examples) {
  EXPECT_TRUE(ll(P(3, {{1, 3}, {2}}), one(3)));
  EXPECT_FALSE(ll(P(3, {{1, 2}, {3}}), one(3)));
  EXPECT_TRUE(ll(zero(4), zero(4)));
  for (const Partition& p : enumerate_nc(4)) {
    if (p != zero(4)) { EXPECT_FALSE(ll(p, zero(4))) << p.to_string(); }
  }
  EXPECT_THROW(ll(zero(3), zero(4)), domain_error);
}

TEST(PermutationOf, Examples) {
  EXPECT_EQ(permutation_of(one(3)), Permutation({2, 3, 1}));
  EXPECT_EQ(permutation_of(zero(5)), Permutation::identity(5));
  EXPECT_EQ(permutation_of(P(3, {{1}, {2, 3}})), Permutation({1, 3, 2}));
}

TEST(PartitionOfCycles, Examples) {
  EXPECT_EQ(partition_of_cycles(Permutation::identity(4)), zero(4));
  EXPECT_EQ(partition_of_cycles(Permutation({2, 3, 1})), one(3));
  EXPECT_EQ(partition_of_cycles(Permutation({3, 2, 1})), P(3, {{1, 3}, {2}}));
  // 1 -> 3 -> 2 -> 1 is not increasing-then-wrap
  EXPECT_FALSE(partition_of_cycles(Permutation({3, 1, 2})).has_value());
  // (1 3)(2 4) has valid cycles but crosses
  EXPECT_FALSE(partition_of_cycles(Permutation({3, 4, 1, 2})).has_value());
  for (const Partition& p : enumerate_nc(6)) EXPECT_EQ(partition_of_cycles(permutation_of(p)), p);
}

TEST(Kreweras, Examples) {
  EXPECT_EQ(kreweras(one(5)), zero(5));
  EXPECT_EQ(kreweras(zero(5)), one(5));
  EXPECT_EQ(kreweras(P(3, {{1}, {2, 3}})), P(3, {{1, 3}, {2}}));
  EXPECT_EQ(kreweras(P(3, {{1, 2}, {3}})), P(3, {{1}, {2, 3}}));
  EXPECT_THROW(kreweras(P(4, {{1, 3}, {2, 4}})), domain_error);
}

TEST(Kreweras, BlockCountAndBijection) {
  for (int n = 1; n <= 8; ++n) {
    std::set<Partition> images;
    for (const Partition& p : enumerate_nc(n)) {
      const Partition k = kreweras(p);
      EXPECT_EQ(p.block_count() + k.block_count(), n + 1);
      images.insert(k);
    }
    EXPECT_EQ(images.size(), enumerate_nc(n).size());
  }
}

TEST(Kreweras, OrderReversingAndMaximal) {
  const auto nc = enumerate_nc(6);
  for (const Partition& p : nc) {
    const Partition kp = kreweras(p);
    for (const Partition& q : nc) {
      if (refines(p, q)) { EXPECT_TRUE(refines(kreweras(q), kp)); }
      EXPECT_EQ(is_noncrossing(parity_join(p, q)), refines(q, kp)) << p.to_string() << " " << q.to_string();
    }
  }
}

TEST(RelativeKreweras, Examples) {
  for (const Partition& p : enumerate_nc(5)) {
    EXPECT_EQ(relative_kreweras(p, one(5)), kreweras(p));
    EXPECT_EQ(relative_kreweras(p, p), zero(5));
    EXPECT_EQ(relative_kreweras(zero(5), p), p);
  }
  EXPECT_THROW(relative_kreweras(one(3), zero(3)), domain_error);
  EXPECT_THROW(relative_kreweras(zero(4), P(4, {{1, 3}, {2, 4}})), domain_error);
}

TEST(RelativeKreweras, MonotoneInSecondArgument) {
  const auto nc = enumerate_nc(6);
  for (const Partition& p : nc) {
    for (const Partition& r1 : nc) {
      if (!refines(p, r1)) continue;
      const Partition k1 = relative_kreweras(p, r1);
      EXPECT_TRUE(refines(k1, r1));
      for (const Partition& r2 : nc) {
        if (refines(r1, r2)) { EXPECT_TRUE(refines(k1, relative_kreweras(p, r2))); }
      }
    }
  }
}

TEST(OuterProfile, Examples) {
  EXPECT_EQ(outer_profile(one(4)).count, 1);
  const OuterProfile nested = outer_profile(P(4, {{1, 4}, {2, 3}}));
  EXPECT_EQ(nested.count, 1);
  EXPECT_EQ(nested.outer_blocks, std::vector<int>{0});
  EXPECT_EQ(outer_profile(P(4, {{1, 2}, {3, 4}})).count, 2);
  EXPECT_THROW(outer_profile(P(4, {{1, 3}, {2, 4}})), domain_error);
}

TEST(OuterProfile, ConsecutiveCover) {
  // outer blocks tile {1..n}: each starts right after the previous one ends
  for (const Partition& p : enumerate_nc(7)) {
    const OuterProfile o = outer_profile(p);
    ASSERT_GE(o.count, 1);
    EXPECT_EQ(o.outer_blocks.front(), p.block_of(1));
    int next = 1;
    for (int idx : o.outer_blocks) {
      const Block b = p.block(idx);
      EXPECT_EQ(b.front(), next);
      next = b.back() + 1;
    }
    EXPECT_EQ(next, p.size() + 1);
  }
}

TEST(Embraces, Examples) {
  const Block a{1, 4}, b{2, 3}, c{1, 2}, d{3, 4};
  EXPECT_TRUE(embraces(a, b));
  EXPECT_TRUE(embraces(b, b));
  EXPECT_FALSE(embraces(c, d));
}

TEST(Embraces, InterleavingCharacterization) {
  for (int n = 1; n <= 8; ++n) {
    for (const Partition& p : enumerate_nc(n)) {
      const auto bs = p.blocks();
      for (std::size_t i = 0; i < bs.size(); ++i) {
        for (std::size_t j = 0; j < bs.size(); ++j) {
          if (i == j) continue;
          bool witnessed = false;
          for (int b : bs[j]) witnessed = witnessed || (bs[i].front() < b && b < bs[i].back());
          EXPECT_EQ(embraces(bs[i], bs[j]), witnessed);
        }
      }
    }
  }
}

TEST(LlOrder, PreservesOuterCount) {
  const auto nc = enumerate_nc(7);
  for (const Partition& p : nc) {
    for (const Partition& q : nc) {
      if (ll(p, q)) { EXPECT_EQ(outer_profile(p).count, outer_profile(q).count); }
    }
  }
}

TEST(CountCoarserLl, Examples) {
  const Partition nested = P(4, {{1, 4}, {2, 3}});
  EXPECT_EQ(count_coarser_ll(nested, 1), 1u);
  EXPECT_EQ(count_coarser_ll(nested, 2), 1u);
  EXPECT_EQ(count_coarser_ll(P(4, {{1, 2}, {3, 4}}), 1), 0u);
  EXPECT_EQ(count_coarser_ll(nested, 3), 0u);
}

TEST(CountCoarserLl, Totals) {
  EXPECT_EQ(count_coarser_ll_total(one(5)), 1u);
  EXPECT_EQ(count_coarser_ll_total(P(4, {{1, 4}, {2, 3}})), 2u);
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(count_coarser_ll_total(zero(n)), 1u);
  for (const Partition& p : enumerate_nc(7)) {
    std::uint64_t sum = 0;
    for (int size = 1; size <= 7; ++size) sum += count_coarser_ll(p, size);
    EXPECT_EQ(sum, count_coarser_ll_total(p));
  }
}

TEST(MinMaxSplit, IsTheLeastLlPartner) {
  for (const Partition& q : enumerate_nc(6)) {
    const Partition q0 = min_max_split(q);
    EXPECT_TRUE(ll(q0, q));
    for (const Partition& p : enumerate_nc(6)) {
      EXPECT_EQ(ll(p, q), refines(q0, p) && refines(p, q));
    }
  }
}

TEST(NcTable, ConcurrentFirstUseIsConsistent) {
  std::vector<const std::vector<NcEntry>*> seen(8, nullptr);
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&, i] { seen[i] = &nc_table(9); });
  }
  for (auto& t : threads) t.join();
  for (const auto* s : seen) EXPECT_EQ(s, seen.front());
  ASSERT_EQ(seen.front()->size(), 4862u);
  for (const NcEntry& e : *seen.front()) {
    EXPECT_EQ(e.kreweras, kreweras(e.partition));
    EXPECT_EQ(e.below_top_ll, ll(e.partition, one(9)));
  }
}
