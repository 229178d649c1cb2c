#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "wreathchar/abacus.hpp"
#include "wreathchar/tableaux.hpp"

using namespace wreathchar;

TEST(Tableaux, StraightExamples) {
  auto ts = enumerate_bst(Partition({1}), Composition({1}));
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_EQ(ts[0].total_height(), 0);

  ts = enumerate_bst(Partition({2, 1}), Composition({3}));
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_EQ(ts[0].total_height(), 1);

  // chi_(2,2) at (2,2) is 2 by the Frobenius formula
  ts = enumerate_bst(Partition({2, 2}), Composition({2, 2}));
  long long s = 0;
  for (const auto& t : ts) s += t.total_height() % 2 == 0 ? 1 : -1;
  EXPECT_EQ(Integer(s), oracle::frobenius_chi({2, 2}, {2, 2}));
  EXPECT_EQ(s, 2);

  EXPECT_EQ(count_bst(Partition({4}), Composition({4})), 1u);
  EXPECT_EQ(signed_sum(Partition({4}), Composition({4})), 1);
  EXPECT_EQ(count_bst(Partition({2, 1}), Composition({1, 1, 1})), 2u);
  EXPECT_EQ(Integer(count_bst(Partition({2, 1}), Composition({1, 1, 1}))), oracle::syt_count({2, 1}));
}

TEST(Tableaux, EmptyShapeHasOneTableau) {
  BorderStripStream s(Partition{}, Composition{});
  EXPECT_TRUE(s.next());
  EXPECT_TRUE(s.current().steps.empty());
  EXPECT_FALSE(s.next());
}

TEST(Tableaux, SizeMismatchThrows) {
  EXPECT_THROW(enumerate_bst(Partition({2, 1}), Composition({2})), InvalidInput);
  EXPECT_THROW(count_bst(Partition({2}), Composition({1})), InvalidInput);
}

TEST(Tableaux, MultipartiteExamples) {
  const RPartitePartition a{Partition{1}, Partition{}};
  auto ts = enumerate_bst_rpartite(a, Composition({1}));
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_EQ(ts[0].steps[0].component, 0);
  EXPECT_EQ(ts[0].total_height(), 0);

  const RPartitePartition b{Partition{1}, Partition{1}};
  EXPECT_TRUE(enumerate_bst_rpartite(b, Composition({2})).empty());
  EXPECT_EQ(count_bst(b, Composition({1, 1})), 2u);
}

TEST(Tableaux, FourComponentExample) {
  const auto shape = parse_rpartite("[2,1|1,1,1|2,2|2]");
  const Composition mu{2, 3, 3, 2, 2};
  bool found = false;
  for (const auto& t : enumerate_bst_rpartite(shape, mu)) {
    std::vector<int> f, h;
    for (const auto& s : t.steps) {
      f.push_back(s.component);
      h.push_back(s.height);
    }
    if (f == std::vector<int>{2, 1, 0, 2, 3} && h == std::vector<int>{1, 2, 1, 1, 0}) {
      found = true;
      EXPECT_EQ(t.total_height(), 5);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Tableaux, StreamIsCompleteAndDuplicateFree) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      for (const auto& mu : enumerate_partitions(n)) {
        auto ts = enumerate_bst(lambda, mu);
        std::set<std::vector<std::pair<int, int>>> fillings;
        for (const auto& t : ts) {
          // encode the filling cell -> entry
          std::vector<std::pair<int, int>> cells;
          for (std::size_t i = 0; i < t.steps.size(); ++i) {
            EXPECT_EQ(static_cast<int>(t.steps[i].cells.size()), mu[i]);
            for (const auto& c : t.steps[i].cells) cells.emplace_back(c.row * 100 + c.col, static_cast<int>(i));
          }
          std::sort(cells.begin(), cells.end());
          EXPECT_EQ(static_cast<int>(cells.size()), n);
          fillings.insert(cells);
        }
        EXPECT_EQ(fillings.size(), ts.size());
        const auto [count, sum] = oracle::bst(lambda.parts(), mu.parts());
        EXPECT_EQ(Integer(ts.size()), count) << lambda << " " << mu;
        EXPECT_EQ(Integer(count_bst(lambda, mu)), count);
        EXPECT_EQ(Integer(signed_sum(lambda, mu)), sum);
      }
}

TEST(Tableaux, CompositionOrderDoesNotChangeSignedSum) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      for (const auto& mu : enumerate_partitions(n)) {
        std::vector<int> perm = mu.parts();
        std::reverse(perm.begin(), perm.end());
        EXPECT_EQ(signed_sum(lambda, mu), signed_sum(lambda, Composition(perm)));
      }
}

TEST(Tableaux, EtaPeelingCountIsWreathDegree) {
  for (int r = 2; r <= 3; ++r)
    for (int n = 1; r * n <= 10; ++n)
      for (const auto& lambda : enumerate_partitions(r * n)) {
        if (!r_core(lambda, r).empty()) continue;
        const auto q = r_quotient(lambda, r);
        Integer deg = factorial(n);
        for (const auto& c : q.components()) deg = deg / factorial(c.size()) * oracle::syt_count(c.parts());
        EXPECT_EQ(Integer(count_bst(lambda, Composition(std::vector<int>(static_cast<std::size_t>(n), r)))), deg);
      }
}
