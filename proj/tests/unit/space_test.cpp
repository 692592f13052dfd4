#include <gtest/gtest.h>

#include <map>
#include <random>

#include "delkit/embed.hpp"
#include "delkit/entropy.hpp"
#include "delkit/error.hpp"
#include "delkit/oracle.hpp"
#include "delkit/space.hpp"
#include "generators.hpp"
#include "golden.hpp"

namespace delkit {
namespace {

BitString bs(const char* s) { return BitString::parse(s); }

TEST(Upsilon, Size) {
  EXPECT_EQ(upsilon_size(5, 3), 16);
  EXPECT_EQ(upsilon_size(7, 7), 1);
  EXPECT_EQ(upsilon_size(9, 0), 512);
  EXPECT_THROW((void)upsilon_size(3, 4), InvalidArgument);
}

TEST(Supersequences, Listing) {
  const auto list = enumerate_supersequences(5, bs("110"));
  ASSERT_EQ(list.size(), 16U);
  std::map<std::string, std::uint64_t> weights;
  for (const auto& s : list) weights[s.y.str()] = s.weight;
  EXPECT_EQ(weights.at("11100"), 6U);
  EXPECT_EQ(weights.at("11010"), 4U);
  EXPECT_EQ(enumerate_supersequences(5, bs("101")).size(), 16U);

  const auto trivial = enumerate_supersequences(3, bs("110"));
  ASSERT_EQ(trivial.size(), 1U);
  EXPECT_EQ(trivial[0].y.str(), "110");
  EXPECT_EQ(trivial[0].weight, 1U);
}

TEST(Supersequences, GoldenRowsAndMissingRows) {
  for (const auto& table : testing::golden_tables()) {
    const BitString x = bs(table.x);
    std::map<std::string, Supersequence> by_y;
    for (const auto& s : enumerate_supersequences(5, x)) by_y.emplace(s.y.str(), s);
    for (const auto& row : table.rows) {
      ASSERT_TRUE(by_y.contains(row.y)) << row.y;
      EXPECT_EQ(by_y.at(row.y).weight, row.weight) << row.y;
      EXPECT_EQ(hamming_weight(bs(row.y)) - hamming_weight(x), row.cluster) << row.y;
    }
    // The listing has 15 rows; the 16th comes from enumeration.
    EXPECT_EQ(by_y.size(), table.rows.size() + 1);
  }
  for (const auto& missing : testing::kMissingRows) {
    EXPECT_EQ(count_embeddings_dp(bs(missing.y), bs(missing.x)), missing.weight);
  }
}

TEST(Supersequences, LexicographicAndBudgeted) {
  const auto list = enumerate_supersequences(7, bs("0110"));
  for (std::size_t i = 1; i < list.size(); ++i) ASSERT_LT(list[i - 1].y, list[i].y);
  EnumerationBudget tight;
  tight.max_n = 6;
  EXPECT_THROW((void)enumerate_supersequences(7, bs("0110"), tight), BudgetExceeded);
}

TEST(Clusters, ClosedForm) {
  EXPECT_EQ(cluster_size_closed(5, 3, 2, 0), 6);
  EXPECT_EQ(cluster_size_closed(5, 3, 2, 1), 7);
  EXPECT_EQ(cluster_size_closed(5, 3, 2, 2), 3);
  for (std::size_t c = 0; c <= 2; ++c) EXPECT_EQ(cluster_size_closed(5, 3, 0, c), binomial(5, c));
  EXPECT_THROW((void)cluster_size_closed(5, 3, 2, 3), InvalidArgument);
  EXPECT_THROW((void)cluster_size_closed(5, 3, 4, 0), InvalidArgument);
}

TEST(Clusters, SimpleForm) {
  EXPECT_EQ(cluster_size_simple(5, 3, 2, 1), 7);
  EXPECT_EQ(cluster_size_simple(5, 3, 3, 0), 10);
  for (std::size_t c = 0; c <= 2; ++c) EXPECT_EQ(cluster_size_simple(5, 3, 0, c), binomial(5, c));
}

TEST(Clusters, Recurrence) {
  EXPECT_EQ(cluster_size_recursive(5, bs("110"), 1), 7);
  EXPECT_EQ(cluster_size_recursive(5, bs("110"), 3), 0);
  for (std::size_t c = 0; c <= 6; ++c) EXPECT_EQ(cluster_size_recursive(6, bs(""), c), binomial(6, c));
}

TEST(Clusters, ThreeRoutesAgree) {
  for (std::size_t n = 0; n <= 14; ++n) {
    for (std::size_t m = 0; m <= std::min<std::size_t>(n, 7); ++m) {
      testing::for_each_string(m, [&](const BitString& x) {
        const std::size_t h = hamming_weight(x);
        for (std::size_t c = 0; c <= n - m; ++c) {
          const ExactCount closed = cluster_size_closed(n, m, h, c);
          ASSERT_EQ(cluster_size_simple(n, m, h, c), closed) << n << ' ' << x.str() << ' ' << c;
          ASSERT_EQ(cluster_size_recursive(n, x, c), closed) << n << ' ' << x.str() << ' ' << c;
        }
      });
    }
  }
}

TEST(Clusters, MatchOracleAndPartitionUpsilon) {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::size_t m = 0; m <= std::min<std::size_t>(n, 5); ++m) {
      testing::for_each_string(m, [&](const BitString& x) {
        const auto space = oracle::oracle_space(n, x);
        ExactCount total = 0;
        for (std::size_t c = 0; c <= n - m; ++c) {
          ExactCount seen = 0;
          if (auto it = space.distribution.by_cluster.find(c); it != space.distribution.by_cluster.end()) {
            for (const auto& [w, count] : it->second) seen += count;
          }
          const ExactCount closed = cluster_size_closed(n, m, hamming_weight(x), c);
          ASSERT_EQ(closed, seen) << n << ' ' << x.str() << ' ' << c;
          total += closed;
        }
        ASSERT_EQ(total, upsilon_size(n, m));
      });
    }
  }
}

TEST(Initials, KnownExamples) {
  EXPECT_EQ(initial_mask(bs("110011"), bs("1011"))->str(), "{1, 3, 5, 6}");
  EXPECT_EQ(initial_mask(bs("101011"), bs("1011"))->str(), "{1, 2, 3, 5}");
  EXPECT_FALSE(initial_mask(bs("000"), bs("1")).has_value());
  EXPECT_TRUE(is_maximal_initial(bs("110011"), bs("1011")));
  EXPECT_FALSE(is_maximal_initial(bs("101011"), bs("1011")));
  EXPECT_TRUE(is_maximal_initial(bs("0110"), bs("0110")));
  EXPECT_FALSE(is_maximal_initial(bs("0110"), bs("")));
}

TEST(Initials, GoldenRows) {
  for (const auto& table : testing::golden_tables()) {
    const BitString x = bs(table.x);
    std::map<std::size_t, std::size_t> maximal_per_cluster;
    for (const auto& row : table.rows) {
      const BitString y = bs(row.y);
      EXPECT_EQ(initial_mask(y, x)->str(), testing::mask_text(row.initial)) << row.y;
      EXPECT_EQ(is_maximal_initial(y, x), row.maximal) << row.y;
      if (row.maximal) ++maximal_per_cluster[row.cluster];
    }
    EXPECT_EQ(maximal_per_cluster, (std::map<std::size_t, std::size_t>{{0, 3}, {1, 2}, {2, 1}}));
  }
}

TEST(Initials, Counts) {
  EXPECT_EQ(maximal_initials_total(5, 3), 6);
  EXPECT_EQ(maximal_initials_total(6, 6), 1);
  EXPECT_EQ(maximal_initials_total(6, 1), 1);
  EXPECT_EQ(maximal_initials_cluster(5, 3, 2, 0), 3);
  EXPECT_EQ(maximal_initials_cluster(5, 3, 2, 1), 2);
  EXPECT_EQ(maximal_initials_cluster(5, 3, 2, 2), 1);
  EXPECT_THROW((void)maximal_initials_total(5, 0), InvalidArgument);
}

TEST(Initials, MatchEnumeration) {
  for (std::size_t n = 1; n <= 11; ++n) {
    for (std::size_t m = 1; m <= std::min<std::size_t>(n, 5); ++m) {
      testing::for_each_string(m, [&](const BitString& x) {
        const std::size_t h = hamming_weight(x);
        std::map<std::size_t, ExactCount> per_cluster;
        ExactCount total = 0;
        for_each_supersequence(n, x, [&](const BitString& y, std::uint64_t) {
          const auto mask = initial_mask(y, x);
          ASSERT_TRUE(mask.has_value());
          ASSERT_EQ(mask->apply(y), x);
          if (is_maximal_initial(y, x)) {
            ++total;
            ++per_cluster[hamming_weight(y) - h];
          }
        });
        ASSERT_EQ(total, maximal_initials_total(n, m)) << n << ' ' << x.str();
        ExactCount sum = 0;
        for (std::size_t c = 0; c <= n - m; ++c) {
          ASSERT_EQ(per_cluster[c], maximal_initials_cluster(n, m, h, c)) << n << ' ' << x.str();
          sum += maximal_initials_cluster(n, m, h, c);
        }
        ASSERT_EQ(sum, maximal_initials_total(n, m));
      });
    }
  }
}

TEST(Initials, InitialMaskIsFirstEnumeratedMask) {
  std::mt19937_64 rng(testing::kSeed + 20);
  for (int i = 0; i < 500; ++i) {
    const BitString y = testing::random_bits(rng, 0, 14);
    const BitString x = testing::random_subsequence(rng, y);
    ASSERT_EQ(*initial_mask(y, x), enumerate_masks(y, x).front());
  }
}

TEST(Singletons, RunSlots) {
  EXPECT_EQ(run_slots(bs("110")), (RunSlots{1, 2}));
  EXPECT_EQ(run_slots(bs("101")), (RunSlots{0, 2}));
  EXPECT_EQ(run_slots(bs("1111")), (RunSlots{0, 5}));
  EXPECT_EQ(run_slots(bs("0")), (RunSlots{2, 0}));
  EXPECT_THROW((void)run_slots(bs("")), InvalidArgument);
}

TEST(Singletons, Counts) {
  EXPECT_EQ(singleton_count(5, bs("110")), 6);
  EXPECT_EQ(singleton_count(5, bs("101")), 3);
  EXPECT_EQ(singleton_count(4, bs("")), 16);
  for (std::size_t m = 1; m <= 6; ++m) {
    for (std::size_t n = m; n <= 12; ++n) {
      EXPECT_EQ(singleton_count(n, BitString::constant(m, 1)),
                binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(n - m)));
    }
  }
}

TEST(Singletons, Listing) {
  std::vector<std::string> ys;
  for (const BitString& y : enumerate_singletons(5, bs("101"))) ys.push_back(y.str());
  EXPECT_EQ(ys, (std::vector<std::string>{"00101", "01010", "10100"}));
  EXPECT_EQ(enumerate_singletons(4, bs("0110")), std::vector<BitString>{bs("0110")});
  const auto s110 = enumerate_singletons(5, bs("110"));
  EXPECT_EQ(s110.size(), 6U);
  EXPECT_NE(std::find(s110.begin(), s110.end(), bs("00110")), s110.end());
  EXPECT_NE(std::find(s110.begin(), s110.end(), bs("11011")), s110.end());
}

TEST(Singletons, ClosedFormMatchesOracle) {
  for (std::size_t m = 1; m <= 6; ++m) {
    testing::for_each_string(m, [&](const BitString& x) {
      for (std::size_t n = m; n <= 12; ++n) {
        const auto space = oracle::oracle_space(n, x);
        const auto& counts = space.distribution.counts;
        const ExactCount seen = counts.contains(1) ? ExactCount(counts.at(1)) : ExactCount(0);
        ASSERT_EQ(singleton_count(n, x), seen) << n << ' ' << x.str();
        ASSERT_EQ(singleton_count_by_cluster(n, x), seen) << n << ' ' << x.str();
      }
    });
  }
}

TEST(Singletons, SlotsAreBoundedByLength) {
  std::mt19937_64 rng(testing::kSeed + 21);
  for (int i = 0; i < 1000; ++i) {
    const BitString x = testing::random_bits(rng, 1, 40);
    const RunSlots s = run_slots(x);
    ASSERT_LE(s.rho0, x.size() + 1);
    ASSERT_LE(s.rho1, x.size() + 1);
    const RunSlots flipped = run_slots(complement(x));
    ASSERT_EQ(flipped.rho0, s.rho1);
    ASSERT_EQ(flipped.rho1, s.rho0);
  }
}

TEST(Singletons, ConstantStringsMaximiseAlternatingMinimise) {
  for (std::size_t m = 2; m <= 9; ++m) {
    for (std::size_t n = m + 1; n <= 13; ++n) {
      ExactCount best = -1;
      ExactCount worst = -1;
      std::vector<BitString> argmax;
      std::vector<BitString> argmin;
      testing::for_each_string(m, [&](const BitString& x) {
        const ExactCount s = singleton_count(n, x);
        if (best < 0 || s > best) {
          best = s;
          argmax.clear();
        }
        if (s == best) argmax.push_back(x);
        if (worst < 0 || s < worst) {
          worst = s;
          argmin.clear();
        }
        if (s == worst) argmin.push_back(x);
      });
      EXPECT_EQ(argmax, (std::vector<BitString>{BitString::constant(m, 0), BitString::constant(m, 1)}));
      EXPECT_EQ(argmin, (std::vector<BitString>{BitString::alternating(m, 0), BitString::alternating(m, 1)}));
    }
  }
}

}  // namespace
}  // namespace delkit
