// Copyright 2026 The SkewJoin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <gtest/gtest.h>

#include "skewjoin/costmodel.h"
#include "skewjoin/datagen.h"
#include "test_util.h"

namespace skewjoin {
namespace {

using testing::dataset_of;

TEST(RedistCost, Hash) {
  EXPECT_EQ(redist_cost_hash(90, 10, 5), 80.0);
  EXPECT_EQ(redist_cost_hash(60, 30, 3), 60.0);
  EXPECT_EQ(redist_cost_hash(12345, 0, 1), 0.0);
  EXPECT_EQ(redist_cost_hash(0, 0, 7), 0.0);
}

TEST(RedistCost, Local) {
  EXPECT_EQ(redist_cost_local(Side::kR, 10, 3), 20.0);
  EXPECT_EQ(redist_cost_local(Side::kS, 100, 4), 300.0);
  EXPECT_EQ(redist_cost_local(Side::kR, 99, 1), 0.0);
  EXPECT_EQ(redist_cost_local(Side::kS, 99, 1), 0.0);
}

TEST(RedistCost, Random) {
  EXPECT_EQ(redist_cost_random(Side::kR, 100, 10, 5), 120.0);
  EXPECT_EQ(redist_cost_random(Side::kS, 20, 50, 2), 45.0);
  EXPECT_EQ(redist_cost_random(Side::kR, 100, 10, 1), 0.0);
  EXPECT_EQ(redist_cost_random(Side::kS, 100, 10, 1), 0.0);
}

TEST(JoinCost, Hash) {
  EXPECT_EQ(join_cost_hash(3, 2), 11.0);
  EXPECT_EQ(join_cost_hash(0, 5), 5.0);
  EXPECT_EQ(join_cost_hash(1, 1), 3.0);
}

TEST(JoinCost, Local) {
  EXPECT_EQ(join_cost_local(Side::kR, 10, 4), 54.0);
  EXPECT_EQ(join_cost_local(Side::kS, 2, 7), 23.0);
  EXPECT_EQ(join_cost_local(Side::kR, 0, 17), 17.0);
}

TEST(JoinCost, Random) {
  EXPECT_EQ(join_cost_random(Side::kR, 100, 10, 5), 230.0);
  EXPECT_EQ(join_cost_random(Side::kS, 3, 6, 3), 11.0);
  for (auto [qr, qs] : {std::pair{3u, 2u}, std::pair{100u, 10u}, std::pair{0u, 9u}}) {
    EXPECT_EQ(join_cost_random(Side::kR, qr, qs, 1), join_cost_hash(qr, qs));
    EXPECT_EQ(join_cost_random(Side::kS, qr, qs, 1), join_cost_hash(qr, qs));
  }
}

struct Prepared {
  FrequencyMap fr, fs;
  SkewClassification cls;
  std::vector<NodeShare> r_shares, s_shares;
};

Prepared prepare(const Dataset& r, const Dataset& s, const PlacementSpec& placement, double p,
                 const std::set<Key>& skew = {}) {
  Prepared out;
  out.r_shares = place(r, placement, skew);
  out.s_shares = place(s, placement, skew);
  out.fr = build_frequency(out.r_shares);
  out.fs = build_frequency(out.s_shares);
  out.cls = classify(out.fr, out.fs, p);
  return out;
}

std::vector<Key> repeat_key(Key k, std::size_t n) { return std::vector<Key>(n, k); }

std::vector<Key> concat(std::initializer_list<std::vector<Key>> parts) {
  std::vector<Key> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

TEST(Estimate, GrahjSingleValue) {
  // x = 0 hashes to node 0; key 100 hashes to node 1 with 5 + 2 + 10 = 17 work.
  const Dataset r = dataset_of(concat({repeat_key(0, 60), repeat_key(100, 5)}));
  const Dataset s = dataset_of(concat({repeat_key(0, 30), repeat_key(100, 2)}));
  const auto w = prepare(r, s, PlacementSpec::balanced(3), 0.2);
  ASSERT_EQ(w.cls.complete_left, (std::set<Key>{0}));
  const ClusterSpec spec{3, 0, 0};
  const auto c = estimate(Strategy::kGraHJ, w.cls, w.fr, w.fs, spec, MergeMode::kLocalAggregate);
  EXPECT_DOUBLE_EQ(c.re, 60.0 + 7.0 * 2.0 / 3.0);
  EXPECT_EQ(c.comp, 1890.0);
  EXPECT_EQ(c.summ, 0.0);
  EXPECT_DOUBLE_EQ(c.total, c.re + c.comp);
}

TEST(Estimate, NoSkewMeansNoDifference) {
  const Dataset r = gen_zipf({200, 0.2, 4000, 1, 0});
  const Dataset s = gen_zipf({200, 0.2, 1000, 2, 0});
  const auto w = prepare(r, s, PlacementSpec::random(3, 5), 0.05);
  ASSERT_TRUE(w.cls.skewed().empty());
  const ClusterSpec spec{5, 1, 0};
  for (MergeMode m : {MergeMode::kGather, MergeMode::kLocalAggregate}) {
    const auto base = estimate(Strategy::kGraHJ, w.cls, w.fr, w.fs, spec, m);
    for (Strategy st : kAllStrategies) EXPECT_EQ(estimate(st, w.cls, w.fr, w.fs, spec, m), base);
  }
}

TEST(Estimate, LocalAggregateHasNoMergeCost) {
  const Dataset r = gen_zipf({50, 1.5, 5000, 1, 0});
  const Dataset s = gen_zipf({50, 1.2, 1000, 2, 0});
  const auto w = prepare(r, s, PlacementSpec::random(3, 6), 0.05);
  for (Strategy st : kAllStrategies) {
    EXPECT_EQ(estimate(st, w.cls, w.fr, w.fs, ClusterSpec{6, 0, 0}, MergeMode::kLocalAggregate).summ,
              0.0);
  }
}

TEST(Estimate, SingleNodeHasNoNetworkCost) {
  const Dataset r = gen_zipf({50, 1.5, 5000, 1, 0});
  const Dataset s = gen_zipf({50, 1.2, 1000, 2, 0});
  const auto w = prepare(r, s, PlacementSpec::balanced(1), 0.05);
  for (Strategy st : kAllStrategies) {
    const auto c = estimate(st, w.cls, w.fr, w.fs, ClusterSpec{1, 0, 0}, MergeMode::kGather);
    EXPECT_EQ(c.re, 0.0);
    EXPECT_EQ(c.summ, 0.0);
  }
}

TEST(Estimate, WeightsScalePhases) {
  const Dataset r = gen_zipf({50, 1.5, 5000, 1, 0});
  const Dataset s = gen_zipf({50, 1.2, 1000, 2, 0});
  const auto w = prepare(r, s, PlacementSpec::balanced(4), 0.05);
  const ClusterSpec spec{4, 0, 0};
  for (Strategy st : kAllStrategies) {
    const auto plain = estimate(st, w.cls, w.fr, w.fs, spec, MergeMode::kGather);
    const auto weighted = estimate(st, w.cls, w.fr, w.fs, spec, MergeMode::kGather, {2.0, 0.5, 3.0});
    EXPECT_DOUBLE_EQ(weighted.re, 2.0 * plain.re);
    EXPECT_DOUBLE_EQ(weighted.comp, 0.5 * plain.comp);
    EXPECT_DOUBLE_EQ(weighted.summ, 3.0 * plain.summ);
    EXPECT_DOUBLE_EQ(weighted.total, weighted.re + weighted.comp + weighted.summ);
  }
}

TEST(Estimate, RejectsMismatchedCluster) {
  const Dataset r = gen_zipf({5, 1.0, 50, 1, 0});
  const auto w = prepare(r, r, PlacementSpec::balanced(3), 0.05);
  EXPECT_THROW(estimate(Strategy::kPnR, w.cls, w.fr, w.fs, ClusterSpec{4, 0, 0}, MergeMode::kGather),
               std::invalid_argument);
}

// Every skewed count divisible by N^2 and spread evenly: the model has no
// rounding to absorb and must agree with the simulator exactly.
TEST(Estimate, AgreesWithMeasurementOnEvenWorkloads) {
  const std::uint32_t n = 4;
  std::vector<Key> rk = concat({repeat_key(1, 320), repeat_key(2, 16), repeat_key(3, 480),
                                repeat_key(4, 160)});
  for (Key k = 100; k < 139; ++k) rk.insert(rk.end(), 16, k);
  std::vector<Key> sk = concat({repeat_key(1, 16), repeat_key(2, 160), repeat_key(3, 160),
                                repeat_key(4, 320)});
  for (Key k = 100; k < 109; ++k) sk.insert(sk.end(), 16, k);
  const Dataset r = dataset_of(rk), s = dataset_of(sk);
  const auto w = prepare(r, s, PlacementSpec::balanced(n), 0.1, {1, 2, 3, 4});
  ASSERT_EQ(w.cls.partial_R, (std::set<Key>{1}));
  ASSERT_EQ(w.cls.partial_S, (std::set<Key>{2}));
  ASSERT_EQ(w.cls.complete_left, (std::set<Key>{3}));
  ASSERT_EQ(w.cls.complete_right, (std::set<Key>{4}));

  for (NodeId gw = 0; gw < n; ++gw) {
    const ClusterSpec spec{n, gw, 1};
    const auto base = non_skew_baseline(w.cls, w.fr, w.fs, spec);
    for (Strategy st : kAllStrategies) {
      const auto c = estimate(st, w.cls, w.fr, w.fs, spec, base, MergeMode::kGather);
      const auto ex = execute(w.r_shares, w.s_shares, plan_for(st, w.cls, n), w.cls, spec,
                              {MergeMode::kGather, false, 1});
      EXPECT_EQ(c.re - base.re, static_cast<double>(ex.metrics.skewed_cross_node_tuples))
          << to_string(st);
      EXPECT_EQ(c.comp, static_cast<double>(ex.max_node_load)) << to_string(st);
      EXPECT_EQ(c.summ, static_cast<double>(ex.merge_traffic)) << to_string(st);
    }
  }
}

}  // namespace
}  // namespace skewjoin
