/* Copyright 2026 The hodp Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <gtest/gtest.h>

#include "hodp/dependency_pairs.hpp"
#include "hodp/parser.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

namespace hodp {
namespace {

using testing::L;
using testing::N;
using testing::NN;

std::set<Position> P(std::initializer_list<const char*> ps) {
  std::set<Position> out;
  for (const char* p : ps) out.insert(Position::parse(p));
  return out;
}

class DpTest : public ::testing::Test {
 protected:
  RewriteSystem map = parse_system(testing::kMapSystem);
  RewriteSystem lim = parse_system(testing::kLimSystem);
  std::map<std::string, Type> vars{{"F", NN()}, {"G", NN()}, {"X", N()}, {"L", L()}};
  Term m(const std::string& s) { return testing::term(map, s, vars); }
};

TEST_F(DpTest, Fap) {
  EXPECT_EQ(fap(m("cons (F X) (map F L)"), map.signature), P({"2"}));
  EXPECT_EQ(fap(m("map F (map G L)"), map.signature), P({"", "2"}));
  EXPECT_TRUE(fap(m("X"), map.signature).empty());
  EXPECT_TRUE(fap(m("nil"), map.signature).empty());
  Term r = testing::term(lim, "lim (\\n. plus (F n) X)", {{"F", NN()}, {"X", N()}});
  EXPECT_EQ(fap(r, lim.signature), P({"2.1"}));
  // A partial application of a defined symbol is still a spine root.
  EXPECT_EQ(fap(m("map F"), map.signature), P({""}));
}

TEST_F(DpTest, Level) {
  EXPECT_EQ(level(m("X"), map.signature), 0);
  EXPECT_EQ(level(m("map F L"), map.signature), 1);
  EXPECT_EQ(level(m("map F (map G L)"), map.signature), 2);
  EXPECT_EQ(level(m("cons (F X) (map F L)"), map.signature), 1);
  RewriteSystem c = parse_system("sort A\na : A\nb : A\nrule a -> b\n");
  EXPECT_EQ(level(testing::term(c, "a"), c.signature), 1);
  EXPECT_EQ(fap(testing::term(c, "a"), c.signature), P({""}));
}

TEST_F(DpTest, ExtractMap) {
  auto dps = extract_dps(map.rules, map.signature);
  ASSERT_EQ(dps.size(), 1u);
  EXPECT_EQ(dps[0].id, 1);
  EXPECT_EQ(dps[0].rule_id, 2);
  EXPECT_EQ(dps[0].position, Position({2}));
  EXPECT_TRUE(alpha_eq(dps[0].lhs, m("map F (cons X L)")));
  EXPECT_TRUE(alpha_eq(dps[0].rhs, m("map F L")));
  EXPECT_TRUE(dps[0].star.ok);
  EXPECT_TRUE(extract_dps(std::vector<Rule>{}, map.signature).empty());
}

TEST_F(DpTest, StarConditionBoundVariable) {
  StarCheck c = check_star_condition(lim.rules[2], Position({2, 1}));
  EXPECT_FALSE(c.ok);
  ASSERT_EQ(c.free_bound_vars.size(), 1u);
  EXPECT_EQ(c.free_bound_vars[0].name, "n");
  EXPECT_FALSE(c.type_mismatch.has_value());
  EXPECT_TRUE(check_star_condition(map.rules[1], Position({2})).ok);
}

TEST_F(DpTest, StarConditionTypeMismatch) {
  RewriteSystem sys = parse_system(R"(
sort N L
nil : L
g : L -> N
h : N -> L
f : N -> N
rule h X -> nil
rule f X -> g (h X)
)");
  auto dps = extract_dps(sys.rules, sys.signature);
  ASSERT_EQ(dps.size(), 1u);
  EXPECT_EQ(dps[0].position, Position({2}));
  EXPECT_FALSE(dps[0].star.ok);
  ASSERT_TRUE(dps[0].star.type_mismatch.has_value());
  EXPECT_EQ(dps[0].star.type_mismatch->first, L());
  EXPECT_EQ(dps[0].star.type_mismatch->second, N());
  EXPECT_TRUE(dps[0].star.free_bound_vars.empty());
}

TEST_F(DpTest, BothStarFailuresReported) {
  RewriteSystem sys = parse_system(R"(
sort N L
nil : L
lam : (N -> L) -> N
h : N -> L
f : N -> N
rule h X -> nil
rule f X -> lam (\y. h y)
)");
  auto dps = extract_dps(sys.rules, sys.signature);
  ASSERT_EQ(dps.size(), 1u);
  EXPECT_FALSE(dps[0].star.free_bound_vars.empty());
  EXPECT_TRUE(dps[0].star.type_mismatch.has_value());
}

TEST(DpProperty, FapPositionsAreDefinedSpines) {
  testing::Rng rng(17);
  RewriteSystem sys = parse_system(testing::kMapSystem);
  std::vector<Term> leaves;
  for (const auto& [n, ty] : sys.signature.symbols) leaves.push_back(Term::sym(n, ty));
  leaves.push_back(Term::var("F", NN()));
  leaves.push_back(Term::var("K", L()));
  testing::TermGen gen(rng, leaves, {N(), L(), NN()});
  for (int i = 0; i < 400; ++i) {
    Term t = gen.must(testing::coin(rng) ? L() : N(), 16);
    auto ps = fap(t, sys.signature);
    for (const auto& p : ps) {
      Term sub = subterm_at(t, p);
      auto head = head_symbol(sub);
      ASSERT_TRUE(head && sys.signature.is_defined(*head)) << to_string(t) << " @ " << p.to_string();
      ASSERT_GE(level(sub, sys.signature), 1);
      // Nested fap positions leave the spine through an argument.
      for (const auto& q : ps) {
        if (q == p || !p.is_prefix_of(q)) continue;
        std::size_t k = p.size();
        while (k < q.size() && q[k] == 1) ++k;
        ASSERT_LT(k, q.size());
        ASSERT_EQ(q[k], 2);
      }
    }
    bool has_head = false;
    for (const auto& p : positions(t)) {
      Term sub = subterm_at(t, p);
      if (sub.is_sym() && sys.signature.is_defined(sub.name())) has_head = true;
    }
    ASSERT_EQ(level(t, sys.signature) == 0, !has_head) << to_string(t);
  }
}

TEST(DpProperty, FirstOrderOracle) {
  testing::Rng rng(4242);
  for (int i = 0; i < 100; ++i) {
    testing::FoSystem fo = testing::random_fo_system(rng);
    RewriteSystem sys = testing::to_system(fo);
    std::vector<testing::FoPair> got;
    for (const auto& dp : extract_dps(sys.rules, sys.signature)) {
      ASSERT_TRUE(alpha_eq(dp.lhs, sys.rules[static_cast<std::size_t>(dp.rule_id) - 1].lhs));
      got.push_back({dp.rule_id, dp.position.to_string(), canonical_key(dp.rhs)});
    }
    std::sort(got.begin(), got.end());
    ASSERT_EQ(got, testing::classical_dps(fo)) << "system " << i;
  }
}

}  // namespace
}  // namespace hodp
