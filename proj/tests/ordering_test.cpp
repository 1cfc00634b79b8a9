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
#include "hodp/error.hpp"
#include "hodp/ordering.hpp"
#include "hodp/parser.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

namespace hodp {
namespace {

using testing::L;
using testing::N;
using testing::NN;

class OrderingTest : public ::testing::Test {
 protected:
  RewriteSystem map = parse_system(testing::kMapSystem);
  std::vector<DepPair> dps = extract_dps(map.rules, map.signature);
  Term m(const std::string& s) { return testing::term(map, s, {{"F", NN()}, {"X", N()}, {"L", L()}, {"Y", N()}}); }
};

TEST(PrecedenceTest, ParseAndClosure) {
  Precedence p = Precedence::parse("f > g > h");
  EXPECT_TRUE(p.greater("f", "h"));
  EXPECT_FALSE(p.greater("h", "f"));
  EXPECT_FALSE(p.greater("f", "f"));
  EXPECT_EQ(p.to_string(), "f>g, g>h");
  Precedence q = Precedence::parse("f>g,f>h");
  EXPECT_EQ(q.edges().size(), 2u);
  EXPECT_TRUE(Precedence::parse("").edges().empty());
  EXPECT_THROW(Precedence::parse("f>g,g>f"), Error);
  EXPECT_THROW(Precedence::parse("f>"), Error);
  EXPECT_THROW(Precedence::parse("f>f"), Error);
  EXPECT_EQ(q.status("f"), Status::Mul);
}

TEST_F(OrderingTest, StrictExamples) {
  Term lhs = m("map F (cons X L)");
  Term dp = m("map F L");
  for (const char* p : {"", "map>cons", "cons>map"}) {
    auto w = horpo_gt(lhs, dp, Precedence::parse(p));
    ASSERT_NE(w, nullptr) << p;
    EXPECT_EQ(w->clause.rfind("status", 0), 0u) << w->clause;
  }
  EXPECT_EQ(horpo_gt(lhs, lhs, Precedence::parse("map>cons")), nullptr);
  EXPECT_NE(horpo_gt(m("map F nil"), m("nil"), Precedence::parse("map>nil")), nullptr);
  EXPECT_EQ(horpo_gt(m("X"), m("Y"), Precedence{}), nullptr);
  // Different type shapes are never compared.
  EXPECT_EQ(horpo_gt(m("map F nil"), m("F"), Precedence{}), nullptr);
}

TEST_F(OrderingTest, WeakExamples) {
  Term t = m("map F (cons X L)");
  EXPECT_NE(pair_ge(t, t, Precedence{}), nullptr);
  EXPECT_NE(pair_ge(m("(\\x. s x) 0"), m("s 0"), Precedence{}), nullptr);
  EXPECT_NE(pair_ge(t, m("cons (F X) (map F L)"), Precedence::parse("map>cons")), nullptr);
  EXPECT_EQ(pair_ge(t, m("cons (F X) (map F L)"), Precedence{}), nullptr);
  // Needs two β steps; a bound of one is not enough.
  Term two = m("(\\x. (\\y. s y) x) 0");
  EXPECT_NE(pair_ge(two, m("s 0"), Precedence{}, 2), nullptr);
  EXPECT_EQ(pair_ge(two, m("s 0"), Precedence{}, 1), nullptr);
}

TEST_F(OrderingTest, LexicographicStatus) {
  RewriteSystem ack = parse_system(R"(
sort N
0 : N
s : N -> N
ack : N -> N -> N
rule ack 0 Y -> s Y
rule ack (s X) 0 -> ack X (s 0)
rule ack (s X) (s Y) -> ack X (ack (s X) Y)
)");
  auto adps = extract_dps(ack.rules, ack.signature);
  Precedence mul = Precedence::parse("ack>s");
  EXPECT_FALSE(check_constraints(ack.rules, adps, mul).certificate.has_value());
  Precedence lex = mul;
  lex.set_status("ack", Status::Lex);
  EXPECT_TRUE(check_constraints(ack.rules, adps, lex).certificate.has_value());
  auto found = search_precedence(ack.rules, adps, ack.signature, {});
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(found->precedence.status("ack"), Status::Lex);
}

TEST_F(OrderingTest, CheckConstraints) {
  auto ok = check_constraints(map.rules, dps, Precedence::parse("map > cons > nil"));
  ASSERT_TRUE(ok.certificate.has_value());
  EXPECT_EQ(ok.certificate->rules.size(), 2u);
  EXPECT_EQ(ok.certificate->dps.size(), 1u);
  EXPECT_TRUE(ok.failures.empty());

  // Without a precedence rule 1 still holds by the subterm clause
  // (nil is an argument); rule 2 needs map > cons.
  auto bad = check_constraints(map.rules, dps, Precedence{});
  EXPECT_FALSE(bad.certificate.has_value());
  ASSERT_EQ(bad.failures.size(), 1u);
  EXPECT_EQ(bad.failures[0].id, 2);
  EXPECT_FALSE(bad.failures[0].strict);
  EXPECT_EQ(to_string(bad.failures[0]), "rule 2: map F (cons X L) >= cons (F X) (map F L) not derivable");

  auto empty = check_constraints(std::vector<Rule>{}, std::vector<DepPair>{}, Precedence{});
  EXPECT_TRUE(empty.certificate.has_value());
}

TEST_F(OrderingTest, SearchPrecedence) {
  auto cert = search_precedence(map.rules, dps, map.signature, {});
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->precedence.edges(), (std::set<std::pair<std::string, std::string>>{{"map", "cons"}}));
  EXPECT_EQ(cert->precedence.status("map"), Status::Mul);

  RewriteSystem aa = parse_system("sort A\na : A\nrule a -> a\n");
  auto adps = extract_dps(aa.rules, aa.signature);
  EXPECT_FALSE(search_precedence(aa.rules, adps, aa.signature, {}).has_value());

  RewriteSystem none = parse_system("sort N\n0 : N\n");
  auto vac = search_precedence(none.rules, std::vector<DepPair>{}, none.signature, {});
  ASSERT_TRUE(vac.has_value());
  EXPECT_TRUE(vac->precedence.edges().empty());
}

TEST_F(OrderingTest, SearchRespectsRequiredAndFixed) {
  Precedence req = Precedence::parse("cons>map");
  EXPECT_FALSE(search_precedence(map.rules, dps, map.signature, {}, req).has_value());
  EXPECT_FALSE(search_precedence(map.rules, dps, map.signature, {}, Precedence{}, true).has_value());
  EXPECT_TRUE(search_precedence(map.rules, dps, map.signature, {}, Precedence::parse("map>cons"), true).has_value());
}

TEST_F(OrderingTest, SearchSpaceLimit) {
  SearchLimits tight{2, 8};
  EXPECT_THROW(search_precedence(map.rules, dps, map.signature, tight), SearchSpaceExceeded);
}

TEST_F(OrderingTest, CertificateReplay) {
  for (const char* name : {"map", "plus", "foldr", "apply", "mapcomp"}) {
    RewriteSystem sys = testing::load(name);
    auto sdps = extract_dps(sys.rules, sys.signature);
    auto cert = search_precedence(sys.rules, sdps, sys.signature, {});
    ASSERT_TRUE(cert.has_value()) << name;
    auto again = check_constraints(sys.rules, sdps, cert->precedence);
    ASSERT_TRUE(again.certificate.has_value()) << name;
    ASSERT_EQ(again.certificate->rules.size(), cert->rules.size());
    for (std::size_t i = 0; i < cert->rules.size(); ++i)
      EXPECT_EQ(to_string(*again.certificate->rules[i].witness), to_string(*cert->rules[i].witness));
    for (std::size_t i = 0; i < cert->dps.size(); ++i)
      EXPECT_EQ(to_string(*again.certificate->dps[i].witness), to_string(*cert->dps[i].witness));
  }
}

// ---- ordering axioms on generated terms ----

class OrderingProperty : public ::testing::Test {
 protected:
  Signature sig = [] {
    Signature s = testing::list_signature();
    s.symbols.insert_or_assign("map", Type::arrows({NN(), L()}, L()));
    s.symbols.insert_or_assign("f", Type::arrows({N(), N()}, N()));
    s.symbols.insert_or_assign("g", NN());
    return s;
  }();
  Precedence prec = [] {
    Precedence p = Precedence::parse("map>cons>nil, f>g>s>0");
    p.set_status("f", Status::Lex);
    return p;
  }();
  testing::Rng rng{123};
  std::vector<Term> symbols() const {
    std::vector<Term> out;
    for (const auto& [n, ty] : sig.symbols) out.push_back(Term::sym(n, ty));
    return out;
  }
  std::vector<Term> with_vars() const {
    auto out = symbols();
    for (Term v : {Term::var("X", N()), Term::var("Y", N()), Term::var("F", NN()), Term::var("K", L())})
      out.push_back(v);
    return out;
  }
  std::vector<Type> arg_types{N(), L(), NN()};
};

TEST_F(OrderingProperty, Irreflexive) {
  testing::TermGen gen(rng, with_vars(), arg_types);
  HorpoPair pair(prec);
  for (int i = 0; i < 1000; ++i) {
    Term t = gen.must(testing::pick(rng, arg_types), 14);
    ASSERT_EQ(pair.strict(t, t), nullptr) << to_string(t);
  }
}

TEST_F(OrderingProperty, StableUnderSubstitution) {
  testing::TermGen gen(rng, with_vars(), arg_types);
  testing::TermGen images(rng, with_vars(), arg_types);
  int derivable = 0;
  for (int i = 0; i < 20000 && derivable < 100; ++i) {
    Type ty = testing::pick(rng, arg_types);
    Term s = gen.must(ty, 12);
    Term t = gen.must(ty, 6);
    if (!horpo_gt(s, t, prec)) continue;
    ++derivable;
    std::set<Variable> vars = free_vars(s);
    for (const auto& v : free_vars(t)) vars.insert(v);
    for (int k = 0; k < 5; ++k) {
      Substitution sigma = testing::random_subst(rng, vars, images, 6);
      Term ss = apply_subst(s, sigma);
      Term ts = apply_subst(t, sigma);
      ASSERT_NE(horpo_gt(ss, ts, prec), nullptr)
          << to_string(s) << " > " << to_string(t) << " under " << sigma.to_string();
    }
  }
  EXPECT_EQ(derivable, 100);
}

TEST_F(OrderingProperty, WeakThenStrictIsStrict) {
  testing::TermGen gen(rng, with_vars(), arg_types);
  int triples = 0;
  for (int i = 0; i < 20000 && triples < 100; ++i) {
    Type ty = testing::pick(rng, arg_types);
    Term t = gen.must(ty, 10);
    Term u = gen.must(ty, 6);
    if (!horpo_gt(t, u, prec)) continue;
    Term s = t;
    int steps = testing::uniform(rng, 1, 3);
    for (int k = 0; k < steps; ++k)
      if (auto e = testing::beta_expand(rng, s, k)) s = *e;
    ASSERT_NE(pair_ge(s, t, prec, 3), nullptr) << to_string(s) << " >= " << to_string(t);
    ASSERT_NE(horpo_gt(s, u, prec), nullptr) << to_string(s) << " > " << to_string(u);
    ++triples;
  }
  EXPECT_EQ(triples, 100);
}

TEST_F(OrderingProperty, NoCyclesInPool) {
  testing::TermGen gen(rng, with_vars(), arg_types);
  std::vector<Term> pool;
  std::set<std::string> seen;
  while (pool.size() < 500) {
    Term t = gen.must(testing::pick(rng, arg_types), 8);
    if (seen.insert(canonical_key(t)).second) pool.push_back(t);
  }
  HorpoPair pair(prec);
  std::vector<std::vector<std::size_t>> succ(pool.size());
  for (std::size_t a = 0; a < pool.size(); ++a)
    for (std::size_t b = 0; b < pool.size(); ++b)
      if (pair.strict(pool[a], pool[b])) succ[a].push_back(b);
  // Kahn's algorithm: every node is removed iff the graph is acyclic.
  std::vector<int> indeg(pool.size(), 0);
  for (const auto& out : succ)
    for (auto b : out) ++indeg[b];
  std::vector<std::size_t> ready;
  for (std::size_t a = 0; a < pool.size(); ++a)
    if (indeg[a] == 0) ready.push_back(a);
  std::size_t removed = 0;
  while (!ready.empty()) {
    std::size_t a = ready.back();
    ready.pop_back();
    ++removed;
    for (auto b : succ[a])
      if (--indeg[b] == 0) ready.push_back(b);
  }
  EXPECT_EQ(removed, pool.size());
}

}  // namespace
}  // namespace hodp
