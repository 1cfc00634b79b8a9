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

#include "hodp/error.hpp"
#include "hodp/parser.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

namespace hodp {
namespace {

using testing::L;
using testing::N;
using testing::NN;

TEST(ParserTest, MapSystem) {
  RewriteSystem sys = parse_system(testing::kMapSystem);
  ASSERT_EQ(sys.rules.size(), 2u);
  EXPECT_EQ(sys.rules[0].id, 1);
  EXPECT_EQ(sys.rules[1].id, 2);
  EXPECT_EQ(sys.signature.defined, std::set<std::string>{"map"});
  EXPECT_EQ(to_string(sys.rules[1]), "map F (cons X L) -> cons (F X) (map F L)");
  EXPECT_EQ(free_vars(sys.rules[1].lhs),
            (std::set<Variable>{{"F", NN()}, {"X", N()}, {"L", L()}}));
}

TEST(ParserTest, EmptyInput) {
  RewriteSystem sys = parse_system("");
  EXPECT_TRUE(sys.rules.empty());
  EXPECT_TRUE(sys.signature.symbols.empty());
  EXPECT_TRUE(parse_system("# only a comment\n\n").rules.empty());
}

TEST(ParserTest, TypeMismatchBetweenSides) {
  EXPECT_THROW(parse_system("sort N L\nc : N\nnil : L\nf : N -> N\nrule f X -> nil\n"), TypeError);
  EXPECT_THROW(parse_system("sort N\nc : N\nf : N -> N\nrule f X -> f X X\n"), TypeError);
}

TEST(ParserTest, SyntaxErrorsCarryLocation) {
  try {
    parse_system("sort N\nc : N\nf : N -> N\nrule f X -> (f X\n");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 4);
    EXPECT_EQ(e.col(), 17);
  }
  EXPECT_THROW(parse_system("sort N\nc : M\n"), SyntaxError);
  EXPECT_THROW(parse_system("sort N\nc : N\nc : N\n"), SyntaxError);
  EXPECT_THROW(parse_system("sort N\nfoo bar\n"), SyntaxError);
  EXPECT_THROW(parse_system("sort N\nc : N\nf : N -> N\nprec f > c > f\n"), SyntaxError);
  EXPECT_THROW(parse_system("sort N\nc : N\nprec c > g\n"), SyntaxError);
}

TEST(ParserTest, AmbiguityAndMalformedLhs) {
  EXPECT_THROW(parse_system("sort N\nc : N\nf : N -> N\nrule f (G (H c)) -> c\n"), InferenceAmbiguity);
  EXPECT_THROW(parse_system("sort N\nc : N\nrule X -> c\n"), MalformedLhs);
  EXPECT_THROW(parse_system("sort N\nc : N\nrule (\\x. x) c -> c\n"), MalformedLhs);
}

TEST(ParserTest, AbstractionsAndHints) {
  RewriteSystem sys = parse_system(R"(
sort N
0 : N
s : N -> N
twice : (N -> N) -> N -> N
rule twice F X -> (\x:N. F (F x)) X
prec twice > s
)");
  ASSERT_EQ(sys.rules.size(), 1u);
  EXPECT_TRUE(sys.rules[0].rhs.is_app());
  EXPECT_TRUE(sys.rules[0].rhs.fun().is_lam());
  ASSERT_EQ(sys.precedence_hints.size(), 1u);
  EXPECT_EQ(sys.precedence_hints[0], (std::pair<std::string, std::string>{"twice", "s"}));
  // A λ extends as far right as possible.
  Term t = parse_term("\\x. s x", sys.signature);
  EXPECT_EQ(type_of(t), NN());
  EXPECT_EQ(parse_type("(N -> N) -> N", sys.signature), Type::arrow(NN(), N()));
}

TEST(ParserTest, RoundTripsRendering) {
  for (const char* name : {"map", "lim_plus", "foldr", "apply", "minus_quot", "sum_lambda", "mapcomp"}) {
    RewriteSystem sys = testing::load(name);
    for (const auto& r : sys.rules) {
      std::map<std::string, Type> vars;
      for (const auto& v : free_vars(r.lhs)) vars.insert_or_assign(v.name, v.type);
      for (const auto& v : free_vars(r.rhs)) vars.insert_or_assign(v.name, v.type);
      EXPECT_TRUE(alpha_eq(parse_term(to_string(r.lhs), sys.signature, vars), r.lhs)) << name;
      EXPECT_TRUE(alpha_eq(parse_term(to_string(r.rhs), sys.signature, vars), r.rhs)) << name;
    }
  }
}

TEST(ParserTest, Corpus) {
  for (const auto& entry : std::filesystem::directory_iterator(testing::systems_dir())) {
    if (entry.path().extension() != ".hodp") continue;
    EXPECT_NO_THROW(parse_system_file(entry.path())) << entry.path();
  }
  EXPECT_THROW(parse_system_file(testing::systems_dir() / "missing.hodp"), Error);
}

}  // namespace
}  // namespace hodp
