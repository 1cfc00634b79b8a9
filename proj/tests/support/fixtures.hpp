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

#ifndef HODP_TESTS_FIXTURES_HPP
#define HODP_TESTS_FIXTURES_HPP

#include <filesystem>
#include <map>
#include <string>

#include "hodp/parser.hpp"
#include "hodp/signature.hpp"

namespace hodp::testing {

inline std::filesystem::path systems_dir() { return HODP_SYSTEMS_DIR; }

inline RewriteSystem load(const std::string& name) { return parse_system_file(systems_dir() / (name + ".hodp")); }

// Parses `text` over the signature of `sys`; free variables default to
// the types listed in `vars`.
inline Term term(const RewriteSystem& sys, const std::string& text, const std::map<std::string, Type>& vars = {}) {
  return parse_term(text, sys.signature, vars);
}

inline const char* kMapSystem = R"(
sort N L
0 : N
s : N -> N
nil : L
cons : N -> L -> L
map : (N -> N) -> L -> L
rule map F nil -> nil
rule map F (cons X L) -> cons (F X) (map F L)
)";

inline const char* kLimSystem = R"(
sort N
0 : N
s : N -> N
lim : (N -> N) -> N
plus : N -> N -> N
rule plus 0 X -> X
rule plus (s Y) X -> s (plus Y X)
rule plus (lim F) X -> lim (\n. plus (F n) X)
)";

}  // namespace hodp::testing

#endif  // HODP_TESTS_FIXTURES_HPP
