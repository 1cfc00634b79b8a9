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

#ifndef HODP_PARSER_HPP
#define HODP_PARSER_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "hodp/signature.hpp"
#include "hodp/term.hpp"

namespace hodp {

// Line-oriented input format; '#' starts a comment.
//
//   sort N L                       declare base sorts
//   cons : N -> L -> L             declare a symbol
//   rule map F (cons X L) -> cons (F X) (map F L)
//   prec map > cons > nil          optional precedence hints
//
// Terms use juxtaposition for application and "\x. t" or "\x:T. t" for
// abstraction. Identifiers that are not declared symbols are rule
// variables; their types are inferred per rule.
//
// Throws SyntaxError, TypeError, InferenceAmbiguity or MalformedLhs.
RewriteSystem parse_system(std::string_view text);
RewriteSystem parse_system_file(const std::filesystem::path& path);

// A single term over `sig`. Free variables take their types from `vars`
// when listed there, otherwise from inference; `expected` constrains the
// type of the whole term.
Term parse_term(std::string_view text, const Signature& sig, const std::map<std::string, Type>& vars = {},
                const std::optional<Type>& expected = std::nullopt);

Type parse_type(std::string_view text, const Signature& sig);

}  // namespace hodp

#endif  // HODP_PARSER_HPP
