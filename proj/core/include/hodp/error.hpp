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

#ifndef HODP_ERROR_HPP
#define HODP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hodp {

// Base class of every error raised by the library. Absence of a match,
// a failed ordering comparison and similar outcomes are regular results,
// not errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ill-typed term. `where` is the dot-notation position of the offending
// node, optionally prefixed with a rule side ("rule 2 rhs @ 1.2").
class TypeError : public Error {
 public:
  TypeError(const std::string& where, const std::string& what)
      : Error("type error at " + where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

class InvalidPosition : public Error {
 public:
  using Error::Error;
};

// A rule left hand-side whose head is not a function symbol.
class MalformedLhs : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(int line, int col, const std::string& what)
      : Error("syntax error at " + std::to_string(line) + ":" +
              std::to_string(col) + ": " + what),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// A rule variable (or binder) whose type is not fixed by its uses.
class InferenceAmbiguity : public Error {
 public:
  using Error::Error;
};

// Exploration or search ran out of its node/candidate budget.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// Too many symbols for exhaustive precedence enumeration.
class SearchSpaceExceeded : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

}  // namespace hodp

#endif  // HODP_ERROR_HPP
