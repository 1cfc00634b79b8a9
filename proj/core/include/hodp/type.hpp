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

#ifndef HODP_TYPE_HPP
#define HODP_TYPE_HPP

#include <memory>
#include <string>
#include <vector>

#include "hodp/position.hpp"

namespace hodp {

// A simple type: a base sort or a binary arrow. Immutable, shared,
// compared structurally.
class Type {
 public:
  static Type base(std::string sort);
  static Type arrow(Type domain, Type codomain);
  // T1 -> ... -> Tn -> result
  static Type arrows(const std::vector<Type>& args, Type result);

  bool is_base() const;
  bool is_arrow() const { return !is_base(); }
  // Precondition: is_base().
  const std::string& sort() const;
  // Precondition: is_arrow().
  const Type& domain() const;
  const Type& codomain() const;

  // Number of nodes.
  std::size_t size() const;
  std::string to_string() const;

  // Subtype at `p`; throws InvalidPosition.
  Type at(const Position& p) const;

  friend bool operator==(const Type& a, const Type& b);
  friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }
  // Structural total order (base < arrow, then by sort name / components).
  friend int compare(const Type& a, const Type& b);
  friend bool operator<(const Type& a, const Type& b) { return compare(a, b) < 0; }

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// T1 -> ... -> Tn -> B with n maximal.
struct FlatType {
  std::vector<Type> args;
  std::string result;
};

FlatType flatten(const Type& t);

// The same shape with every sort replaced by a single one. Two types with
// equal skeletons are interchangeable for the path ordering.
bool same_skeleton(const Type& a, const Type& b);

}  // namespace hodp

#endif  // HODP_TYPE_HPP
