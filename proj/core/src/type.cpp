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

#include "hodp/type.hpp"

#include "hodp/error.hpp"

namespace hodp {

struct Type::Node {
  std::string sort;            // base only
  std::vector<Type> children;  // {domain, codomain} for arrows
  std::size_t size = 1;
};

Type Type::base(std::string sort) {
  auto n = std::make_shared<Node>();
  n->sort = std::move(sort);
  return Type(std::move(n));
}

Type Type::arrow(Type domain, Type codomain) {
  auto n = std::make_shared<Node>();
  n->size = 1 + domain.size() + codomain.size();
  n->children = {std::move(domain), std::move(codomain)};
  return Type(std::move(n));
}

Type Type::arrows(const std::vector<Type>& args, Type result) {
  Type t = std::move(result);
  for (auto it = args.rbegin(); it != args.rend(); ++it) t = arrow(*it, t);
  return t;
}

bool Type::is_base() const { return node_->children.empty(); }
const std::string& Type::sort() const { return node_->sort; }
const Type& Type::domain() const { return node_->children[0]; }
const Type& Type::codomain() const { return node_->children[1]; }
std::size_t Type::size() const { return node_->size; }

std::string Type::to_string() const {
  if (is_base()) return sort();
  std::string d = domain().to_string();
  if (domain().is_arrow()) d = "(" + d + ")";
  return d + " -> " + codomain().to_string();
}

Type Type::at(const Position& p) const {
  Type t = *this;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (t.is_base()) throw InvalidPosition("position " + p.to_string() + " not in type " + to_string());
    t = p[i] == 1 ? t.domain() : t.codomain();
  }
  return t;
}

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_base() != b.is_base()) return false;
  if (a.is_base()) return a.sort() == b.sort();
  return a.size() == b.size() && a.domain() == b.domain() && a.codomain() == b.codomain();
}

int compare(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return 0;
  if (a.is_base() != b.is_base()) return a.is_base() ? -1 : 1;
  if (a.is_base()) return a.sort().compare(b.sort()) < 0 ? -1 : (a.sort() == b.sort() ? 0 : 1);
  if (int c = compare(a.domain(), b.domain())) return c;
  return compare(a.codomain(), b.codomain());
}

FlatType flatten(const Type& t) {
  FlatType f;
  Type cur = t;
  while (cur.is_arrow()) {
    f.args.push_back(cur.domain());
    cur = cur.codomain();
  }
  f.result = cur.sort();
  return f;
}

bool same_skeleton(const Type& a, const Type& b) {
  if (a.is_base() || b.is_base()) return a.is_base() && b.is_base();
  return same_skeleton(a.domain(), b.domain()) && same_skeleton(a.codomain(), b.codomain());
}

}  // namespace hodp
