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

#ifndef HODP_POSITION_HPP
#define HODP_POSITION_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace hodp {

// A path into a term or a type. Digits are 1 or 2: in an application 1 is
// the function and 2 the argument, in an abstraction 1 is the body, in an
// arrow type 1 is the domain and 2 the codomain. The empty position is the
// root. Ordering is lexicographic, so a prefix sorts before its extensions.
class Position {
 public:
  Position() = default;
  Position(std::initializer_list<int> digits);

  static Position root() { return {}; }
  // Parses "2.1.1"; "" and "ε" denote the root.
  static Position parse(std::string_view text);

  bool is_root() const { return digits_.empty(); }
  std::size_t size() const { return digits_.size(); }
  int operator[](std::size_t i) const { return digits_[i]; }
  const std::vector<std::uint8_t>& digits() const { return digits_; }

  Position child(int digit) const;
  // digit · this
  Position prepend(int digit) const;
  Position concat(const Position& suffix) const;
  bool is_prefix_of(const Position& other) const;

  // Dot notation; the root renders as "ε".
  std::string to_string() const;

  friend auto operator<=>(const Position&, const Position&) = default;
  friend bool operator==(const Position&, const Position&) = default;

 private:
  std::vector<std::uint8_t> digits_;
};

}  // namespace hodp

#endif  // HODP_POSITION_HPP
