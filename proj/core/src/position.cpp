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

#include "hodp/position.hpp"

#include <algorithm>

#include "hodp/error.hpp"

namespace hodp {

Position::Position(std::initializer_list<int> digits) {
  for (int d : digits) {
    if (d != 1 && d != 2) throw InvalidPosition("position digit must be 1 or 2");
    digits_.push_back(static_cast<std::uint8_t>(d));
  }
}

Position Position::parse(std::string_view text) {
  Position p;
  if (text.empty() || text == "ε") return p;
  bool expect_digit = true;
  for (char c : text) {
    if (expect_digit && (c == '1' || c == '2')) {
      p.digits_.push_back(static_cast<std::uint8_t>(c - '0'));
      expect_digit = false;
    } else if (!expect_digit && c == '.') {
      expect_digit = true;
    } else {
      throw InvalidPosition("malformed position '" + std::string(text) + "'");
    }
  }
  if (expect_digit) throw InvalidPosition("malformed position '" + std::string(text) + "'");
  return p;
}

Position Position::child(int digit) const {
  Position p = *this;
  p.digits_.push_back(static_cast<std::uint8_t>(digit));
  return p;
}

Position Position::prepend(int digit) const {
  Position p;
  p.digits_.reserve(digits_.size() + 1);
  p.digits_.push_back(static_cast<std::uint8_t>(digit));
  p.digits_.insert(p.digits_.end(), digits_.begin(), digits_.end());
  return p;
}

Position Position::concat(const Position& suffix) const {
  Position p = *this;
  p.digits_.insert(p.digits_.end(), suffix.digits_.begin(), suffix.digits_.end());
  return p;
}

bool Position::is_prefix_of(const Position& other) const {
  return digits_.size() <= other.digits_.size() &&
         std::equal(digits_.begin(), digits_.end(), other.digits_.begin());
}

std::string Position::to_string() const {
  if (digits_.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i) out += '.';
    out += static_cast<char>('0' + digits_[i]);
  }
  return out;
}

}  // namespace hodp
