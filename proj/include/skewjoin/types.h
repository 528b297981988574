// Copyright 2026 The SkewJoin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

namespace skewjoin {

using Key = std::int64_t;
using NodeId = std::uint32_t;
using RowId = std::uint32_t;

// A join key plus a reference to the row (and thus the payload) it came from.
struct Tuple {
  Key key = 0;
  RowId row = 0;

  friend bool operator==(const Tuple&, const Tuple&) = default;
};

// Slice of one table resident on one node.
struct NodeShare {
  std::vector<Tuple> tuples;
};

enum class Side : std::uint8_t { kR, kS };

// Skew taxonomy of a join value. Every key belongs to exactly one class.
enum class KeyClass : std::uint8_t {
  kNonSkewed,
  kPartialR,
  kPartialS,
  kCompleteLeft,
  kCompleteRight,
};

inline constexpr std::size_t kNumKeyClasses = 5;

inline constexpr std::array<KeyClass, kNumKeyClasses> kAllKeyClasses = {
    KeyClass::kNonSkewed, KeyClass::kPartialR, KeyClass::kPartialS,
    KeyClass::kCompleteLeft, KeyClass::kCompleteRight};

// Per-class redistribution action of one table.
enum class Action : std::uint8_t {
  kHash,
  kLocal,
  kRandomRR,
  kBroadcast,
  kSfrRow,
  kSfrCol,
};

constexpr std::string_view to_string(KeyClass c) {
  switch (c) {
    case KeyClass::kNonSkewed: return "non_skewed";
    case KeyClass::kPartialR: return "partial_R";
    case KeyClass::kPartialS: return "partial_S";
    case KeyClass::kCompleteLeft: return "complete_left";
    case KeyClass::kCompleteRight: return "complete_right";
  }
  return "?";
}

constexpr std::string_view to_string(Action a) {
  switch (a) {
    case Action::kHash: return "hash";
    case Action::kLocal: return "local";
    case Action::kRandomRR: return "random_rr";
    case Action::kBroadcast: return "broadcast";
    case Action::kSfrRow: return "sfr_row";
    case Action::kSfrCol: return "sfr_col";
  }
  return "?";
}

constexpr std::size_t index_of(KeyClass c) { return static_cast<std::size_t>(c); }

}  // namespace skewjoin
