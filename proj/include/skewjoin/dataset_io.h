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

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "skewjoin/datagen.h"

namespace skewjoin {

class DatasetFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Binary layout, all integers little-endian:
//   "SKJN" | u32 version (=1) | u64 rows | u32 payload_width |
//   rows x (i64 key | payload_width bytes)
inline constexpr char kDatasetMagic[4] = {'S', 'K', 'J', 'N'};
inline constexpr std::uint32_t kDatasetVersion = 1;

void write_dataset(std::ostream& out, const Dataset& ds);
Dataset read_dataset(std::istream& in);

void save_dataset(const std::string& path, const Dataset& ds);
Dataset load_dataset(const std::string& path);

// Header "key", then one key per line.
void write_keys_csv(std::ostream& out, const Dataset& ds);

}  // namespace skewjoin
