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

#include "skewjoin/dataset_io.h"

#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

namespace skewjoin {

namespace {

template <class T>
void put_le(std::ostream& out, T value) {
  std::array<char, sizeof(T)> buf;
  auto u = static_cast<std::make_unsigned_t<T>>(value);
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    buf[i] = static_cast<char>(static_cast<std::uint8_t>(u >> (8 * i)));
  }
  out.write(buf.data(), buf.size());
}

template <class T>
T get_le(std::istream& in, const char* what) {
  std::array<unsigned char, sizeof(T)> buf;
  if (!in.read(reinterpret_cast<char*>(buf.data()), buf.size())) {
    throw DatasetFormatError(std::string("dataset: truncated while reading ") + what);
  }
  std::make_unsigned_t<T> u = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    u |= static_cast<std::make_unsigned_t<T>>(buf[i]) << (8 * i);
  }
  return static_cast<T>(u);
}

}  // namespace

void write_dataset(std::ostream& out, const Dataset& ds) {
  out.write(kDatasetMagic, sizeof(kDatasetMagic));
  put_le<std::uint32_t>(out, kDatasetVersion);
  put_le<std::uint64_t>(out, ds.size());
  put_le<std::uint32_t>(out, ds.payload_width);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    put_le<std::int64_t>(out, ds.keys[i]);
    auto bytes = ds.payload_of(i);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
  }
  if (!out) throw std::runtime_error("dataset: write failed");
}

Dataset read_dataset(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kDatasetMagic, 4) != 0) {
    throw DatasetFormatError("dataset: bad magic (expected SKJN)");
  }
  const auto version = get_le<std::uint32_t>(in, "version");
  if (version != kDatasetVersion) {
    throw DatasetFormatError("dataset: unsupported version " + std::to_string(version));
  }
  const auto rows = get_le<std::uint64_t>(in, "row count");
  const auto width = get_le<std::uint32_t>(in, "payload width");
  if (rows > UINT32_MAX) throw DatasetFormatError("dataset: too many rows");

  Dataset ds;
  ds.payload_width = width;
  ds.keys.resize(rows);
  ds.payload.resize(rows * width);
  for (std::uint64_t i = 0; i < rows; ++i) {
    ds.keys[i] = get_le<std::int64_t>(in, "key");
    if (width > 0 &&
        !in.read(reinterpret_cast<char*>(ds.payload.data() + i * width), width)) {
      throw DatasetFormatError("dataset: truncated payload at row " + std::to_string(i));
    }
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw DatasetFormatError("dataset: trailing bytes after last row");
  }
  return ds;
}

void save_dataset(const std::string& path, const Dataset& ds) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("dataset: cannot open '" + path + "' for writing");
  write_dataset(out, ds);
}

Dataset load_dataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DatasetFormatError("dataset: cannot open '" + path + "'");
  return read_dataset(in);
}

void write_keys_csv(std::ostream& out, const Dataset& ds) {
  out << "key\n";
  for (Key k : ds.keys) out << k << '\n';
}

}  // namespace skewjoin
