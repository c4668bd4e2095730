// Copyright 2026 The seqfst Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEQFST_SERIALIZATION_H_
#define SEQFST_SERIALIZATION_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqfst/transducer.h"

namespace seqfst {

enum class Format { kText, kBinary };

// Text format (tab separated, one record per line):
//
//   seqfst-text<TAB>1
//   initial<TAB>0
//   isym<TAB><id><TAB><kind><TAB><text>     kind: sym | sentinel | inline
//   osym<TAB><id><TAB><kind><TAB><text>
//   <src><TAB><dst><TAB><input text><TAB><space separated output tokens>
//   <src>                                   final state
//
// States are renumbered in breadth-first order from the initial state, which
// becomes 0. An empty output field is ε.
std::string to_text(const Transducer& t);
Transducer from_text(std::string_view text);

// Binary format, all integers little endian:
//
//   "SQFT" u8:version(=1)
//   symbol table (input), symbol table (output):
//     u32:count { u8:kind u32:len bytes }*
//   u32:num_states u32:initial
//   per state: u8:final u32:num_arcs { u32:input u32:target u32:len u32* }*
//   u64: FNV-1a of every preceding byte
inline constexpr std::uint8_t kBinaryVersion = 1;
std::vector<std::uint8_t> to_binary(const Transducer& t);
Transducer from_binary(std::span<const std::uint8_t> bytes);

// deserialize() tells the formats apart by the leading magic.
std::vector<std::uint8_t> serialize(const Transducer& t, Format format);
Transducer deserialize(std::span<const std::uint8_t> bytes);

void write_file(const std::string& path, const Transducer& t, Format format);
Transducer read_file(const std::string& path);

}  // namespace seqfst

#endif  // SEQFST_SERIALIZATION_H_
