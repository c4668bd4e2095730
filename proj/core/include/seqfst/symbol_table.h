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

#ifndef SEQFST_SYMBOL_TABLE_H_
#define SEQFST_SYMBOL_TABLE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "seqfst/output_string.h"

namespace seqfst {

enum class SymbolKind : std::uint8_t {
  kRegular = 0,
  // End-of-string marker $i appended to words by the subsequential encodings.
  kSentinel = 1,
  // Output token spliced into an input word (FSA encoding of a lexicon).
  kInlineOutput = 2,
};

// Bijection between token text and dense ids. Sentinels live in the same id
// space but can only be created through reserve_sentinels(), so interning
// lexicon text never yields a sentinel id.
class SymbolTable {
 public:
  // Returns the id of `text`, adding it if needed. Throws std::invalid_argument
  // for empty text, text containing a tab or newline, or text that names a
  // sentinel ("$1", "$2", ...).
  Symbol intern(std::string_view text, SymbolKind kind = SymbolKind::kRegular);

  std::optional<Symbol> find(std::string_view text) const;
  const std::string& text(Symbol id) const { return texts_.at(id); }
  SymbolKind kind(Symbol id) const { return kinds_.at(id); }
  bool is_sentinel(Symbol id) const {
    return id < kinds_.size() && kinds_[id] == SymbolKind::kSentinel;
  }
  std::size_t size() const { return texts_.size(); }

  // Makes sure sentinels $1..$p exist and returns their ids in index order.
  std::vector<Symbol> reserve_sentinels(std::size_t p);
  // Ids of all reserved sentinels ordered by index ($1 first).
  const std::vector<Symbol>& sentinels() const { return sentinels_; }

  // Used by deserialization: appends an entry with an explicit kind. The id
  // must equal size(); text must be fresh.
  Symbol add_raw(std::string_view text, SymbolKind kind);

  static std::string sentinel_text(std::size_t index) {
    return "$" + std::to_string(index);
  }
  static bool looks_like_sentinel(std::string_view text);

  friend bool operator==(const SymbolTable& a, const SymbolTable& b) {
    return a.texts_ == b.texts_ && a.kinds_ == b.kinds_;
  }

 private:
  std::vector<std::string> texts_;
  std::vector<SymbolKind> kinds_;
  std::unordered_map<std::string, Symbol> ids_;
  std::vector<Symbol> sentinels_;
};

}  // namespace seqfst

#endif  // SEQFST_SYMBOL_TABLE_H_
