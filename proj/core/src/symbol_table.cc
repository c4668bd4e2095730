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

#include "seqfst/symbol_table.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace seqfst {

bool SymbolTable::looks_like_sentinel(std::string_view text) {
  if (text.size() < 2 || text[0] != '$' || text[1] == '0') return false;
  return std::all_of(text.begin() + 1, text.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

Symbol SymbolTable::intern(std::string_view text, SymbolKind kind) {
  if (kind == SymbolKind::kSentinel || looks_like_sentinel(text)) {
    throw std::invalid_argument("sentinel symbols cannot be interned: " +
                                std::string(text));
  }
  if (auto it = ids_.find(std::string(text)); it != ids_.end()) {
    if (kinds_[it->second] != kind) {
      throw std::invalid_argument("symbol '" + std::string(text) +
                                  "' already interned with another kind");
    }
    return it->second;
  }
  return add_raw(text, kind);
}

std::optional<Symbol> SymbolTable::find(std::string_view text) const {
  auto it = ids_.find(std::string(text));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::vector<Symbol> SymbolTable::reserve_sentinels(std::size_t p) {
  for (std::size_t i = sentinels_.size() + 1; i <= p; ++i) {
    add_raw(sentinel_text(i), SymbolKind::kSentinel);
  }
  return {sentinels_.begin(),
          sentinels_.begin() + static_cast<long>(std::min(p, sentinels_.size()))};
}

Symbol SymbolTable::add_raw(std::string_view text, SymbolKind kind) {
  if (text.empty() || text.find_first_of("\t\n\r") != std::string_view::npos) {
    throw std::invalid_argument("invalid symbol text '" + std::string(text) +
                                "'");
  }
  std::string key(text);
  if (ids_.contains(key)) {
    throw std::invalid_argument("duplicate symbol '" + key + "'");
  }
  if (kind == SymbolKind::kSentinel) {
    if (key != sentinel_text(sentinels_.size() + 1)) {
      throw std::invalid_argument("sentinels must be added as $1, $2, ...");
    }
  } else if (looks_like_sentinel(key)) {
    throw std::invalid_argument("'" + key + "' is reserved for sentinels");
  }
  auto id = static_cast<Symbol>(texts_.size());
  texts_.push_back(key);
  kinds_.push_back(kind);
  ids_.emplace(std::move(key), id);
  if (kind == SymbolKind::kSentinel) sentinels_.push_back(id);
  return id;
}

}  // namespace seqfst
