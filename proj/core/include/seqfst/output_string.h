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

#ifndef SEQFST_OUTPUT_STRING_H_
#define SEQFST_OUTPUT_STRING_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace seqfst {

// Dense id of an interned token (input or output alphabet).
using Symbol = std::uint32_t;

// An input word: a sequence of input-symbol ids.
using Word = std::vector<Symbol>;

// A (possibly empty) sequence of output-symbol ids. Operations work on token
// boundaries, never inside a token.
class OutputString {
 public:
  OutputString() = default;
  OutputString(std::initializer_list<Symbol> tokens) : tokens_(tokens) {}
  explicit OutputString(std::vector<Symbol> tokens)
      : tokens_(std::move(tokens)) {}
  explicit OutputString(std::span<const Symbol> tokens)
      : tokens_(tokens.begin(), tokens.end()) {}

  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  Symbol operator[](std::size_t i) const { return tokens_[i]; }
  auto begin() const { return tokens_.begin(); }
  auto end() const { return tokens_.end(); }
  const std::vector<Symbol>& tokens() const { return tokens_; }

  // Prepends `prefix` in place.
  void prepend(const OutputString& prefix) {
    tokens_.insert(tokens_.begin(), prefix.begin(), prefix.end());
  }
  void append(const OutputString& suffix) {
    tokens_.insert(tokens_.end(), suffix.begin(), suffix.end());
  }
  // Drops the first n tokens (n <= size()).
  void drop_front(std::size_t n) {
    tokens_.erase(tokens_.begin(), tokens_.begin() + static_cast<long>(n));
  }

  OutputString prefix(std::size_t n) const {
    return OutputString(std::span<const Symbol>(tokens_).first(n));
  }
  OutputString suffix_from(std::size_t n) const {
    return OutputString(std::span<const Symbol>(tokens_).subspan(n));
  }

  friend bool operator==(const OutputString&, const OutputString&) = default;
  friend auto operator<=>(const OutputString&, const OutputString&) = default;

 private:
  std::vector<Symbol> tokens_;
};

// Length of the longest common prefix of u and v.
std::size_t lcp_length(const OutputString& u, const OutputString& v);

// u ∧ v.
OutputString lcp(const OutputString& u, const OutputString& v);

// u ≤ₚ v.
bool is_prefix(const OutputString& u, const OutputString& v);

// u⁻¹v, i.e. the w with u·w = v. Throws NotAPrefix unless is_prefix(u, v).
OutputString remainder(const OutputString& u, const OutputString& v);

OutputString concat(const OutputString& u, const OutputString& v);

struct OutputStringHash {
  std::size_t operator()(const OutputString& s) const noexcept;
};

// Mixes `value` into `seed`; used by the signature hashes.
inline void hash_mix(std::size_t& seed, std::size_t value) noexcept {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 12) + (seed >> 4);
}

}  // namespace seqfst

#endif  // SEQFST_OUTPUT_STRING_H_
