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

#ifndef SEQFST_ERRORS_H_
#define SEQFST_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace seqfst {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// remainder(u, v) called with u not a prefix of v.
class NotAPrefix : public Error {
 public:
  NotAPrefix() : Error("remainder: first argument is not a prefix") {}
};

// The accumulated word/output mapping cannot be realised by a sequential
// transducer (same word with two outputs, or an accepted prefix whose output
// is not a prefix of the new output).
class NotSequential : public Error {
 public:
  NotSequential(std::string word, const std::string& why)
      : Error("not sequential at word '" + word + "': " + why),
        word_(std::move(word)) {}
  const std::string& word() const { return word_; }

 private:
  std::string word_;
};

// A word carries more outputs than there are end-of-string sentinels.
class AmbiguityOverflow : public Error {
 public:
  AmbiguityOverflow(std::string word, std::size_t count, std::size_t p)
      : Error("word '" + word + "' has " + std::to_string(count) +
              " outputs but only " + std::to_string(p) + " sentinels"),
        word_(std::move(word)) {}
  const std::string& word() const { return word_; }

 private:
  std::string word_;
};

class CyclicInput : public Error {
 public:
  CyclicInput() : Error("transducer contains a cycle") {}
};

// Right-language enumeration exceeded its cap.
class EnumerationLimit : public Error {
 public:
  explicit EnumerationLimit(std::size_t cap)
      : Error("enumeration exceeds " + std::to_string(cap) + " strings") {}
};

// Malformed serialized transducer or lexicon. `position` is a 1-based line
// number for text input and a byte offset for binary input.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t position, bool is_line)
      : Error((is_line ? "line " : "offset ") + std::to_string(position) +
              ": " + what),
        position_(position),
        is_line_(is_line) {}
  std::size_t position() const { return position_; }
  bool is_line() const { return is_line_; }

 private:
  std::size_t position_;
  bool is_line_;
};

}  // namespace seqfst

#endif  // SEQFST_ERRORS_H_
