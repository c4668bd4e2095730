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

#ifndef SEQFST_LEXICON_H_
#define SEQFST_LEXICON_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "seqfst/st_builder.h"

namespace seqfst {

struct LexiconEntry {
  std::string word;
  std::vector<std::string> output;
  std::size_t line = 0;
};

// Lexicon text: one `word | out tokens` or `word<TAB>out tokens` per line,
// blank lines and lines starting with '#' ignored. A word listed more than
// once carries several outputs.
struct LexiconFile {
  std::vector<LexiconEntry> entries;
};

// Throws FormatError with the offending line number.
LexiconFile parse_lexicon(std::string_view text);
LexiconFile read_lexicon(const std::string& path);
std::string format_lexicon(const LexiconFile& lexicon);

// Splits into UTF-8 code points (invalid bytes become single tokens).
std::vector<std::string> split_characters(std::string_view word);

// Interns every character and output token (in sorted order, so the ids do
// not depend on the line order) and converts the entries.
Dictionary to_dictionary(const LexiconFile& lexicon);

// Output tokens spliced into the input alphabet are stored as "/token".
std::string inline_symbol_text(std::string_view token);

// Word list w·o for every entry, with the output tokens as kInlineOutput
// input symbols. Language of the automaton baseline.
struct InlineWordList {
  SymbolTable symbols;
  std::vector<Word> words;
};
InlineWordList to_inline_words(const LexiconFile& lexicon);

// Synthetic surname-like pronunciation lexicon. Words are built from
// syllables with spelling-driven transcriptions; `suffix_rate` controls how
// often a word ends in one of a few shared surname suffixes and
// `noise_rate` how often a transcription gets an irregular phoneme.
struct SynthConfig {
  std::uint64_t seed = 1;
  std::size_t size = 1000;
  double suffix_rate = 0.5;
  double noise_rate = 0.1;
  // Probability that a word gets a second, different transcription.
  double ambiguity_rate = 0.0;
};
LexiconFile generate_lexicon(const SynthConfig& config);

// Small random dictionaries over single-letter inputs a, b, ... and output
// tokens x0, x1, ..., for stress testing. Words are distinct and each gets
// between 1 and max_ambiguity distinct outputs; pairs come shuffled.
struct RandomDictionaryConfig {
  std::size_t max_words = 50;
  std::size_t max_alphabet = 4;
  std::size_t max_word_length = 6;
  std::size_t max_output_length = 5;
  std::size_t output_alphabet = 4;
  std::size_t max_ambiguity = 2;
};
Dictionary random_dictionary(std::uint64_t seed,
                             const RandomDictionaryConfig& config);

}  // namespace seqfst

#endif  // SEQFST_LEXICON_H_
