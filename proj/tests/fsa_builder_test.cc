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

#include "seqfst/fsa_builder.h"

#include <algorithm>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "seqfst/lexicon.h"
#include "seqfst/oracle.h"
#include "seqfst/traversal.h"
#include "test_util.h"

namespace seqfst {
namespace {

std::vector<Word> words_of(SymbolTable& symbols,
                           std::initializer_list<std::string_view> texts) {
  std::vector<Word> words;
  for (std::string_view t : texts) words.push_back(testing::word_of(symbols, t));
  return words;
}

TEST(FsaBuilderTest, SingleLetter) {
  SymbolTable symbols;
  Transducer a = fsa_build(symbols, words_of(symbols, {"a"}));
  EXPECT_EQ(a.num_states(), 2u);
  EXPECT_EQ(a.num_arcs(), 1u);
}

TEST(FsaBuilderTest, SharesPrefixesAndSuffixes) {
  SymbolTable symbols;
  Transducer a =
      fsa_build(symbols, words_of(symbols, {"tops", "tap", "taps", "top"}));
  // t -> {a, o} -> p (final) -> s (final)
  EXPECT_EQ(a.num_states(), 5u);
  EXPECT_EQ(a.num_arcs(), 5u);
  EXPECT_TRUE(validate(a).empty());
}

TEST(FsaBuilderTest, LanguageIsTheWordSet) {
  SymbolTable symbols;
  std::vector<Word> words =
      words_of(symbols, {"car", "cars", "cat", "cats", "do", "dog", "dogs"});
  Transducer a = fsa_build(symbols, words);
  auto lang = right_language(a, a.initial());
  std::set<Word> expected(words.begin(), words.end());
  ASSERT_EQ(lang.size(), expected.size());
  for (const auto& [w, out] : lang) {
    EXPECT_TRUE(expected.contains(w));
    EXPECT_TRUE(out.empty());
  }
}

TEST(FsaBuilderTest, FragmentOverInlinedOutputs) {
  InlineWordList list =
      to_inline_words(parse_lexicon(testing::kPronunciationFragment));
  Transducer a = fsa_build(list.symbols, list.words);
  EXPECT_EQ(a.num_states(), 17u);
  EXPECT_EQ(a.num_arcs(), 19u);
  EXPECT_TRUE(oracle::has_no_equivalent_pair(a));
}

TEST(FsaBuilderTest, DuplicatesAreIgnored) {
  SymbolTable symbols;
  FsaBuilder builder(symbols);
  Word ab = testing::word_of(builder.input_symbols(), "ab");
  builder.add(ab);
  std::size_t states = builder.automaton().num_states();
  builder.add(ab);
  EXPECT_EQ(builder.automaton().num_states(), states);
}

TEST(FsaBuilderTest, MatchesTransducerBuilderWithEmptyOutputs) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    Dictionary d = testing::random_dictionary(rng, {});
    std::vector<Word> words;
    std::vector<WordOutputPair> pairs;
    for (const WordOutputPair& p : d.pairs) {
      words.push_back(p.word);
      pairs.push_back({p.word, {}});
    }
    Transducer a = fsa_build(d.input_symbols, words);
    Transducer t = build(d.input_symbols, d.output_symbols, pairs);
    ASSERT_TRUE(oracle::isomorphic(a, t));
    Transducer reference =
        oracle::minimal_st(d.input_symbols, d.output_symbols, pairs);
    ASSERT_EQ(a.num_states(), reference.num_states());
  }
}

TEST(FsaBuilderTest, OrderDoesNotMatter) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    Dictionary d = testing::random_dictionary(rng, {});
    std::vector<Word> words;
    for (const WordOutputPair& p : d.pairs) words.push_back(p.word);
    Transducer first = fsa_build(d.input_symbols, words);
    for (int k = 0; k < 4; ++k) {
      std::shuffle(words.begin(), words.end(), rng);
      ASSERT_TRUE(oracle::isomorphic(first, fsa_build(d.input_symbols, words)));
      ASSERT_TRUE(oracle::isomorphic(
          first, fsa_build(d.input_symbols, words, {true})));
    }
  }
}

TEST(FsaBuilderTest, RegisterHoldsEveryStateButTheInitialOne) {
  SymbolTable symbols;
  FsaBuilder builder(symbols);
  for (std::string_view w : {"tops", "tap", "taps", "top"}) {
    builder.add(testing::word_of(builder.input_symbols(), w));
  }
  EXPECT_EQ(builder.state_register().size(),
            builder.automaton().num_states() - 1);
}

}  // namespace
}  // namespace seqfst
