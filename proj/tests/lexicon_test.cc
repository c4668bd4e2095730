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

#include "seqfst/lexicon.h"

#include <set>

#include "gtest/gtest.h"
#include "seqfst/errors.h"
#include "seqfst/extensions.h"
#include "seqfst/traversal.h"
#include "test_util.h"

namespace seqfst {
namespace {

TEST(LexiconTest, ParsesBothSeparators) {
  LexiconFile lex = parse_lexicon(
      "# comment\n"
      "\n"
      "but | b uh t\n"
      "cut\tk  uh t\n"
      "hm |\n");
  ASSERT_EQ(lex.entries.size(), 3u);
  EXPECT_EQ(lex.entries[0].word, "but");
  EXPECT_EQ(lex.entries[0].output, (std::vector<std::string>{"b", "uh", "t"}));
  EXPECT_EQ(lex.entries[0].line, 3u);
  EXPECT_EQ(lex.entries[1].output, (std::vector<std::string>{"k", "uh", "t"}));
  EXPECT_TRUE(lex.entries[2].output.empty());
}

TEST(LexiconTest, ErrorsCarryLineNumbers) {
  try {
    parse_lexicon("a | x\nno separator here\n");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.position(), 2u);
    EXPECT_TRUE(e.is_line());
  }
  try {
    parse_lexicon("a | x\n\n  | y\n");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
}

TEST(LexiconTest, FormatRoundTrips) {
  LexiconFile lex = parse_lexicon(testing::kPronunciationFragment);
  LexiconFile again = parse_lexicon(format_lexicon(lex));
  ASSERT_EQ(again.entries.size(), lex.entries.size());
  for (std::size_t i = 0; i < lex.entries.size(); ++i) {
    EXPECT_EQ(again.entries[i].word, lex.entries[i].word);
    EXPECT_EQ(again.entries[i].output, lex.entries[i].output);
  }
}

TEST(LexiconTest, SplitsUtf8CodePoints) {
  EXPECT_EQ(split_characters("aé€"),
            (std::vector<std::string>{"a", "é", "€"}));
  EXPECT_EQ(split_characters(""), std::vector<std::string>{});
}

TEST(LexiconTest, SymbolIdsDoNotDependOnLineOrder) {
  Dictionary a = testing::dictionary_from("but | b uh t\ncite | s ai t\n");
  Dictionary b = testing::dictionary_from("cite | s ai t\nbut | b uh t\n");
  EXPECT_EQ(a.input_symbols, b.input_symbols);
  EXPECT_EQ(a.output_symbols, b.output_symbols);
}

TEST(LexiconTest, InlineWords) {
  InlineWordList list = to_inline_words(parse_lexicon("ab | x y\n"));
  ASSERT_EQ(list.words.size(), 1u);
  ASSERT_EQ(list.words[0].size(), 4u);
  EXPECT_EQ(list.symbols.text(list.words[0][2]), "/x");
  EXPECT_EQ(list.symbols.kind(list.words[0][3]), SymbolKind::kInlineOutput);
  EXPECT_EQ(list.symbols.kind(list.words[0][0]), SymbolKind::kRegular);
}

TEST(LexiconTest, GeneratorIsDeterministicAndSized) {
  SynthConfig config{.seed = 9, .size = 500};
  std::string a = format_lexicon(generate_lexicon(config));
  std::string b = format_lexicon(generate_lexicon(config));
  EXPECT_EQ(a, b);
  config.seed = 10;
  EXPECT_NE(format_lexicon(generate_lexicon(config)), a);
  LexiconFile lex = generate_lexicon({.seed = 9, .size = 500});
  EXPECT_EQ(lex.entries.size(), 500u);
  std::set<std::string> words;
  for (const LexiconEntry& e : lex.entries) {
    words.insert(e.word);
    EXPECT_FALSE(e.output.empty());
  }
  EXPECT_EQ(words.size(), 500u);
}

TEST(LexiconTest, GeneratedLexiconBuilds) {
  LexiconFile lex = generate_lexicon({.seed = 3, .size = 300});
  Dictionary d = to_dictionary(lex);
  Transducer t = build_p_subsequential(d);
  for (const WordOutputPair& p : d.pairs) {
    std::vector<OutputString> all = lookup_all(t, p.word);
    EXPECT_NE(std::find(all.begin(), all.end(), p.output), all.end());
  }
}

TEST(LexiconTest, AmbiguityRateAddsSecondTranscriptions) {
  LexiconFile lex =
      generate_lexicon({.seed = 4, .size = 400, .ambiguity_rate = 0.3});
  Dictionary d = to_dictionary(lex);
  std::size_t p = max_ambiguity(group_by_word(d.pairs));
  EXPECT_EQ(p, 2u);
}

}  // namespace
}  // namespace seqfst
