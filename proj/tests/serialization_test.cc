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

#include "seqfst/serialization.h"

#include <cstdio>
#include <filesystem>
#include <random>

#include "gtest/gtest.h"
#include "seqfst/errors.h"
#include "seqfst/extensions.h"
#include "seqfst/fsa_builder.h"
#include "seqfst/lexicon.h"
#include "seqfst/oracle.h"
#include "seqfst/traversal.h"
#include "test_util.h"

namespace seqfst {
namespace {

Transducer fragment_with_sentinels() {
  return build_p_subsequential(
      testing::dictionary_from(testing::kPronunciationFragment));
}

TEST(SerializationTest, TextRoundTrip) {
  Transducer t = fragment_with_sentinels();
  std::string text = to_text(t);
  Transducer back = from_text(text);
  EXPECT_TRUE(oracle::isomorphic(t, back));
  EXPECT_EQ(back.input_symbols(), t.input_symbols());
  EXPECT_EQ(back.output_symbols(), t.output_symbols());
  EXPECT_EQ(back.input_symbols().sentinels(), t.input_symbols().sentinels());
  EXPECT_EQ(to_text(back), text);
  EXPECT_TRUE(validate(back).empty());
}

TEST(SerializationTest, BinaryRoundTrip) {
  Transducer t = fragment_with_sentinels();
  std::vector<std::uint8_t> bytes = to_binary(t);
  Transducer back = from_binary(bytes);
  EXPECT_TRUE(oracle::isomorphic(t, back));
  EXPECT_EQ(back.input_symbols(), t.input_symbols());
  EXPECT_EQ(to_binary(back), bytes);
}

TEST(SerializationTest, DeserializeDetectsFormat) {
  Transducer t = fragment_with_sentinels();
  for (Format f : {Format::kText, Format::kBinary}) {
    Transducer back = deserialize(serialize(t, f));
    EXPECT_TRUE(oracle::isomorphic(t, back));
  }
}

TEST(SerializationTest, EmptyTransducerRoundTrips) {
  Transducer t;
  Transducer from_t = from_text(to_text(t));
  Transducer from_b = from_binary(to_binary(t));
  EXPECT_EQ(from_t.num_states(), 1u);
  EXPECT_EQ(from_b.num_states(), 1u);
  EXPECT_FALSE(from_t.is_final(from_t.initial()));
  EXPECT_EQ(from_b.num_arcs(), 0u);
}

TEST(SerializationTest, AutomatonWithInlineSymbolsRoundTrips) {
  InlineWordList list =
      to_inline_words(parse_lexicon(testing::kPronunciationFragment));
  Transducer a = fsa_build(list.symbols, list.words);
  Transducer back = from_text(to_text(a));
  EXPECT_TRUE(oracle::isomorphic(a, back));
  Symbol inline_b = *back.input_symbols().find("/b");
  EXPECT_EQ(back.input_symbols().kind(inline_b), SymbolKind::kInlineOutput);
}

TEST(SerializationTest, RandomTransducersRoundTrip) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    Dictionary d =
        testing::encode_with_sentinels(testing::random_dictionary(rng, {}));
    Transducer t = build(d);
    ASSERT_TRUE(oracle::isomorphic(t, from_text(to_text(t))));
    ASSERT_TRUE(oracle::isomorphic(t, from_binary(to_binary(t))));
  }
}

TEST(SerializationTest, CorruptedChecksumIsRejected) {
  std::vector<std::uint8_t> bytes = to_binary(fragment_with_sentinels());
  bytes[bytes.size() / 2] ^= 0x40;
  EXPECT_THROW(from_binary(bytes), FormatError);
}

TEST(SerializationTest, TruncatedOrExtendedBinaryIsRejected) {
  std::vector<std::uint8_t> bytes = to_binary(fragment_with_sentinels());
  std::vector<std::uint8_t> shorter(bytes.begin(), bytes.end() - 9);
  EXPECT_THROW(from_binary(shorter), FormatError);
  std::vector<std::uint8_t> longer = bytes;
  longer.push_back(0);
  EXPECT_THROW(from_binary(longer), FormatError);
  std::vector<std::uint8_t> version = bytes;
  version[4] = 9;
  EXPECT_THROW(from_binary(version), FormatError);
}

std::size_t error_line(std::string_view text) {
  try {
    from_text(text);
  } catch (const FormatError& e) {
    EXPECT_TRUE(e.is_line());
    return e.position();
  }
  ADD_FAILURE() << "no FormatError for:\n" << text;
  return 0;
}

TEST(SerializationTest, TextErrorsCarryLineNumbers) {
  const std::string head =
      "seqfst-text\t1\ninitial\t0\nstates\t2\nisym\t0\tsym\ta\n";
  EXPECT_EQ(error_line("bogus\t1\n"), 1u);
  EXPECT_EQ(error_line(head + "0\t1\tb\t\n1\n"), 5u);  // unknown input
  EXPECT_EQ(error_line(head + "0\t7\ta\t\n"), 5u);     // state out of range
  EXPECT_EQ(error_line(head + "0\t1\ta\t\n0\t1\ta\t\n1\n"), 6u);  // duplicate
  EXPECT_EQ(error_line(head + "0\t1\ta\tzz\n1\n"), 5u);  // unknown output
  EXPECT_EQ(error_line(head + "x\n"), 5u);
}

TEST(SerializationTest, TextAcceptsEmptyOutputField) {
  const std::string text =
      "seqfst-text\t1\ninitial\t0\nstates\t2\nisym\t0\tsym\ta\n"
      "osym\t0\tsym\tx\n0\t1\ta\n1\n";
  Transducer t = from_text(text);
  ASSERT_EQ(t.num_arcs(), 1u);
  EXPECT_EQ(lookup(t, Word{0}), OutputString{});
}

TEST(SerializationTest, FileRoundTrip) {
  Transducer t = fragment_with_sentinels();
  std::filesystem::path dir = std::filesystem::temp_directory_path();
  for (Format f : {Format::kText, Format::kBinary}) {
    std::filesystem::path path =
        dir / ("seqfst_serialization_test_" +
               std::to_string(static_cast<int>(f)));
    write_file(path.string(), t, f);
    EXPECT_TRUE(oracle::isomorphic(t, read_file(path.string())));
    std::filesystem::remove(path);
  }
  EXPECT_THROW(read_file((dir / "seqfst_missing_file").string()), Error);
}

}  // namespace
}  // namespace seqfst
