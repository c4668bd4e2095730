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

#include "seqfst/oracle.h"

#include <random>

#include "gtest/gtest.h"
#include "seqfst/errors.h"
#include "seqfst/traversal.h"
#include "test_util.h"

namespace seqfst {
namespace {

using testing::output_of;
using testing::word_of;

struct Fixture {
  Dictionary dict;
  Word w(std::string_view text) { return word_of(dict.input_symbols, text); }
  OutputString o(std::string_view text) {
    return output_of(dict.output_symbols, text);
  }
  void add(std::string_view word, std::string_view out) {
    dict.pairs.push_back({w(word), o(out)});
  }
  Transducer trie() {
    return oracle::build_trie_st(dict.input_symbols, dict.output_symbols,
                                 dict.pairs);
  }
};

TEST(OracleTest, FragmentTrie) {
  Dictionary d = testing::dictionary_from(testing::kPronunciationFragment);
  Transducer trie =
      oracle::build_trie_st(d.input_symbols, d.output_symbols, d.pairs);
  EXPECT_EQ(trie.num_states(), 13u);
  EXPECT_EQ(trie.num_arcs(), 12u);
  EXPECT_TRUE(validate(trie).empty());
  Transducer m = oracle::minimal_st(d.input_symbols, d.output_symbols, d.pairs);
  EXPECT_EQ(m.num_states(), 7u);
  EXPECT_TRUE(oracle::equivalent_functions(trie, m));
}

TEST(OracleTest, TrieOutputsAreRelativeToAcceptedPrefix) {
  Fixture f;
  f.add("a", "x");
  f.add("abc", "x y z");
  Transducer trie = f.trie();
  EXPECT_EQ(lookup(trie, f.w("abc")), f.o("x y z"));
  const Arc* last = trie.find_arc(
      longest_prefix_path(trie, f.w("ab")).states.back(), f.w("c")[0]);
  ASSERT_NE(last, nullptr);
  EXPECT_EQ(last->output, f.o("y z"));
}

TEST(OracleTest, TrieRejectsNonSequentialData) {
  Fixture f;
  f.add("a", "x");
  f.add("ab", "y");
  EXPECT_THROW(f.trie(), NotSequential);
  Fixture g;
  g.add("ab", "x");
  g.add("ab", "y");
  EXPECT_THROW(g.trie(), NotSequential);
}

TEST(OracleTest, PrefixNormalizeHoistsCommonOutput) {
  Fixture f;
  f.add("ab", "x y");
  f.add("ac", "x z");
  Transducer n = oracle::prefix_normalize(f.trie());
  EXPECT_EQ(n.find_arc(n.initial(), f.w("a")[0])->output, f.o("x"));
  StateId q = n.find_arc(n.initial(), f.w("a")[0])->target;
  EXPECT_EQ(n.find_arc(q, f.w("b")[0])->output, f.o("y"));
  EXPECT_EQ(n.find_arc(q, f.w("c")[0])->output, f.o("z"));
  EXPECT_TRUE(oracle::is_prefix_normalized(n));
  EXPECT_TRUE(oracle::equivalent_functions(n, f.trie()));
}

TEST(OracleTest, NormalisationIsIdempotent) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    Dictionary d =
        testing::encode_with_sentinels(testing::random_dictionary(rng, {}));
    Transducer m = oracle::minimal_st(d.input_symbols, d.output_symbols, d.pairs);
    ASSERT_TRUE(oracle::isomorphic(m, oracle::prefix_normalize(m)));
    ASSERT_TRUE(oracle::isomorphic(m, oracle::minimize_global(m)));
    ASSERT_TRUE(oracle::is_prefix_normalized(m));
    ASSERT_TRUE(oracle::has_no_equivalent_pair(m));
  }
}

TEST(OracleTest, TrimDropsUselessStates) {
  Transducer t;
  StateId good = t.add_state(true);
  StateId dead_end = t.add_state();
  t.add_state(true);  // unreachable
  t.set_transition(t.initial(), 0, {}, good);
  t.set_transition(t.initial(), 1, {}, dead_end);
  Transducer trimmed = oracle::trim(t);
  EXPECT_EQ(trimmed.num_states(), 2u);
  EXPECT_TRUE(validate(trimmed).empty());
}

TEST(OracleTest, IsomorphismComparesLabels) {
  Fixture f;
  f.add("ab", "x");
  Fixture g;
  g.add("ab", "y");
  Fixture h;
  h.add("ab", "x");
  EXPECT_TRUE(oracle::isomorphic(f.trie(), h.trie()));
  EXPECT_FALSE(oracle::isomorphic(f.trie(), g.trie()));
  EXPECT_FALSE(oracle::equivalent_functions(f.trie(), g.trie()));
  // Same function, different shape.
  Fixture k;
  k.add("ab", "x");
  k.add("cb", "x");
  Transducer trie = k.trie();
  Transducer m = oracle::minimize_global(oracle::prefix_normalize(trie));
  EXPECT_TRUE(oracle::equivalent_functions(trie, m));
  EXPECT_FALSE(oracle::isomorphic(trie, m));
  EXPECT_LT(m.num_states(), trie.num_states());
}

TEST(OracleTest, StatesEquivalent) {
  Fixture f;
  f.add("ab", "x");
  f.add("cb", "x");
  f.add("db", "y");
  Transducer n = oracle::prefix_normalize(f.trie());
  auto after = [&](std::string_view s) {
    return longest_prefix_path(n, f.w(s)).states.back();
  };
  EXPECT_TRUE(oracle::states_equivalent(n, after("a"), after("c")));
  EXPECT_TRUE(oracle::states_equivalent(n, after("a"), after("d")));
  EXPECT_FALSE(oracle::states_equivalent(n, after("a"), after("ab")));
  EXPECT_FALSE(oracle::has_no_equivalent_pair(n));
  EXPECT_TRUE(oracle::has_no_equivalent_pair(oracle::minimize_global(n)));
}

TEST(OracleTest, DetectsNonNormalisedState) {
  Fixture f;
  f.add("ab", "x y");
  f.add("ac", "x z");
  Transducer trie = f.trie();  // outputs sit on the last arcs
  StateId offender = kNoState;
  EXPECT_FALSE(oracle::is_prefix_normalized(trie, &offender));
  EXPECT_EQ(offender, trie.find_arc(trie.initial(), f.w("a")[0])->target);
}

// For normalised acyclic transducers the class signature decides
// equivalence.
TEST(OracleTest, SignatureClassesMatchEquivalenceOnRandomDags) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    Transducer t = oracle::prefix_normalize(
        testing::random_acyclic_st(rng, 8, 2, 2, 2));
    std::vector<std::size_t> cls = oracle::signature_classes(t);
    std::vector<StateId> live = t.live_states();
    for (StateId p : live) {
      for (StateId q : live) {
        if (p == t.initial() || q == t.initial()) continue;
        ASSERT_EQ(cls[p] == cls[q], oracle::states_equivalent(t, p, q))
            << "trial " << trial;
      }
    }
  }
}

TEST(OracleTest, TextFunctionRendersSymbols) {
  Fixture f;
  f.add("ab", "x y");
  oracle::TextFunction fn = oracle::text_function(f.trie());
  ASSERT_EQ(fn.size(), 1u);
  EXPECT_EQ(fn.begin()->first, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(fn.begin()->second, (std::vector<std::string>{"x", "y"}));
}

}  // namespace
}  // namespace seqfst
