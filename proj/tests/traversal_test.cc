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

#include "seqfst/traversal.h"

#include "gtest/gtest.h"
#include "seqfst/errors.h"
#include "seqfst/st_builder.h"
#include "test_util.h"

namespace seqfst {
namespace {

using testing::dictionary_from;
using testing::kPronunciationFragment;
using testing::output_of;
using testing::word_of;

class FragmentTest : public ::testing::Test {
 protected:
  FragmentTest() : t_(build(dictionary_from(kPronunciationFragment))) {}

  Word w(std::string_view text) { return word_of(t_.input_symbols(), text); }
  OutputString o(std::string_view text) {
    return output_of(t_.output_symbols(), text);
  }

  Transducer t_;
};

TEST_F(FragmentTest, LookupReturnsEveryEntry) {
  EXPECT_EQ(lookup(t_, w("but")), o("b uh t"));
  EXPECT_EQ(lookup(t_, w("bite")), o("b ai t"));
  EXPECT_EQ(lookup(t_, w("cut")), o("k uh t"));
  EXPECT_EQ(lookup(t_, w("cite")), o("s ai t"));
}

TEST_F(FragmentTest, LookupRejectsOtherWords) {
  EXPECT_FALSE(lookup(t_, w("bu")).has_value());
  EXPECT_FALSE(lookup(t_, w("butt")).has_value());
  EXPECT_FALSE(lookup(t_, w("")).has_value());
  EXPECT_FALSE(lookup(t_, w("x")).has_value());
}

TEST_F(FragmentTest, LookupCountsOneTransitionPerSymbol) {
  EXPECT_EQ(lookup_counted(t_, w("bite")).transitions, 4u);
  LookupResult miss = lookup_counted(t_, w("bx"));
  EXPECT_FALSE(miss.output.has_value());
  EXPECT_EQ(miss.transitions, 1u);
}

TEST_F(FragmentTest, LongestPrefixPath) {
  PrefixPath full = longest_prefix_path(t_, w("cite"));
  EXPECT_EQ(full.matched, 4u);
  EXPECT_EQ(full.states.size(), 5u);
  EXPECT_EQ(full.states.front(), t_.initial());
  EXPECT_TRUE(t_.is_final(full.states.back()));

  PrefixPath partial = longest_prefix_path(t_, w("bat"));
  EXPECT_EQ(partial.matched, 1u);
  EXPECT_EQ(partial.states.size(), 2u);

  PrefixPath none = longest_prefix_path(t_, w("zz"));
  EXPECT_EQ(none.matched, 0u);
  EXPECT_EQ(none.states, std::vector<StateId>{t_.initial()});
}

TEST_F(FragmentTest, RightLanguageOfInitialStateIsTheDictionary) {
  auto lang = right_language(t_, t_.initial());
  ASSERT_EQ(lang.size(), 4u);
  EXPECT_EQ(lang.at(w("cut")), o("k uh t"));
  // Below "b" the continuation outputs carry no shared prefix.
  StateId after_b = t_.find_arc(t_.initial(), w("b")[0])->target;
  auto below = right_language(t_, after_b);
  ASSERT_EQ(below.size(), 2u);
  EXPECT_EQ(below.at(w("ut")), o("uh t"));
  EXPECT_EQ(below.at(w("ite")), o("ai t"));
}

TEST_F(FragmentTest, IsValid) { EXPECT_TRUE(validate(t_).empty()); }

TEST_F(FragmentTest, TopologicalOrderPutsSourcesFirst) {
  std::vector<StateId> order = topological_order(t_);
  ASSERT_EQ(order.size(), t_.num_states());
  std::vector<std::size_t> position(t_.arena_size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  EXPECT_EQ(order.front(), t_.initial());
  for (StateId q : t_.live_states()) {
    for (const Arc& arc : t_.state(q).arcs) {
      EXPECT_LT(position[q], position[arc.target]);
    }
  }
}

TEST_F(FragmentTest, TextRendering) {
  EXPECT_EQ(word_text(t_.input_symbols(), w("cite")), "cite");
  EXPECT_EQ(output_text(t_.output_symbols(), o("s ai t")), "s ai t");
  EXPECT_EQ(output_text(t_.output_symbols(), {}), "");
}

TEST(TraversalTest, EmptyTransducerIsValidAndEmpty) {
  Transducer t;
  EXPECT_TRUE(validate(t).empty());
  EXPECT_TRUE(right_language(t, t.initial()).empty());
}

TEST(TraversalTest, CyclesAreDetected) {
  Transducer t;
  StateId p = t.add_state(true);
  t.set_transition(t.initial(), 0, {}, p);
  t.set_transition(p, 0, {}, t.initial());
  EXPECT_THROW(right_language(t, t.initial()), CyclicInput);
  EXPECT_THROW(topological_order(t), CyclicInput);
  auto problems = validate(t);
  ASSERT_FALSE(problems.empty());
  EXPECT_NE(problems[0].find("cycle"), std::string::npos);
}

TEST(TraversalTest, EnumerationCapIsEnforced) {
  // Two parallel arcs per layer: 2^10 words.
  Transducer t;
  StateId q = t.initial();
  for (int i = 0; i < 10; ++i) {
    StateId r = t.add_state(i == 9);
    t.set_transition(q, 0, {}, r);
    t.set_transition(q, 1, {}, r);
    q = r;
  }
  EXPECT_EQ(right_language(t, t.initial()).size(), 1024u);
  EXPECT_THROW(right_language(t, t.initial(), 1000), EnumerationLimit);
}

TEST(TraversalTest, ValidateReportsStructuralProblems) {
  Transducer t;
  StateId dead_end = t.add_state();
  StateId orphan = t.add_state(true);
  t.set_transition(t.initial(), 0, {}, dead_end);
  auto problems = validate(t);
  auto mentions = [&](const std::string& needle) {
    for (const auto& p : problems) {
      if (p.find(needle) != std::string::npos) return true;
    }
    return false;
  };
  EXPECT_TRUE(mentions("state " + std::to_string(orphan) + ": unreachable"));
  EXPECT_TRUE(mentions("state " + std::to_string(dead_end) +
                       ": cannot reach a final state"));
}

}  // namespace
}  // namespace seqfst
