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

// Brute-force reference pipeline: build a trie, normalise it by hoisting
// outputs bottom-up, and minimise it globally. Shares only the data model
// with the incremental builders, so it can certify their results. Meant for
// desk-scale inputs; enumeration-based checks are exponential in general.

#ifndef SEQFST_ORACLE_H_
#define SEQFST_ORACLE_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "seqfst/st_builder.h"
#include "seqfst/transducer.h"
#include "seqfst/traversal.h"

namespace seqfst::oracle {

// Tree-shaped transducer with one path per word. Each word's output is
// emitted on the arc entering its end state, relative to the output of the
// nearest accepted proper prefix. Throws NotSequential when two pairs share
// a word with different outputs or an accepted prefix's output is not a
// prefix of a longer word's output.
Transducer build_trie_st(const SymbolTable& input_symbols,
                         const SymbolTable& output_symbols,
                         std::span<const WordOutputPair> pairs);

// Copy restricted to states that are reachable and co-reachable.
Transducer trim(const Transducer& t);

// Output pushing: every state other than the initial one ends up with an
// empty longest common prefix over its continuation outputs. The realised
// function is unchanged. Input must be acyclic; it is trimmed first.
Transducer prefix_normalize(const Transducer& t);

// Class id per state (indexed by StateId, kNoState-free for reachable
// states) from bottom-up signature hashing with targets replaced by their
// classes. For prefix-normalised acyclic input two states share a class iff
// they are equivalent.
std::vector<std::size_t> signature_classes(const Transducer& t);

// Merges states with equal class-level signatures. Input must be acyclic,
// trim and prefix-normalised for the result to be minimal.
Transducer minimize_global(const Transducer& t);

// trie -> normalise -> minimise.
Transducer minimal_st(const SymbolTable& input_symbols,
                      const SymbolTable& output_symbols,
                      std::span<const WordOutputPair> pairs);

// The realised function with every symbol rendered as text, so that
// transducers with different symbol tables can be compared.
using TextFunction =
    std::map<std::vector<std::string>, std::vector<std::string>>;
TextFunction text_function(const Transducer& t,
                           std::size_t cap = kEnumerationCap);

bool equivalent_functions(const Transducer& a, const Transducer& b);

// Finality- and label-preserving bijection between the reachable states.
// Labels are compared as text.
bool isomorphic(const Transducer& a, const Transducer& b);

// q1 ≡ q2: equal right languages with equal continuation outputs, decided by
// exhaustive enumeration.
bool states_equivalent(const Transducer& t, StateId q1, StateId q2);

// For every reachable state other than the initial one with a non-empty
// right language, the continuation outputs share no common prefix. Checked
// by enumeration. On failure `offender` (if given) receives the state.
bool is_prefix_normalized(const Transducer& t, StateId* offender = nullptr);

// No two distinct reachable states are equivalent (pairwise enumeration).
bool has_no_equivalent_pair(const Transducer& t);

}  // namespace seqfst::oracle

#endif  // SEQFST_ORACLE_H_
