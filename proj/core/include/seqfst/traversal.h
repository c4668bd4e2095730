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

#ifndef SEQFST_TRAVERSAL_H_
#define SEQFST_TRAVERSAL_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seqfst/output_string.h"
#include "seqfst/transducer.h"

namespace seqfst {

struct PrefixPath {
  // states[0] is the initial state; states[i] = δ*(q0, w[0..i)).
  std::vector<StateId> states;
  // Number of symbols of w matched, i.e. |w ∧ T|.
  std::size_t matched = 0;
};

// Walks w from the initial state as far as transitions are defined.
PrefixPath longest_prefix_path(const Transducer& t, std::span<const Symbol> w);

struct LookupResult {
  // σ*(q0, w) when w is accepted.
  std::optional<OutputString> output;
  // Transitions followed.
  std::size_t transitions = 0;
};

LookupResult lookup_counted(const Transducer& t, std::span<const Symbol> w);

// f_T(w), or nullopt when w is not accepted.
inline std::optional<OutputString> lookup(const Transducer& t,
                                          std::span<const Symbol> w) {
  return lookup_counted(t, w).output;
}

// The default cap on enumerated strings.
inline constexpr std::size_t kEnumerationCap = 1'000'000;

// All (w, σ*(q, w)) with δ*(q, w) final. Throws CyclicInput on a cycle and
// EnumerationLimit once more than `cap` strings have been produced.
std::map<Word, OutputString> right_language(const Transducer& t, StateId q,
                                            std::size_t cap = kEnumerationCap);

// Live states reachable from the initial state, every state before its
// successors. Throws CyclicInput.
std::vector<StateId> topological_order(const Transducer& t);

// Structural problems found by validate(); empty when the transducer is
// deterministic, acyclic, trim, has exact in-degree counters and only
// references live states.
std::vector<std::string> validate(const Transducer& t);

// Rendering helpers.
std::string word_text(const SymbolTable& symbols, std::span<const Symbol> w);
std::string output_text(const SymbolTable& symbols, const OutputString& o);

}  // namespace seqfst

#endif  // SEQFST_TRAVERSAL_H_
