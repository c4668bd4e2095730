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

// Subsequential and p-subsequential dictionaries on top of plain sequential
// transducers. A final output is emulated by an arc on a reserved
// end-of-string symbol $i, so a word with outputs o1..ok is stored as the
// pairs (w·$1, o1) .. (w·$k, ok).

#ifndef SEQFST_EXTENSIONS_H_
#define SEQFST_EXTENSIONS_H_

#include <cstddef>
#include <span>
#include <vector>

#include "seqfst/st_builder.h"
#include "seqfst/transducer.h"

namespace seqfst {

struct MultiDictEntry {
  Word word;
  // Pairwise distinct.
  std::vector<OutputString> outputs;
};

// Groups pairs by word. Identical pairs collapse; outputs are sorted.
std::vector<MultiDictEntry> group_by_word(std::span<const WordOutputPair> pairs);

// Largest number of outputs of any entry (0 for no entries).
std::size_t max_ambiguity(std::span<const MultiDictEntry> entries);

// (w, o) -> (w·sentinel, o).
std::vector<WordOutputPair> encode_subsequential(
    std::span<const WordOutputPair> pairs, Symbol sentinel);

// Outputs of each entry are sorted by token ids and the i-th one is attached
// to sentinels[i]. Throws AmbiguityOverflow when an entry has more outputs
// than there are sentinels; `symbols` is only used for the message.
std::vector<WordOutputPair> encode_p_subsequential(
    std::span<const MultiDictEntry> entries, std::span<const Symbol> sentinels,
    const SymbolTable* symbols = nullptr);

// Outputs of every accepted w·$i, in sentinel order.
std::vector<OutputString> lookup_all(const Transducer& t,
                                     std::span<const Symbol> word);

// Builds a p-subsequential dictionary: reserves $1..$p in a copy of the
// input table of `dictionary` (p = max ambiguity when p == 0), encodes and
// builds.
Transducer build_p_subsequential(const Dictionary& dictionary, std::size_t p = 0,
                                 BuilderConfig config = {});

// Number of arcs labelled with a sentinel.
std::size_t count_sentinel_arcs(const Transducer& t);

}  // namespace seqfst

#endif  // SEQFST_EXTENSIONS_H_
