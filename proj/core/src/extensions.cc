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

#include "seqfst/extensions.h"

#include <algorithm>
#include <map>

#include "seqfst/errors.h"
#include "seqfst/traversal.h"

namespace seqfst {

std::vector<MultiDictEntry> group_by_word(
    std::span<const WordOutputPair> pairs) {
  std::map<Word, std::vector<OutputString>> grouped;
  for (const WordOutputPair& p : pairs) grouped[p.word].push_back(p.output);
  std::vector<MultiDictEntry> entries;
  entries.reserve(grouped.size());
  for (auto& [word, outputs] : grouped) {
    std::sort(outputs.begin(), outputs.end());
    outputs.erase(std::unique(outputs.begin(), outputs.end()), outputs.end());
    entries.push_back({word, std::move(outputs)});
  }
  return entries;
}

std::size_t max_ambiguity(std::span<const MultiDictEntry> entries) {
  std::size_t p = 0;
  for (const MultiDictEntry& e : entries) p = std::max(p, e.outputs.size());
  return p;
}

std::vector<WordOutputPair> encode_subsequential(
    std::span<const WordOutputPair> pairs, Symbol sentinel) {
  std::vector<WordOutputPair> encoded;
  encoded.reserve(pairs.size());
  for (const WordOutputPair& p : pairs) {
    Word w = p.word;
    w.push_back(sentinel);
    encoded.push_back({std::move(w), p.output});
  }
  return encoded;
}

std::vector<WordOutputPair> encode_p_subsequential(
    std::span<const MultiDictEntry> entries, std::span<const Symbol> sentinels,
    const SymbolTable* symbols) {
  std::vector<WordOutputPair> encoded;
  for (const MultiDictEntry& e : entries) {
    std::vector<OutputString> outputs = e.outputs;
    std::sort(outputs.begin(), outputs.end());
    outputs.erase(std::unique(outputs.begin(), outputs.end()), outputs.end());
    if (outputs.size() > sentinels.size()) {
      throw AmbiguityOverflow(
          symbols != nullptr ? word_text(*symbols, e.word) : std::string("?"),
          outputs.size(), sentinels.size());
    }
    for (std::size_t i = 0; i < outputs.size(); ++i) {
      Word w = e.word;
      w.push_back(sentinels[i]);
      encoded.push_back({std::move(w), std::move(outputs[i])});
    }
  }
  return encoded;
}

std::vector<OutputString> lookup_all(const Transducer& t,
                                     std::span<const Symbol> word) {
  std::vector<OutputString> outputs;
  // Walk the word once, then try each sentinel from the state reached.
  OutputString prefix;
  StateId q = t.initial();
  for (Symbol a : word) {
    const Arc* arc = t.find_arc(q, a);
    if (arc == nullptr) return outputs;
    prefix.append(arc->output);
    q = arc->target;
  }
  for (Symbol sentinel : t.input_symbols().sentinels()) {
    const Arc* arc = t.find_arc(q, sentinel);
    if (arc == nullptr || !t.is_final(arc->target)) continue;
    outputs.push_back(concat(prefix, arc->output));
  }
  return outputs;
}

Transducer build_p_subsequential(const Dictionary& dictionary, std::size_t p,
                                 BuilderConfig config) {
  std::vector<MultiDictEntry> entries = group_by_word(dictionary.pairs);
  if (p == 0) p = std::max<std::size_t>(1, max_ambiguity(entries));
  SymbolTable input_symbols = dictionary.input_symbols;
  std::vector<Symbol> sentinels = input_symbols.reserve_sentinels(p);
  std::vector<WordOutputPair> encoded =
      encode_p_subsequential(entries, sentinels, &input_symbols);
  return build(input_symbols, dictionary.output_symbols, encoded, config);
}

std::size_t count_sentinel_arcs(const Transducer& t) {
  std::size_t n = 0;
  for (StateId q : t.live_states()) {
    for (const Arc& arc : t.state(q).arcs) {
      if (t.input_symbols().is_sentinel(arc.input)) ++n;
    }
  }
  return n;
}

}  // namespace seqfst
