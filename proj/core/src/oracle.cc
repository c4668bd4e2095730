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

#include <algorithm>
#include <limits>
#include <set>
#include <tuple>

#include "seqfst/errors.h"
#include "seqfst/traversal.h"

namespace seqfst::oracle {
namespace {

constexpr std::size_t kNoClass = std::numeric_limits<std::size_t>::max();

std::vector<std::string> texts(const SymbolTable& symbols,
                               std::span<const Symbol> ids) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (Symbol s : ids) out.push_back(symbols.text(s));
  return out;
}

}  // namespace

Transducer build_trie_st(const SymbolTable& input_symbols,
                         const SymbolTable& output_symbols,
                         std::span<const WordOutputPair> pairs) {
  std::map<Word, OutputString> f;
  for (const WordOutputPair& p : pairs) {
    auto [it, inserted] = f.emplace(p.word, p.output);
    if (!inserted && it->second != p.output) {
      throw NotSequential(word_text(input_symbols, p.word),
                          "two different outputs");
    }
  }

  Transducer t(input_symbols, output_symbols);
  // emitted[q]: output accumulated on the way to q, i.e. the output of the
  // nearest accepted ancestor. Words come in lexicographic order, so every
  // accepted prefix of a word is inserted before the word itself.
  std::vector<OutputString> emitted(1);
  for (const auto& [word, output] : f) {
    StateId q = t.initial();
    StateId parent = kNoState;
    Symbol last = 0;
    for (Symbol a : word) {
      parent = q;
      last = a;
      if (const Arc* arc = t.find_arc(q, a)) {
        q = arc->target;
        continue;
      }
      StateId next = t.add_state();
      if (next >= emitted.size()) emitted.resize(next + 1);
      emitted[next] = emitted[q];
      t.set_transition(q, a, {}, next);
      q = next;
    }
    if (parent == kNoState) {
      if (!output.empty()) {
        throw NotSequential("", "the empty word cannot carry an output");
      }
      t.set_final(q, true);
      continue;
    }
    if (!is_prefix(emitted[parent], output)) {
      throw NotSequential(word_text(input_symbols, word),
                          "output of an accepted prefix is not a prefix");
    }
    t.set_output(parent, last, remainder(emitted[parent], output));
    t.set_final(q, true);
    emitted[q] = output;
  }
  return t;
}

Transducer trim(const Transducer& t) {
  const std::vector<StateId> order = topological_order(t);
  std::vector<bool> useful(t.arena_size(), false);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    bool u = t.is_final(*it);
    for (const Arc& arc : t.state(*it).arcs) u = u || useful[arc.target];
    useful[*it] = u;
  }
  Transducer out(t.input_symbols(), t.output_symbols());
  std::vector<StateId> id(t.arena_size(), kNoState);
  id[t.initial()] = out.initial();
  for (StateId q : order) {
    if (q != t.initial() && useful[q]) id[q] = out.add_state();
  }
  for (StateId q : order) {
    if (id[q] == kNoState) continue;
    out.set_final(id[q], t.is_final(q));
    for (const Arc& arc : t.state(q).arcs) {
      if (useful[arc.target]) {
        out.set_transition(id[q], arc.input, arc.output, id[arc.target]);
      }
    }
  }
  return out;
}

Transducer prefix_normalize(const Transducer& input) {
  Transducer t = trim(input);
  const std::vector<StateId> order = topological_order(t);
  // lcp[q]: longest common prefix of all continuation outputs from q.
  std::vector<OutputString> lcp_of(t.arena_size());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const StateId q = *it;
    if (t.is_final(q)) continue;  // ε is a continuation
    bool first = true;
    OutputString common;
    for (const Arc& arc : t.state(q).arcs) {
      OutputString c = concat(arc.output, lcp_of[arc.target]);
      common = first ? c : lcp(common, c);
      first = false;
    }
    lcp_of[q] = common;
  }
  lcp_of[t.initial()] = {};  // nothing can be emitted before the first arc
  for (StateId q : order) {
    for (const Arc& arc : t.state(q).arcs) {
      t.set_output(q, arc.input,
                   remainder(lcp_of[q], concat(arc.output, lcp_of[arc.target])));
    }
  }
  return t;
}

std::vector<std::size_t> signature_classes(const Transducer& t) {
  using Key = std::tuple<bool, std::vector<std::tuple<Symbol, OutputString,
                                                      std::size_t>>>;
  std::map<Key, std::size_t> classes;
  std::vector<std::size_t> class_of(t.arena_size(), kNoClass);
  const std::vector<StateId> order = topological_order(t);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const State& s = t.state(*it);
    Key key{s.is_final, {}};
    for (const Arc& arc : s.arcs) {
      std::get<1>(key).emplace_back(arc.input, arc.output,
                                    class_of[arc.target]);
    }
    auto [pos, inserted] = classes.emplace(std::move(key), classes.size());
    class_of[*it] = pos->second;
  }
  return class_of;
}

Transducer minimize_global(const Transducer& input) {
  Transducer t = trim(input);
  const std::vector<std::size_t> class_of = signature_classes(t);
  std::size_t num_classes = 0;
  for (std::size_t c : class_of) {
    if (c != kNoClass) num_classes = std::max(num_classes, c + 1);
  }
  std::vector<StateId> representative(num_classes, kNoState);
  for (StateId q : topological_order(t)) {
    if (representative[class_of[q]] == kNoState) representative[class_of[q]] = q;
  }

  Transducer out(t.input_symbols(), t.output_symbols());
  std::vector<StateId> id(num_classes, kNoState);
  id[class_of[t.initial()]] = out.initial();
  for (std::size_t c = 0; c < num_classes; ++c) {
    if (id[c] == kNoState) id[c] = out.add_state();
  }
  for (std::size_t c = 0; c < num_classes; ++c) {
    const State& s = t.state(representative[c]);
    out.set_final(id[c], s.is_final);
    for (const Arc& arc : s.arcs) {
      out.set_transition(id[c], arc.input, arc.output, id[class_of[arc.target]]);
    }
  }
  return out;
}

Transducer minimal_st(const SymbolTable& input_symbols,
                      const SymbolTable& output_symbols,
                      std::span<const WordOutputPair> pairs) {
  return minimize_global(
      prefix_normalize(build_trie_st(input_symbols, output_symbols, pairs)));
}

TextFunction text_function(const Transducer& t, std::size_t cap) {
  TextFunction f;
  for (const auto& [word, output] : right_language(t, t.initial(), cap)) {
    f.emplace(texts(t.input_symbols(), word),
              texts(t.output_symbols(), output.tokens()));
  }
  return f;
}

bool equivalent_functions(const Transducer& a, const Transducer& b) {
  return text_function(a) == text_function(b);
}

bool isomorphic(const Transducer& a, const Transducer& b) {
  std::vector<StateId> a_to_b(a.arena_size(), kNoState);
  std::vector<StateId> b_to_a(b.arena_size(), kNoState);
  std::vector<std::pair<StateId, StateId>> todo{{a.initial(), b.initial()}};
  a_to_b[a.initial()] = b.initial();
  b_to_a[b.initial()] = a.initial();
  while (!todo.empty()) {
    auto [p, q] = todo.back();
    todo.pop_back();
    const State& sp = a.state(p);
    const State& sq = b.state(q);
    if (sp.is_final != sq.is_final || sp.arcs.size() != sq.arcs.size()) {
      return false;
    }
    for (const Arc& arc : sp.arcs) {
      auto input = b.input_symbols().find(a.input_symbols().text(arc.input));
      if (!input) return false;
      const Arc* other = sq.find(*input);
      if (other == nullptr || other->output.size() != arc.output.size()) {
        return false;
      }
      for (std::size_t i = 0; i < arc.output.size(); ++i) {
        if (a.output_symbols().text(arc.output[i]) !=
            b.output_symbols().text(other->output[i])) {
          return false;
        }
      }
      StateId pt = arc.target;
      StateId qt = other->target;
      if (a_to_b[pt] == kNoState && b_to_a[qt] == kNoState) {
        a_to_b[pt] = qt;
        b_to_a[qt] = pt;
        todo.emplace_back(pt, qt);
      } else if (a_to_b[pt] != qt || b_to_a[qt] != pt) {
        return false;
      }
    }
  }
  return true;
}

bool states_equivalent(const Transducer& t, StateId q1, StateId q2) {
  return right_language(t, q1) == right_language(t, q2);
}

bool is_prefix_normalized(const Transducer& t, StateId* offender) {
  for (StateId q : topological_order(t)) {
    if (q == t.initial()) continue;
    const auto language = right_language(t, q);
    if (language.empty()) continue;
    auto it = language.begin();
    OutputString common = it->second;
    for (++it; it != language.end() && !common.empty(); ++it) {
      common = lcp(common, it->second);
    }
    if (!common.empty()) {
      if (offender != nullptr) *offender = q;
      return false;
    }
  }
  return true;
}

bool has_no_equivalent_pair(const Transducer& t) {
  std::set<std::map<Word, OutputString>> seen;
  for (StateId q : topological_order(t)) {
    if (!seen.insert(right_language(t, q)).second) return false;
  }
  return true;
}

}  // namespace seqfst::oracle
