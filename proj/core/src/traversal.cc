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

#include <algorithm>
#include <cstdint>

#include "seqfst/errors.h"

namespace seqfst {

PrefixPath longest_prefix_path(const Transducer& t, std::span<const Symbol> w) {
  PrefixPath path;
  StateId q = t.initial();
  path.states.push_back(q);
  for (Symbol a : w) {
    const Arc* arc = t.find_arc(q, a);
    if (arc == nullptr) break;
    q = arc->target;
    path.states.push_back(q);
    ++path.matched;
  }
  return path;
}

LookupResult lookup_counted(const Transducer& t, std::span<const Symbol> w) {
  LookupResult result;
  OutputString out;
  StateId q = t.initial();
  for (Symbol a : w) {
    const Arc* arc = t.find_arc(q, a);
    if (arc == nullptr) return result;
    ++result.transitions;
    out.append(arc->output);
    q = arc->target;
  }
  if (t.is_final(q)) result.output = std::move(out);
  return result;
}

std::map<Word, OutputString> right_language(const Transducer& t, StateId q,
                                            std::size_t cap) {
  std::map<Word, OutputString> result;
  // Iterative DFS; `on_path` detects cycles.
  struct Frame {
    StateId state;
    std::size_t next_arc;
    std::size_t output_size;  // size of `output` before entering `state`
  };
  std::vector<bool> on_path(t.arena_size(), false);
  std::vector<Frame> stack;
  Word word;
  std::vector<Symbol> output;

  auto enter = [&](StateId s) {
    if (on_path[s]) throw CyclicInput();
    on_path[s] = true;
    if (t.is_final(s)) {
      if (result.size() >= cap) throw EnumerationLimit(cap);
      result.emplace(word, OutputString(output));
    }
  };

  enter(q);
  stack.push_back({q, 0, 0});
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto& arcs = t.state(top.state).arcs;
    if (top.next_arc == arcs.size()) {
      on_path[top.state] = false;
      output.resize(top.output_size);
      stack.pop_back();
      if (!word.empty() && !stack.empty()) word.pop_back();
      continue;
    }
    const Arc& arc = arcs[top.next_arc++];
    std::size_t before = output.size();
    word.push_back(arc.input);
    output.insert(output.end(), arc.output.begin(), arc.output.end());
    enter(arc.target);
    stack.push_back({arc.target, 0, before});
  }
  return result;
}

namespace {

// Iterative DFS post-order over `roots`; throws CyclicInput on a back edge.
std::vector<StateId> post_order(const Transducer& t,
                                const std::vector<StateId>& roots) {
  enum : std::uint8_t { kWhite, kGray, kBlack };
  std::vector<std::uint8_t> color(t.arena_size(), kWhite);
  std::vector<StateId> order;
  std::vector<std::pair<StateId, std::size_t>> stack;
  for (StateId root : roots) {
    if (color[root] != kWhite) continue;
    color[root] = kGray;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [q, next] = stack.back();
      const auto& arcs = t.state(q).arcs;
      if (next == arcs.size()) {
        color[q] = kBlack;
        order.push_back(q);
        stack.pop_back();
        continue;
      }
      StateId r = arcs[next++].target;
      if (color[r] == kGray) throw CyclicInput();
      if (color[r] == kWhite) {
        color[r] = kGray;
        stack.emplace_back(r, 0);
      }
    }
  }
  return order;
}

}  // namespace

std::vector<StateId> topological_order(const Transducer& t) {
  std::vector<StateId> order = post_order(t, {t.initial()});
  std::reverse(order.begin(), order.end());
  return order;
}

std::vector<std::string> validate(const Transducer& t) {
  std::vector<std::string> problems;
  auto complain = [&](StateId q, const std::string& what) {
    problems.push_back("state " + std::to_string(q) + ": " + what);
  };
  if (!t.is_live(t.initial())) {
    problems.emplace_back("initial state is not live");
    return problems;
  }

  std::vector<std::size_t> indegree(t.arena_size(), 0);
  std::size_t arcs = 0;
  bool dangling = false;
  const std::vector<StateId> live = t.live_states();
  for (StateId q : live) {
    const auto& state_arcs = t.state(q).arcs;
    arcs += state_arcs.size();
    for (std::size_t i = 0; i < state_arcs.size(); ++i) {
      const Arc& arc = state_arcs[i];
      if (i > 0 && state_arcs[i - 1].input >= arc.input) {
        complain(q, "arcs not strictly sorted by input (nondeterministic)");
      }
      if (!t.is_live(arc.target)) {
        complain(q, "arc to dead state " + std::to_string(arc.target));
        dangling = true;
        continue;
      }
      ++indegree[arc.target];
    }
  }
  if (arcs != t.num_arcs()) problems.emplace_back("arc counter mismatch");
  if (live.size() != t.num_states()) {
    problems.emplace_back("state counter mismatch");
  }
  for (StateId q : live) {
    if (indegree[q] != t.in_degree(q)) {
      complain(q, "in-degree counter " + std::to_string(t.in_degree(q)) +
                      " but " + std::to_string(indegree[q]) + " arcs");
    }
  }
  if (dangling) return problems;

  std::vector<StateId> order;
  try {
    order = post_order(t, live);
  } catch (const CyclicInput&) {
    problems.emplace_back("cycle detected");
    return problems;
  }

  // Reachability from the initial state.
  std::vector<bool> reachable(t.arena_size(), false);
  std::vector<StateId> todo{t.initial()};
  reachable[t.initial()] = true;
  while (!todo.empty()) {
    StateId q = todo.back();
    todo.pop_back();
    for (const Arc& arc : t.state(q).arcs) {
      if (!reachable[arc.target]) {
        reachable[arc.target] = true;
        todo.push_back(arc.target);
      }
    }
  }
  // Co-reachability; post order visits successors first.
  std::vector<bool> useful(t.arena_size(), false);
  for (StateId q : order) {
    bool u = t.is_final(q);
    for (const Arc& arc : t.state(q).arcs) u = u || useful[arc.target];
    useful[q] = u;
  }
  for (StateId q : live) {
    if (!reachable[q]) complain(q, "unreachable");
    // A lone non-final initial state is the empty transducer.
    if (!useful[q] && !(q == t.initial() && t.state(q).arcs.empty())) {
      complain(q, "cannot reach a final state");
    }
  }
  return problems;
}

std::string word_text(const SymbolTable& symbols, std::span<const Symbol> w) {
  std::string s;
  for (Symbol a : w) s += symbols.text(a);
  return s;
}

std::string output_text(const SymbolTable& symbols, const OutputString& o) {
  std::string s;
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (i > 0) s += ' ';
    s += symbols.text(o[i]);
  }
  return s;
}

}  // namespace seqfst
