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

#ifndef SEQFST_TRANSDUCER_H_
#define SEQFST_TRANSDUCER_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "seqfst/output_string.h"
#include "seqfst/symbol_table.h"

namespace seqfst {

// Index into the state arena of a Transducer.
using StateId = std::uint32_t;
inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();

struct Arc {
  Symbol input = 0;
  OutputString output;
  StateId target = kNoState;

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct State {
  // Sorted by input symbol, at most one arc per symbol.
  std::vector<Arc> arcs;
  bool is_final = false;

  const Arc* find(Symbol input) const;
};

// Acyclic sequential transducer stored as an arena of states. Every change
// to the transition structure goes through set_transition / clone_state /
// release_state so that the per-state in-degree counters stay exact.
//
// State ids of released states are parked until recycle_released() is
// called; builders call it once per completed insertion so that no register
// entry can refer to a recycled id mid-iteration.
class Transducer {
 public:
  // Creates a transducer holding a single non-final initial state.
  Transducer();
  Transducer(SymbolTable input_symbols, SymbolTable output_symbols);

  StateId initial() const { return initial_; }

  StateId add_state(bool is_final = false);
  bool is_live(StateId q) const { return q < live_.size() && live_[q]; }
  const State& state(StateId q) const { return states_[q]; }
  bool is_final(StateId q) const { return states_[q].is_final; }
  void set_final(StateId q, bool is_final) { states_[q].is_final = is_final; }

  const Arc* find_arc(StateId q, Symbol input) const {
    return states_[q].find(input);
  }

  // δ(q, a) := r, σ(q, a) := o. Adjusts the in-degrees of the previous and
  // the new target.
  void set_transition(StateId q, Symbol a, OutputString o, StateId r);
  // σ(q, a) := o for an existing arc.
  void set_output(StateId q, Symbol a, OutputString o);
  // Prepends `residual` to the output of every arc leaving q.
  void prepend_outputs(StateId q, const OutputString& residual);

  // Copy of q (finality and arcs); the new state has in-degree 0.
  StateId clone_state(StateId q);

  // Deletes q, which must be live, unreferenced and not the initial state.
  void release_state(StateId q);
  // Makes the ids of states released so far available to add_state().
  void recycle_released();

  std::size_t in_degree(StateId q) const { return in_degree_[q]; }

  // Number of live states / arcs.
  std::size_t num_states() const { return num_live_; }
  std::size_t num_arcs() const { return num_arcs_; }
  // Size of the arena, i.e. one past the largest id ever handed out.
  std::size_t arena_size() const { return states_.size(); }
  std::vector<StateId> live_states() const;

  SymbolTable& input_symbols() { return input_symbols_; }
  const SymbolTable& input_symbols() const { return input_symbols_; }
  SymbolTable& output_symbols() { return output_symbols_; }
  const SymbolTable& output_symbols() const { return output_symbols_; }

 private:
  std::vector<State> states_;
  std::vector<std::uint32_t> in_degree_;
  std::vector<bool> live_;
  std::vector<StateId> free_;
  std::vector<StateId> released_;
  StateId initial_ = 0;
  std::size_t num_live_ = 0;
  std::size_t num_arcs_ = 0;
  SymbolTable input_symbols_;
  SymbolTable output_symbols_;
};

}  // namespace seqfst

#endif  // SEQFST_TRANSDUCER_H_
