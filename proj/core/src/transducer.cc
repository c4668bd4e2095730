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

#include "seqfst/transducer.h"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace seqfst {
namespace {

auto lower_bound_arc(std::vector<Arc>& arcs, Symbol a) {
  return std::lower_bound(
      arcs.begin(), arcs.end(), a,
      [](const Arc& arc, Symbol s) { return arc.input < s; });
}

}  // namespace

const Arc* State::find(Symbol input) const {
  auto it = std::lower_bound(
      arcs.begin(), arcs.end(), input,
      [](const Arc& arc, Symbol s) { return arc.input < s; });
  if (it == arcs.end() || it->input != input) return nullptr;
  return &*it;
}

Transducer::Transducer() { initial_ = add_state(false); }

Transducer::Transducer(SymbolTable input_symbols, SymbolTable output_symbols)
    : input_symbols_(std::move(input_symbols)),
      output_symbols_(std::move(output_symbols)) {
  initial_ = add_state(false);
}

StateId Transducer::add_state(bool is_final) {
  StateId q;
  if (!free_.empty()) {
    q = free_.back();
    free_.pop_back();
    states_[q] = State{};
    in_degree_[q] = 0;
    live_[q] = true;
  } else {
    q = static_cast<StateId>(states_.size());
    states_.emplace_back();
    in_degree_.push_back(0);
    live_.push_back(true);
  }
  states_[q].is_final = is_final;
  ++num_live_;
  return q;
}

void Transducer::set_transition(StateId q, Symbol a, OutputString o,
                                StateId r) {
  assert(is_live(q) && is_live(r));
  auto& arcs = states_[q].arcs;
  auto it = lower_bound_arc(arcs, a);
  ++in_degree_[r];
  if (it != arcs.end() && it->input == a) {
    --in_degree_[it->target];
    it->output = std::move(o);
    it->target = r;
  } else {
    arcs.insert(it, Arc{a, std::move(o), r});
    ++num_arcs_;
  }
}

void Transducer::set_output(StateId q, Symbol a, OutputString o) {
  auto& arcs = states_[q].arcs;
  auto it = lower_bound_arc(arcs, a);
  if (it == arcs.end() || it->input != a) {
    throw std::logic_error("set_output: no such transition");
  }
  it->output = std::move(o);
}

void Transducer::prepend_outputs(StateId q, const OutputString& residual) {
  if (residual.empty()) return;
  for (Arc& arc : states_[q].arcs) arc.output.prepend(residual);
}

StateId Transducer::clone_state(StateId q) {
  assert(is_live(q));
  StateId copy = add_state(states_[q].is_final);
  // add_state may reallocate states_, so index again.
  states_[copy].arcs = states_[q].arcs;
  for (const Arc& arc : states_[copy].arcs) ++in_degree_[arc.target];
  num_arcs_ += states_[copy].arcs.size();
  return copy;
}

void Transducer::release_state(StateId q) {
  if (!is_live(q) || q == initial_ || in_degree_[q] != 0) {
    throw std::logic_error("release_state: state is still in use");
  }
  for (const Arc& arc : states_[q].arcs) --in_degree_[arc.target];
  num_arcs_ -= states_[q].arcs.size();
  states_[q] = State{};
  live_[q] = false;
  --num_live_;
  released_.push_back(q);
}

void Transducer::recycle_released() {
  free_.insert(free_.end(), released_.begin(), released_.end());
  released_.clear();
}

std::vector<StateId> Transducer::live_states() const {
  std::vector<StateId> result;
  result.reserve(num_live_);
  for (StateId q = 0; q < states_.size(); ++q) {
    if (live_[q]) result.push_back(q);
  }
  return result;
}

}  // namespace seqfst
