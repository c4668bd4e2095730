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

#include "seqfst/st_builder.h"

#include <stdexcept>
#include <string>

#include "seqfst/errors.h"
#include "seqfst/traversal.h"

namespace seqfst {

StateSignature StateSignature::of(const Transducer& t, StateId q) {
  const State& s = t.state(q);
  return {s.is_final, s.arcs};
}

std::size_t StateSignatureHash::operator()(
    const StateSignature& s) const noexcept {
  std::size_t seed = s.is_final ? 1 : 0;
  OutputStringHash output_hash;
  for (const Arc& arc : s.arcs) {
    hash_mix(seed, arc.input);
    hash_mix(seed, arc.target);
    hash_mix(seed, output_hash(arc.output));
  }
  return seed;
}

FsaSignature FsaSignature::of(const Transducer& t, StateId q) {
  const State& s = t.state(q);
  FsaSignature sig{s.is_final, {}};
  sig.arcs.reserve(s.arcs.size());
  for (const Arc& arc : s.arcs) sig.arcs.emplace_back(arc.input, arc.target);
  return sig;
}

std::size_t FsaSignatureHash::operator()(const FsaSignature& s) const noexcept {
  std::size_t seed = s.is_final ? 1 : 0;
  for (const auto& [input, target] : s.arcs) {
    hash_mix(seed, input);
    hash_mix(seed, target);
  }
  return seed;
}

namespace internal {

template <typename Signature, typename Hash>
IncrementalBuilder<Signature, Hash>::IncrementalBuilder(
    SymbolTable input_symbols, SymbolTable output_symbols, BuilderConfig config)
    : t_(std::move(input_symbols), std::move(output_symbols)),
      config_(config) {}

template <typename Signature, typename Hash>
void IncrementalBuilder<Signature, Hash>::add(std::span<const Symbol> word,
                                              const OutputString& output) {
  if (probe(word, output) == Probe::kDuplicate) return;
  insert(word, output);
  remove_duplicates(word);
  t_.recycle_released();
}

// Replays the output arithmetic of insert() without mutating anything.
// `pending` is what push_outputs would have prepended to the arcs of
// `state` at this point.
template <typename Signature, typename Hash>
typename IncrementalBuilder<Signature, Hash>::Probe
IncrementalBuilder<Signature, Hash>::probe(std::span<const Symbol> word,
                                           const OutputString& output) const {
  StateId state = t_.initial();
  OutputString residual = output;
  OutputString pending;
  std::size_t i = 0;
  for (; i < word.size(); ++i) {
    const Arc* arc = t_.find_arc(state, word[i]);
    if (arc == nullptr) break;
    OutputString sigma =
        pending.empty() ? arc->output : concat(pending, arc->output);
    std::size_t n = lcp_length(residual, sigma);
    residual.drop_front(n);
    pending = sigma.suffix_from(n);
    state = arc->target;
    if (t_.is_final(state) && !pending.empty()) {
      throw NotSequential(
          word_text(t_.input_symbols(), word),
          "the output of its accepted prefix '" +
              word_text(t_.input_symbols(), word.first(i + 1)) +
              "' is not a prefix of the new output");
    }
  }
  if (i == word.size()) {
    if (!residual.empty()) {
      throw NotSequential(word_text(t_.input_symbols(), word),
                          t_.is_final(state)
                              ? "word is already present with another output"
                              : "output is not a prefix of the outputs of the "
                                "longer words sharing this prefix");
    }
    if (t_.is_final(state)) return Probe::kDuplicate;
  }
  return Probe::kInsert;
}

template <typename Signature, typename Hash>
void IncrementalBuilder<Signature, Hash>::insert(std::span<const Symbol> word,
                                                 const OutputString& output) {
  probe(word, output);

  const bool lazy = config_.optimized_deregistration;
  StateId state = t_.initial();
  deregister(state);
  OutputString remaining = output;
  bool found_confluence = false;
  std::size_t i = 0;
  for (; i < word.size(); ++i) {
    const Symbol symbol = word[i];
    const Arc* arc = t_.find_arc(state, symbol);
    if (arc == nullptr) break;
    StateId child = arc->target;
    const OutputString sigma = arc->output;
    if (t_.in_degree(child) > 1) found_confluence = true;

    const std::size_t n = lcp_length(remaining, sigma);
    OutputString output_suffix = sigma.suffix_from(n);
    remaining.drop_front(n);
    if (found_confluence) {
      deregister(state);
      child = t_.clone_state(child);
      t_.set_transition(state, symbol, sigma.prefix(n), child);
    } else if (!output_suffix.empty()) {
      deregister(state);
      t_.set_output(state, symbol, sigma.prefix(n));
    }
    state = child;
    if (!lazy) deregister(state);
    push_outputs(state, output_suffix);
  }
  insert_suffix(state, word.subspan(i), remaining);
}

template <typename Signature, typename Hash>
void IncrementalBuilder<Signature, Hash>::push_outputs(
    StateId state, const OutputString& residual) {
  if (residual.empty()) return;
  if (t_.is_final(state)) {
    throw NotSequential("state " + std::to_string(state),
                        "final state would lose part of its output");
  }
  deregister(state);
  t_.prepend_outputs(state, residual);
}

template <typename Signature, typename Hash>
void IncrementalBuilder<Signature, Hash>::insert_suffix(
    StateId state, std::span<const Symbol> suffix,
    const OutputString& remaining_output) {
  if (suffix.empty()) {
    if (!remaining_output.empty()) {
      throw NotSequential("state " + std::to_string(state),
                          "word ends here but output is left over");
    }
    if (!t_.is_final(state)) {
      deregister(state);
      t_.set_final(state, true);
    }
    return;
  }
  if (t_.find_arc(state, suffix[0]) != nullptr) {
    throw std::logic_error("insert_suffix: transition already exists");
  }
  deregister(state);
  StateId prev = state;
  for (std::size_t k = 0; k < suffix.size(); ++k) {
    StateId next = t_.add_state(k + 1 == suffix.size());
    t_.set_transition(prev, suffix[k], k == 0 ? remaining_output : OutputString{},
                      next);
    prev = next;
  }
}

template <typename Signature, typename Hash>
void IncrementalBuilder<Signature, Hash>::remove_duplicates(
    std::span<const Symbol> word) {
  PrefixPath path = longest_prefix_path(t_, word);
  if (path.matched != word.size()) {
    throw std::logic_error("remove_duplicates: word is not in the transducer");
  }
  for (std::size_t i = word.size(); i >= 1; --i) {
    const StateId child = path.states[i];
    const StateId parent = path.states[i - 1];
    if (register_.contains(child)) {
      // Only happens with lazy deregistration: the child and everything
      // above a registered parent are untouched.
      if (register_.contains(parent)) break;
      continue;
    }
    if (std::optional<StateId> same = find_equivalent(child)) {
      deregister(parent);
      OutputString o = t_.find_arc(parent, word[i - 1])->output;
      t_.set_transition(parent, word[i - 1], std::move(o), *same);
      t_.release_state(child);
    } else {
      register_state(child);
    }
  }
}

template <typename Signature, typename Hash>
std::optional<StateId> IncrementalBuilder<Signature, Hash>::find_equivalent(
    StateId q) const {
  std::optional<StateId> found = register_.find(Signature::of(t_, q));
  if (found && *found == q) return std::nullopt;
  return found;
}

template <typename Signature, typename Hash>
void IncrementalBuilder<Signature, Hash>::register_state(StateId q) {
  register_.add(q, Signature::of(t_, q));
}

template <typename Signature, typename Hash>
Transducer IncrementalBuilder<Signature, Hash>::release() {
  Transducer out = std::move(t_);
  t_ = Transducer(out.input_symbols(), out.output_symbols());
  register_ = {};
  return out;
}

template class IncrementalBuilder<StateSignature, StateSignatureHash>;
template class IncrementalBuilder<FsaSignature, FsaSignatureHash>;

}  // namespace internal

Transducer build(const SymbolTable& input_symbols,
                 const SymbolTable& output_symbols,
                 std::span<const WordOutputPair> pairs, BuilderConfig config) {
  StBuilder builder(input_symbols, output_symbols, config);
  for (const WordOutputPair& p : pairs) builder.add(p.word, p.output);
  return builder.release();
}

Transducer build(const Dictionary& dictionary, BuilderConfig config) {
  return build(dictionary.input_symbols, dictionary.output_symbols,
               dictionary.pairs, config);
}

}  // namespace seqfst
