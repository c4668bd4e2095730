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

// Incremental construction of minimal acyclic sequential transducers from
// (word, output) pairs given in arbitrary order.
//
// Every completed call to StBuilder::add() leaves the transducer minimal,
// trim and prefix-normalised: for every state q other than the initial one,
// the outputs of all continuations from q have an empty common prefix. For
// such transducers two states realise the same right language with the same
// translations iff they agree on finality and on their outgoing
// (input, output, target) triples, so equivalent states can be found with a
// hash lookup on that signature.

#ifndef SEQFST_ST_BUILDER_H_
#define SEQFST_ST_BUILDER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "seqfst/output_string.h"
#include "seqfst/symbol_table.h"
#include "seqfst/transducer.h"

namespace seqfst {

// Finality plus the canonically ordered outgoing (input, output, target)
// triples of a state.
struct StateSignature {
  bool is_final = false;
  std::vector<Arc> arcs;

  static StateSignature of(const Transducer& t, StateId q);
  friend bool operator==(const StateSignature&,
                         const StateSignature&) = default;
};

struct StateSignatureHash {
  std::size_t operator()(const StateSignature& s) const noexcept;
};

// Finality plus (input, target) pairs; outputs are ignored. Used by the
// automaton builder, where every output is ε.
struct FsaSignature {
  bool is_final = false;
  std::vector<std::pair<Symbol, StateId>> arcs;

  static FsaSignature of(const Transducer& t, StateId q);
  friend bool operator==(const FsaSignature&, const FsaSignature&) = default;
};

struct FsaSignatureHash {
  std::size_t operator()(const FsaSignature& s) const noexcept;
};

// Signature -> representative state. Each registered state remembers its
// key so that it can be removed by id.
template <typename Signature, typename Hash>
class BasicRegister {
 public:
  std::optional<StateId> find(const Signature& sig) const {
    auto it = map_.find(sig);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  bool contains(StateId q) const {
    return q < keys_.size() && keys_[q] != nullptr;
  }

  // Registers q under `sig`; q must not be registered and sig must be free.
  void add(StateId q, Signature sig) {
    auto [it, inserted] = map_.emplace(std::move(sig), q);
    if (q >= keys_.size()) keys_.resize(q + 1, nullptr);
    keys_[q] = &it->first;
  }

  void remove(StateId q) {
    if (!contains(q)) return;
    Signature key = *keys_[q];
    map_.erase(key);
    keys_[q] = nullptr;
  }

  std::size_t size() const { return map_.size(); }

  template <typename F>
  void for_each(F&& f) const {
    for (const auto& [sig, q] : map_) f(sig, q);
  }

 private:
  std::unordered_map<Signature, StateId, Hash> map_;
  std::vector<const Signature*> keys_;
};

using Register = BasicRegister<StateSignature, StateSignatureHash>;
using FsaRegister = BasicRegister<FsaSignature, FsaSignatureHash>;

struct BuilderConfig {
  // Keep prefix states registered during insertion unless they are about to
  // change, and re-check them lazily while removing duplicates. Produces the
  // same transducer as the plain variant.
  bool optimized_deregistration = false;
};

struct WordOutputPair {
  Word word;
  OutputString output;

  friend bool operator==(const WordOutputPair&,
                         const WordOutputPair&) = default;
  friend auto operator<=>(const WordOutputPair&,
                          const WordOutputPair&) = default;
};

// A list of pairs together with the symbol tables its ids refer to.
struct Dictionary {
  SymbolTable input_symbols;
  SymbolTable output_symbols;
  std::vector<WordOutputPair> pairs;
};

namespace internal {

// Shared implementation of the transducer and automaton builders; they
// differ only in the register key.
template <typename Signature, typename Hash>
class IncrementalBuilder {
 public:
  IncrementalBuilder(SymbolTable input_symbols, SymbolTable output_symbols,
                     BuilderConfig config);

  // One iteration of the construction: insert() followed by
  // remove_duplicates(). Duplicate pairs are accepted and change nothing.
  // Throws NotSequential, leaving the transducer untouched.
  void add(std::span<const Symbol> word, const OutputString& output);

  // Insertion step. Clones the path from the first confluence state,
  // re-aligns outputs along w ∧ T and appends the remaining suffix. The
  // path of `word` may afterwards contain states equivalent to registered
  // ones. Throws NotSequential before mutating anything.
  void insert(std::span<const Symbol> word, const OutputString& output);

  // Prefixes every arc leaving `state` with `residual`. Throws NotSequential
  // when `state` is final and `residual` is not empty.
  void push_outputs(StateId state, const OutputString& residual);

  // Appends a fresh chain for `suffix` below `state`; the first new arc emits
  // `remaining_output`, the others ε, and the last state is final. With an
  // empty suffix `state` is made final, which requires an empty
  // `remaining_output` (NotSequential otherwise).
  void insert_suffix(StateId state, std::span<const Symbol> suffix,
                     const OutputString& remaining_output);

  // Local minimisation of the path of `word`, bottom-up.
  void remove_duplicates(std::span<const Symbol> word);

  // A registered state with the same signature as q, if any.
  std::optional<StateId> find_equivalent(StateId q) const;

  const Transducer& transducer() const { return t_; }
  const BasicRegister<Signature, Hash>& state_register() const {
    return register_;
  }
  const BuilderConfig& config() const { return config_; }
  SymbolTable& input_symbols() { return t_.input_symbols(); }
  SymbolTable& output_symbols() { return t_.output_symbols(); }

  // Hands out the finished transducer; the builder is left empty.
  Transducer release();

 private:
  enum class Probe { kInsert, kDuplicate };
  Probe probe(std::span<const Symbol> word, const OutputString& output) const;
  void deregister(StateId q) { register_.remove(q); }
  void register_state(StateId q);

  Transducer t_;
  BasicRegister<Signature, Hash> register_;
  BuilderConfig config_;
};

extern template class IncrementalBuilder<StateSignature, StateSignatureHash>;
extern template class IncrementalBuilder<FsaSignature, FsaSignatureHash>;

}  // namespace internal

using StBuilder =
    internal::IncrementalBuilder<StateSignature, StateSignatureHash>;

// Builds the minimal prefix-normalised transducer realising `pairs`, which
// may come in any order. Throws NotSequential on conflicting outputs.
Transducer build(const SymbolTable& input_symbols,
                 const SymbolTable& output_symbols,
                 std::span<const WordOutputPair> pairs,
                 BuilderConfig config = {});
Transducer build(const Dictionary& dictionary, BuilderConfig config = {});

}  // namespace seqfst

#endif  // SEQFST_ST_BUILDER_H_
