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

#ifndef SEQFST_FSA_BUILDER_H_
#define SEQFST_FSA_BUILDER_H_

#include <span>
#include <vector>

#include "seqfst/st_builder.h"

namespace seqfst {

// Incremental minimal acyclic DFSA construction for unsorted word lists.
// The result is a Transducer whose outputs are all ε. Shares the insertion
// and local minimisation code with StBuilder; the register key leaves out
// the (always empty) outputs.
class FsaBuilder {
 public:
  explicit FsaBuilder(SymbolTable input_symbols = {}, BuilderConfig config = {})
      : impl_(std::move(input_symbols), SymbolTable{}, config) {}

  // Adds w to the language. Words already accepted are no-ops.
  void add(std::span<const Symbol> word) { impl_.add(word, {}); }

  void insert(std::span<const Symbol> word) { impl_.insert(word, {}); }
  void remove_duplicates(std::span<const Symbol> word) {
    impl_.remove_duplicates(word);
  }

  const Transducer& automaton() const { return impl_.transducer(); }
  const FsaRegister& state_register() const { return impl_.state_register(); }
  SymbolTable& input_symbols() { return impl_.input_symbols(); }
  Transducer release() { return impl_.release(); }

 private:
  internal::IncrementalBuilder<FsaSignature, FsaSignatureHash> impl_;
};

Transducer fsa_build(const SymbolTable& input_symbols,
                     std::span<const Word> words, BuilderConfig config = {});

}  // namespace seqfst

#endif  // SEQFST_FSA_BUILDER_H_
