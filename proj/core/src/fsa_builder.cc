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

#include "seqfst/fsa_builder.h"

namespace seqfst {

Transducer fsa_build(const SymbolTable& input_symbols,
                     std::span<const Word> words, BuilderConfig config) {
  FsaBuilder builder(input_symbols, config);
  for (const Word& w : words) builder.add(w);
  return builder.release();
}

}  // namespace seqfst
