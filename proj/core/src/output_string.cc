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

#include "seqfst/output_string.h"

#include <algorithm>

#include "seqfst/errors.h"

namespace seqfst {

std::size_t lcp_length(const OutputString& u, const OutputString& v) {
  auto [iu, iv] = std::mismatch(u.begin(), u.end(), v.begin(), v.end());
  return static_cast<std::size_t>(iu - u.begin());
}

OutputString lcp(const OutputString& u, const OutputString& v) {
  return u.prefix(lcp_length(u, v));
}

bool is_prefix(const OutputString& u, const OutputString& v) {
  return u.size() <= v.size() && std::equal(u.begin(), u.end(), v.begin());
}

OutputString remainder(const OutputString& u, const OutputString& v) {
  if (!is_prefix(u, v)) throw NotAPrefix();
  return v.suffix_from(u.size());
}

OutputString concat(const OutputString& u, const OutputString& v) {
  OutputString result = u;
  result.append(v);
  return result;
}

std::size_t OutputStringHash::operator()(
    const OutputString& s) const noexcept {
  std::size_t seed = s.size();
  for (Symbol x : s) hash_mix(seed, x);
  return seed;
}

}  // namespace seqfst
