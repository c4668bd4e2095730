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

// Subcommands of the seqfst tool. Each returns a process exit code and
// writes to the given streams, so that they can be driven from tests.

#ifndef SEQFST_TOOLS_COMMANDS_H_
#define SEQFST_TOOLS_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "seqfst/lexicon.h"
#include "seqfst/serialization.h"
#include "seqfst/transducer.h"

namespace seqfst::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,
  kParseError = 2,
  kNotSequentialError = 3,
  kVerificationFailed = 4,
  kNotFound = 5,
};

enum class Mode { kSt, kFsa };

// Counts are taken by scanning the transducer, not from its counters. The
// empty transducer (a lone non-final initial state) counts as 0 states.
struct StatsReport {
  std::size_t states = 0;
  std::size_t arcs = 0;
  double build_seconds = 0;
  std::size_t sentinel_arcs = 0;
  Mode mode = Mode::kSt;
};

StatsReport scan_stats(const Transducer& t, Mode mode, double build_seconds);

// Aligned table followed by key=value lines.
void print_stats(std::ostream& out, const StatsReport& report);

struct BuildOptions {
  Mode mode = Mode::kSt;
  // Number of sentinels; nullopt picks the maximum ambiguity of the data and
  // 0 builds a plain sequential transducer without sentinels.
  std::optional<std::size_t> p;
  bool optimized_deregistration = false;
};

struct BuildResult {
  Transducer transducer;
  StatsReport report;
};

// Throws NotSequential or AmbiguityOverflow.
BuildResult build_lexicon(const LexiconFile& lexicon,
                          const BuildOptions& options);

// Outputs of `word` in whatever encoding `t` uses: plain, p-subsequential,
// or an automaton over inlined outputs. Empty when the word is absent.
std::vector<std::vector<std::string>> lookup_text(const Transducer& t,
                                                  const std::string& word);

int cmd_build(const std::string& input, const BuildOptions& options,
              const std::string& output, Format format, std::ostream& out,
              std::ostream& err);

int cmd_lookup(const std::string& transducer_path,
               const std::vector<std::string>& words, std::ostream& out,
               std::ostream& err);

struct VerifyOptions {
  // Lexicon to check; empty for none.
  std::string input;
  // Serialized transducer whose integrity (and, with `input`, lookups) is
  // checked; empty for none.
  std::string transducer;
  std::uint64_t seed = 1;
  // Number of random dictionaries checked against the oracle.
  std::size_t size = 100;
};

int cmd_verify(const VerifyOptions& options, std::ostream& out,
               std::ostream& err);

struct BenchOptions {
  // Lexicon file; empty uses a synthetic lexicon of `size` entries.
  std::string input;
  std::uint64_t seed = 1;
  std::size_t size = 10000;
  std::size_t repeat = 1;
};

int cmd_bench(const BenchOptions& options, std::ostream& out,
              std::ostream& err);

int cmd_generate(const SynthConfig& config, const std::string& output,
                 std::ostream& out, std::ostream& err);

// Parses the command line and dispatches. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace seqfst::cli

#endif  // SEQFST_TOOLS_COMMANDS_H_
