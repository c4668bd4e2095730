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

#include "commands.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <unordered_set>

#include "CLI11.hpp"
#include "seqfst/errors.h"
#include "seqfst/extensions.h"
#include "seqfst/fsa_builder.h"
#include "seqfst/oracle.h"
#include "seqfst/st_builder.h"
#include "seqfst/traversal.h"

namespace seqfst::cli {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const char* mode_name(Mode mode) { return mode == Mode::kSt ? "ST" : "FSA"; }

std::string format_ms(double seconds) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << seconds * 1000.0;
  return s.str();
}

bool is_automaton(const Transducer& t) {
  const SymbolTable& symbols = t.input_symbols();
  for (Symbol s = 0; s < symbols.size(); ++s) {
    if (symbols.kind(s) == SymbolKind::kInlineOutput) return true;
  }
  return false;
}

std::optional<Word> word_symbols(const SymbolTable& symbols,
                                 const std::string& word) {
  Word w;
  for (const std::string& c : split_characters(word)) {
    std::optional<Symbol> s = symbols.find(c);
    if (!s || symbols.kind(*s) != SymbolKind::kRegular) return std::nullopt;
    w.push_back(*s);
  }
  return w;
}

std::vector<std::string> token_texts(const SymbolTable& symbols,
                                     const OutputString& o) {
  std::vector<std::string> tokens;
  for (Symbol s : o) tokens.push_back(symbols.text(s));
  return tokens;
}

// Continuations of q over inline-output symbols that end in a final state.
void collect_inline(const Transducer& t, StateId q,
                    std::vector<std::string>& path,
                    std::vector<std::vector<std::string>>& found) {
  if (t.is_final(q)) found.push_back(path);
  for (const Arc& arc : t.state(q).arcs) {
    if (t.input_symbols().kind(arc.input) != SymbolKind::kInlineOutput) {
      continue;
    }
    path.push_back(t.input_symbols().text(arc.input).substr(1));
    collect_inline(t, arc.target, path, found);
    path.pop_back();
  }
}

std::string join(const std::vector<std::string>& tokens) {
  std::string s;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) s += ' ';
    s += tokens[i];
  }
  return s;
}

// Sentinel-encoded pairs of `dict` with p = max ambiguity (at least 1).
Dictionary encode(const Dictionary& dict) {
  std::vector<MultiDictEntry> entries = group_by_word(dict.pairs);
  Dictionary encoded;
  encoded.input_symbols = dict.input_symbols;
  encoded.output_symbols = dict.output_symbols;
  std::vector<Symbol> sentinels = encoded.input_symbols.reserve_sentinels(
      std::max<std::size_t>(1, max_ambiguity(entries)));
  encoded.pairs =
      encode_p_subsequential(entries, sentinels, &encoded.input_symbols);
  return encoded;
}

// Bottom-up longest common prefix of the continuation outputs of every
// state; the transducer is normalised iff it is empty everywhere but at the
// initial state. Linear in the size of the transducer.
bool normalised_by_lcp(const Transducer& t, std::string& detail) {
  std::vector<StateId> order = topological_order(t);
  std::vector<OutputString> common(t.arena_size());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    StateId q = *it;
    if (t.is_final(q) || t.state(q).arcs.empty()) continue;
    bool first = true;
    for (const Arc& arc : t.state(q).arcs) {
      OutputString c = concat(arc.output, common[arc.target]);
      common[q] = first ? c : lcp(common[q], c);
      first = false;
    }
    if (q != t.initial() && !common[q].empty()) {
      detail = "state " + std::to_string(q) + " has a shared output prefix";
      return false;
    }
  }
  return true;
}

// Every state has a distinct signature.
bool signatures_distinct(const Transducer& t) {
  std::unordered_set<StateSignature, StateSignatureHash> seen;
  for (StateId q : t.live_states()) {
    if (!seen.insert(StateSignature::of(t, q)).second) return false;
  }
  return true;
}

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;
};

// Enumeration-based checks are used up to this many encoded pairs.
constexpr std::size_t kSmallDictionary = 300;

std::vector<CheckResult> check_dictionary(const Dictionary& dict,
                                          std::uint64_t seed) {
  std::vector<CheckResult> results;
  auto record = [&](std::string name, bool ok, std::string detail = {}) {
    results.push_back({std::move(name), ok, ok ? std::string() : detail});
  };
  Dictionary encoded = encode(dict);
  const bool small = encoded.pairs.size() <= kSmallDictionary;

  Transducer t = build(encoded);
  std::vector<std::string> problems = validate(t);
  record("structure", problems.empty(),
         problems.empty() ? "" : problems.front());

  Transducer reference = oracle::minimal_st(
      encoded.input_symbols, encoded.output_symbols, encoded.pairs);
  record("oracle-state-count", t.num_states() == reference.num_states(),
         std::to_string(t.num_states()) + " states, oracle has " +
             std::to_string(reference.num_states()));
  record("oracle-isomorphism", oracle::isomorphic(t, reference));
  record("oracle-function", oracle::equivalent_functions(t, reference));

  std::string detail;
  bool normalised = true;
  if (small) {
    StateId offender = kNoState;
    normalised = oracle::is_prefix_normalized(t, &offender);
    if (!normalised) detail = "state " + std::to_string(offender);
  } else {
    normalised = normalised_by_lcp(t, detail);
  }
  record("prefix-normalised", normalised, detail);

  record("minimal", small ? oracle::has_no_equivalent_pair(t)
                          : signatures_distinct(t));

  std::mt19937_64 rng(seed);
  bool same = true;
  Dictionary shuffled = encoded;
  for (int k = 0; k < 3 && same; ++k) {
    std::shuffle(shuffled.pairs.begin(), shuffled.pairs.end(), rng);
    same = oracle::isomorphic(t, build(shuffled));
  }
  record("order-independence", same);
  record("optimized-deregistration",
         oracle::isomorphic(t, build(encoded, {.optimized_deregistration = true})));

  bool found = true;
  for (const MultiDictEntry& e : group_by_word(dict.pairs)) {
    if (lookup_all(t, e.word) != e.outputs) {
      found = false;
      detail = "word '" + word_text(dict.input_symbols, e.word) + "'";
      break;
    }
  }
  record("lookup", found, detail);
  return results;
}

void print_check(std::ostream& out, const std::string& label,
                 const CheckResult& r) {
  out << (r.ok ? "PASS " : "FAIL ") << label << r.name;
  if (!r.ok && !r.detail.empty()) out << ": " << r.detail;
  out << '\n';
}

}  // namespace

StatsReport scan_stats(const Transducer& t, Mode mode, double build_seconds) {
  StatsReport report;
  report.mode = mode;
  report.build_seconds = build_seconds;
  for (StateId q : t.live_states()) {
    ++report.states;
    for (const Arc& arc : t.state(q).arcs) {
      ++report.arcs;
      if (t.input_symbols().is_sentinel(arc.input)) ++report.sentinel_arcs;
    }
  }
  if (report.arcs == 0 && !t.is_final(t.initial())) report.states = 0;
  return report;
}

void print_stats(std::ostream& out, const StatsReport& report) {
  const std::string time = format_ms(report.build_seconds);
  out << std::left << std::setw(15) << "mode" << mode_name(report.mode) << '\n'
      << std::setw(15) << "states" << report.states << '\n'
      << std::setw(15) << "arcs" << report.arcs << '\n'
      << std::setw(15) << "sentinel_arcs" << report.sentinel_arcs << '\n'
      << std::setw(15) << "time_ms" << time << '\n'
      << std::right;
  out << "states=" << report.states << '\n'
      << "arcs=" << report.arcs << '\n'
      << "time_ms=" << time << '\n'
      << "sentinel_arcs=" << report.sentinel_arcs << '\n'
      << "mode=" << mode_name(report.mode) << '\n';
}

BuildResult build_lexicon(const LexiconFile& lexicon,
                          const BuildOptions& options) {
  const BuilderConfig config{options.optimized_deregistration};
  if (options.mode == Mode::kFsa) {
    InlineWordList list = to_inline_words(lexicon);
    Clock::time_point start = Clock::now();
    Transducer t = fsa_build(list.symbols, list.words, config);
    double elapsed = seconds_since(start);
    StatsReport report = scan_stats(t, Mode::kFsa, elapsed);
    return {std::move(t), report};
  }
  Dictionary dict = to_dictionary(lexicon);
  Clock::time_point start = Clock::now();
  Transducer t = options.p == std::size_t{0}
                     ? build(dict, config)
                     : build_p_subsequential(dict, options.p.value_or(0), config);
  double elapsed = seconds_since(start);
  StatsReport report = scan_stats(t, Mode::kSt, elapsed);
  return {std::move(t), report};
}

std::vector<std::vector<std::string>> lookup_text(const Transducer& t,
                                                  const std::string& word) {
  std::vector<std::vector<std::string>> found;
  std::optional<Word> w = word_symbols(t.input_symbols(), word);
  if (!w) return found;
  if (is_automaton(t)) {
    PrefixPath path = longest_prefix_path(t, *w);
    if (path.matched != w->size()) return found;
    std::vector<std::string> tokens;
    collect_inline(t, path.states.back(), tokens, found);
    std::sort(found.begin(), found.end());
    return found;
  }
  if (!t.input_symbols().sentinels().empty()) {
    for (const OutputString& o : lookup_all(t, *w)) {
      found.push_back(token_texts(t.output_symbols(), o));
    }
    return found;
  }
  if (std::optional<OutputString> o = lookup(t, *w)) {
    found.push_back(token_texts(t.output_symbols(), *o));
  }
  return found;
}

int cmd_build(const std::string& input, const BuildOptions& options,
              const std::string& output, Format format, std::ostream& out,
              std::ostream& err) {
  (void)err;
  LexiconFile lexicon = read_lexicon(input);
  BuildResult result = build_lexicon(lexicon, options);
  if (!output.empty()) write_file(output, result.transducer, format);
  print_stats(out, result.report);
  return kOk;
}

int cmd_lookup(const std::string& transducer_path,
               const std::vector<std::string>& words, std::ostream& out,
               std::ostream& err) {
  (void)err;
  Transducer t = read_file(transducer_path);
  bool all_found = true;
  for (const std::string& word : words) {
    std::vector<std::vector<std::string>> outputs = lookup_text(t, word);
    if (outputs.empty()) {
      out << word << "\tNOT FOUND\n";
      all_found = false;
      continue;
    }
    for (const auto& tokens : outputs) out << word << '\t' << join(tokens) << '\n';
  }
  return all_found ? kOk : kNotFound;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out,
               std::ostream& err) {
  (void)err;
  bool ok = true;
  auto emit = [&](const std::string& label, const CheckResult& r) {
    ok = ok && r.ok;
    print_check(out, label, r);
  };

  std::optional<LexiconFile> lexicon;
  if (!options.input.empty()) {
    lexicon = read_lexicon(options.input);
    Dictionary dict = to_dictionary(*lexicon);
    for (const CheckResult& r : check_dictionary(dict, options.seed)) {
      emit("lexicon ", r);
    }
  }

  if (!options.transducer.empty()) {
    CheckResult integrity{"integrity", true, {}};
    try {
      Transducer t = read_file(options.transducer);
      std::vector<std::string> problems = validate(t);
      if (!problems.empty()) integrity = {"integrity", false, problems.front()};
      if (integrity.ok && lexicon) {
        CheckResult lookups{"lookup", true, {}};
        std::map<std::string, std::vector<std::vector<std::string>>> expected;
        for (const LexiconEntry& e : lexicon->entries) {
          expected[e.word].push_back(e.output);
        }
        for (auto& [word, outputs] : expected) {
          std::sort(outputs.begin(), outputs.end());
          outputs.erase(std::unique(outputs.begin(), outputs.end()),
                        outputs.end());
          std::vector<std::vector<std::string>> got = lookup_text(t, word);
          std::sort(got.begin(), got.end());
          if (got != outputs) {
            lookups = {"lookup", false, "word '" + word + "'"};
            break;
          }
        }
        emit("transducer ", integrity);
        emit("transducer ", lookups);
      } else {
        emit("transducer ", integrity);
      }
    } catch (const Error& e) {
      emit("transducer ", {"integrity", false, e.what()});
    }
  }

  if (options.size > 0) {
    // One line per check, aggregated over the suite.
    std::vector<CheckResult> summary;
    std::vector<std::size_t> passed;
    for (std::size_t i = 0; i < options.size; ++i) {
      const std::uint64_t seed = options.seed + i;
      Dictionary dict = random_dictionary(seed, {});
      std::vector<CheckResult> results = check_dictionary(dict, seed);
      if (summary.empty()) {
        summary = results;
        passed.assign(results.size(), 0);
        for (CheckResult& r : summary) r = {r.name, true, {}};
      }
      for (std::size_t k = 0; k < results.size(); ++k) {
        if (results[k].ok) {
          ++passed[k];
        } else if (summary[k].ok) {
          summary[k] = {results[k].name, false,
                        "seed " + std::to_string(seed) +
                            (results[k].detail.empty()
                                 ? std::string()
                                 : ", " + results[k].detail)};
        }
      }
    }
    for (std::size_t k = 0; k < summary.size(); ++k) {
      CheckResult r = summary[k];
      r.name += " (" + std::to_string(passed[k]) + "/" +
                std::to_string(options.size) + ")";
      emit("random ", r);
    }
  }
  out << (ok ? "verify: all checks passed\n" : "verify: FAILED\n");
  return ok ? kOk : kVerificationFailed;
}

int cmd_bench(const BenchOptions& options, std::ostream& out,
              std::ostream& err) {
  (void)err;
  LexiconFile lexicon =
      options.input.empty()
          ? generate_lexicon({.seed = options.seed, .size = options.size})
          : read_lexicon(options.input);
  std::optional<StatsReport> st;
  std::optional<StatsReport> fsa;
  BuildOptions st_options;
  BuildOptions fsa_options;
  fsa_options.mode = Mode::kFsa;
  for (std::size_t r = 0; r < std::max<std::size_t>(1, options.repeat); ++r) {
    StatsReport s = build_lexicon(lexicon, st_options).report;
    StatsReport f = build_lexicon(lexicon, fsa_options).report;
    if (!st || s.build_seconds < st->build_seconds) st = s;
    if (!fsa || f.build_seconds < fsa->build_seconds) fsa = f;
  }
  auto row = [&](const char* name, const std::string& a, const std::string& b) {
    out << std::left << std::setw(15) << name << std::right << std::setw(12) << a
        << std::setw(12) << b << '\n';
  };
  out << "entries=" << lexicon.entries.size() << '\n';
  row("", "ST", "FSA");
  row("states", std::to_string(st->states), std::to_string(fsa->states));
  row("arcs", std::to_string(st->arcs), std::to_string(fsa->arcs));
  row("time_ms", format_ms(st->build_seconds), format_ms(fsa->build_seconds));
  out << "st.states=" << st->states << '\n'
      << "st.arcs=" << st->arcs << '\n'
      << "st.time_ms=" << format_ms(st->build_seconds) << '\n'
      << "st.sentinel_arcs=" << st->sentinel_arcs << '\n'
      << "fsa.states=" << fsa->states << '\n'
      << "fsa.arcs=" << fsa->arcs << '\n'
      << "fsa.time_ms=" << format_ms(fsa->build_seconds) << '\n';
  if (fsa->states > 0) {
    out << "state_ratio=" << std::fixed << std::setprecision(4)
        << static_cast<double>(st->states) / static_cast<double>(fsa->states)
        << '\n';
  }
  return kOk;
}

int cmd_generate(const SynthConfig& config, const std::string& output,
                 std::ostream& out, std::ostream& err) {
  std::string text = format_lexicon(generate_lexicon(config));
  if (output.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file || !(file << text)) {
    err << "error: cannot write '" << output << "'\n";
    return kUsageError;
  }
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Minimal sequential transducers from unsorted lexica", "seqfst"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::string mode_text = "st";
  std::string format_text = "text";
  BuildOptions build_options;
  CLI::App* build_cmd =
      app.add_subcommand("build", "Compile a lexicon and print statistics");
  build_cmd->add_option("input", input, "Lexicon file")->required();
  build_cmd->add_option("--mode", mode_text, "st or fsa")
      ->check(CLI::IsMember({"st", "fsa"}));
  build_cmd->add_option("--p", build_options.p,
                        "Sentinels; 0 for none, default: max ambiguity");
  build_cmd->add_flag("--optimized-dereg",
                      build_options.optimized_deregistration,
                      "Lazy register maintenance");
  build_cmd->add_option("--format", format_text, "text or bin")
      ->check(CLI::IsMember({"text", "bin"}));
  build_cmd->add_option("-o,--output", output, "Write the transducer here");

  std::string transducer_path;
  std::vector<std::string> words;
  CLI::App* lookup_cmd =
      app.add_subcommand("lookup", "Look words up in a compiled transducer");
  lookup_cmd->add_option("transducer", transducer_path, "Transducer file")
      ->required();
  lookup_cmd->add_option("words", words, "Words to look up")->required();

  VerifyOptions verify_options;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Check the builder against the reference pipeline");
  verify_cmd->add_option("input", verify_options.input, "Lexicon file");
  verify_cmd->add_option("--transducer", verify_options.transducer,
                         "Serialized transducer to check");
  verify_cmd->add_option("--seed", verify_options.seed, "First random seed");
  verify_cmd->add_option("--size", verify_options.size,
                         "Number of random dictionaries");

  BenchOptions bench_options;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Compare ST and FSA construction");
  bench_cmd->add_option("input", bench_options.input,
                        "Lexicon file (default: synthetic)");
  bench_cmd->add_option("--seed", bench_options.seed, "Synthetic lexicon seed");
  bench_cmd->add_option("--size", bench_options.size,
                        "Synthetic lexicon size");
  bench_cmd->add_option("--repeat", bench_options.repeat,
                        "Runs per mode; the fastest is reported");

  SynthConfig synth;
  CLI::App* generate_cmd =
      app.add_subcommand("generate", "Write a synthetic lexicon");
  generate_cmd->add_option("--seed", synth.seed, "Random seed");
  generate_cmd->add_option("--size", synth.size, "Number of words");
  generate_cmd->add_option("--suffix-rate", synth.suffix_rate)
      ->check(CLI::Range(0.0, 1.0));
  generate_cmd->add_option("--noise-rate", synth.noise_rate)
      ->check(CLI::Range(0.0, 1.0));
  generate_cmd->add_option("--ambiguity-rate", synth.ambiguity_rate)
      ->check(CLI::Range(0.0, 1.0));
  generate_cmd->add_option("-o,--output", output, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*build_cmd) {
      build_options.mode = mode_text == "fsa" ? Mode::kFsa : Mode::kSt;
      Format format = format_text == "bin" ? Format::kBinary : Format::kText;
      return cmd_build(input, build_options, output, format, out, err);
    }
    if (*lookup_cmd) return cmd_lookup(transducer_path, words, out, err);
    if (*verify_cmd) return cmd_verify(verify_options, out, err);
    if (*bench_cmd) return cmd_bench(bench_options, out, err);
    if (*generate_cmd) return cmd_generate(synth, output, out, err);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const NotSequential& e) {
    err << "error: " << e.what() << '\n';
    return kNotSequentialError;
  } catch (const AmbiguityOverflow& e) {
    err << "error: " << e.what() << '\n';
    return kNotSequentialError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace seqfst::cli
