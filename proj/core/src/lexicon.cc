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

#include "seqfst/lexicon.h"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "seqfst/errors.h"

namespace seqfst {
namespace {

constexpr std::string_view kSpace = " \t\r\n";

std::string_view trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(kSpace);
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(kSpace);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_tokens(std::string_view s) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (true) {
    std::size_t b = s.find_first_not_of(kSpace, pos);
    if (b == std::string_view::npos) break;
    std::size_t e = s.find_first_of(kSpace, b);
    if (e == std::string_view::npos) e = s.size();
    tokens.emplace_back(s.substr(b, e - b));
    pos = e;
  }
  return tokens;
}

}  // namespace

LexiconFile parse_lexicon(std::string_view text) {
  LexiconFile lexicon;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    std::size_t sep = line.find('|');
    if (sep == std::string_view::npos) sep = line.find('\t');
    if (sep == std::string_view::npos) {
      throw FormatError("expected 'word | output' or 'word<TAB>output'",
                        line_no, true);
    }
    std::string_view word = trim(line.substr(0, sep));
    if (word.empty()) throw FormatError("empty word", line_no, true);
    lexicon.entries.push_back(
        {std::string(word), split_tokens(line.substr(sep + 1)), line_no});
  }
  return lexicon;
}

LexiconFile read_lexicon(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_lexicon(buffer.str());
}

std::string format_lexicon(const LexiconFile& lexicon) {
  std::string out;
  for (const LexiconEntry& e : lexicon.entries) {
    out += e.word;
    out += " |";
    for (const std::string& token : e.output) {
      out += ' ';
      out += token;
    }
    out += '\n';
  }
  return out;
}

std::vector<std::string> split_characters(std::string_view word) {
  std::vector<std::string> chars;
  std::size_t i = 0;
  while (i < word.size()) {
    auto lead = static_cast<unsigned char>(word[i]);
    std::size_t len = 1;
    if (lead >= 0xF0) {
      len = 4;
    } else if (lead >= 0xE0) {
      len = 3;
    } else if (lead >= 0xC0) {
      len = 2;
    }
    if (i + len > word.size()) len = 1;
    for (std::size_t k = 1; k < len; ++k) {
      if ((static_cast<unsigned char>(word[i + k]) & 0xC0) != 0x80) {
        len = 1;
        break;
      }
    }
    chars.emplace_back(word.substr(i, len));
    i += len;
  }
  return chars;
}

Dictionary to_dictionary(const LexiconFile& lexicon) {
  std::set<std::string> chars;
  std::set<std::string> tokens;
  std::vector<std::vector<std::string>> split_words;
  split_words.reserve(lexicon.entries.size());
  for (const LexiconEntry& e : lexicon.entries) {
    split_words.push_back(split_characters(e.word));
    chars.insert(split_words.back().begin(), split_words.back().end());
    tokens.insert(e.output.begin(), e.output.end());
  }
  Dictionary dict;
  try {
    for (const std::string& c : chars) dict.input_symbols.intern(c);
    for (const std::string& t : tokens) dict.output_symbols.intern(t);
  } catch (const std::invalid_argument& e) {
    throw Error(e.what());
  }
  dict.pairs.reserve(lexicon.entries.size());
  for (std::size_t i = 0; i < lexicon.entries.size(); ++i) {
    WordOutputPair p;
    for (const std::string& c : split_words[i]) {
      p.word.push_back(*dict.input_symbols.find(c));
    }
    std::vector<Symbol> out;
    for (const std::string& t : lexicon.entries[i].output) {
      out.push_back(*dict.output_symbols.find(t));
    }
    p.output = OutputString(std::move(out));
    dict.pairs.push_back(std::move(p));
  }
  return dict;
}

std::string inline_symbol_text(std::string_view token) {
  return "/" + std::string(token);
}

InlineWordList to_inline_words(const LexiconFile& lexicon) {
  std::set<std::string> chars;
  std::set<std::string> tokens;
  for (const LexiconEntry& e : lexicon.entries) {
    for (std::string& c : split_characters(e.word)) chars.insert(std::move(c));
    tokens.insert(e.output.begin(), e.output.end());
  }
  InlineWordList list;
  for (const std::string& c : chars) list.symbols.intern(c);
  for (const std::string& t : tokens) {
    list.symbols.intern(inline_symbol_text(t), SymbolKind::kInlineOutput);
  }
  list.words.reserve(lexicon.entries.size());
  for (const LexiconEntry& e : lexicon.entries) {
    Word w;
    for (const std::string& c : split_characters(e.word)) {
      w.push_back(*list.symbols.find(c));
    }
    for (const std::string& t : e.output) {
      w.push_back(*list.symbols.find(inline_symbol_text(t)));
    }
    list.words.push_back(std::move(w));
  }
  return list;
}

namespace {

struct Piece {
  const char* spelling;
  const char* phonemes;
};

constexpr Piece kOnsets[] = {
    {"", ""},       {"b", "b"},     {"c", "k"},     {"ch", "ch"},
    {"d", "d"},     {"f", "f"},     {"g", "g"},     {"h", "hh"},
    {"j", "jh"},    {"k", "k"},     {"l", "l"},     {"m", "m"},
    {"n", "n"},     {"p", "p"},     {"r", "r"},     {"s", "s"},
    {"sh", "sh"},   {"t", "t"},     {"th", "th"},   {"v", "v"},
    {"w", "w"},     {"y", "y"},     {"br", "b r"},  {"cr", "k r"},
    {"dr", "d r"},  {"fl", "f l"},  {"gr", "g r"},  {"pr", "p r"},
    {"st", "s t"},  {"tr", "t r"},  {"wh", "w"},    {"bl", "b l"},
};
constexpr Piece kNuclei[] = {
    {"a", "ae"},  {"e", "eh"},  {"i", "ih"},  {"o", "aa"},
    {"u", "ah"},  {"ee", "iy"}, {"oo", "uw"}, {"ai", "ey"},
    {"ou", "aw"}, {"ea", "iy"}, {"oa", "ow"},
};
constexpr Piece kCodas[] = {
    {"", ""},    {"n", "n"},     {"r", "r"},    {"l", "l"},
    {"s", "s"},  {"t", "t"},     {"ck", "k"},   {"ng", "ng"},
    {"m", "m"},  {"d", "d"},     {"rd", "r d"}, {"ll", "l"},
    {"x", "k s"}, {"nd", "n d"}, {"st", "s t"},
};
constexpr Piece kSuffixes[] = {
    {"son", "s ah n"},   {"ton", "t ah n"},      {"ley", "l iy"},
    {"well", "w eh l"},  {"field", "f iy l d"},  {"man", "m ah n"},
    {"worth", "w er th"}, {"ford", "f er d"},    {"by", "b iy"},
    {"ham", "ah m"},     {"wood", "w uh d"},     {"berg", "b er g"},
    {"stein", "s t ay n"}, {"smith", "s m ih th"},
};
constexpr const char* kVowels[] = {"ae", "eh", "ih", "aa", "ah", "iy",
                                   "uw", "ey", "aw", "ow", "ax", "er"};

template <typename T, std::size_t N>
const T& pick(const T (&items)[N], std::mt19937_64& rng) {
  return items[std::uniform_int_distribution<std::size_t>(0, N - 1)(rng)];
}

void append_phonemes(std::vector<std::string>& out, const char* phonemes) {
  for (std::string& p : split_tokens(phonemes)) out.push_back(std::move(p));
}

bool is_vowel(const std::string& p) {
  return std::find(std::begin(kVowels), std::end(kVowels), p) !=
         std::end(kVowels);
}

// Replaces one vowel by a different one.
void perturb(std::vector<std::string>& phonemes, std::mt19937_64& rng) {
  std::vector<std::size_t> vowels;
  for (std::size_t i = 0; i < phonemes.size(); ++i) {
    if (is_vowel(phonemes[i])) vowels.push_back(i);
  }
  if (vowels.empty()) return;
  std::size_t at =
      vowels[std::uniform_int_distribution<std::size_t>(0, vowels.size() - 1)(rng)];
  std::string replacement = phonemes[at];
  while (replacement == phonemes[at]) replacement = pick(kVowels, rng);
  phonemes[at] = replacement;
}

}  // namespace

LexiconFile generate_lexicon(const SynthConfig& config) {
  std::mt19937_64 rng(config.seed);
  std::bernoulli_distribution use_suffix(config.suffix_rate);
  std::bernoulli_distribution noisy(config.noise_rate);
  std::bernoulli_distribution ambiguous(config.ambiguity_rate);
  std::uniform_int_distribution<int> syllables(1, 3);

  LexiconFile lexicon;
  std::unordered_set<std::string> seen;
  const std::size_t max_attempts = 100 * config.size + 1000;
  for (std::size_t attempt = 0;
       seen.size() < config.size && attempt < max_attempts; ++attempt) {
    std::string word;
    std::vector<std::string> phonemes;
    int n = syllables(rng);
    for (int s = 0; s < n; ++s) {
      const Piece& onset = pick(kOnsets, rng);
      const Piece& nucleus = pick(kNuclei, rng);
      const Piece& coda = pick(kCodas, rng);
      for (const Piece* p : {&onset, &nucleus, &coda}) {
        word += p->spelling;
        append_phonemes(phonemes, p->phonemes);
      }
    }
    if (use_suffix(rng)) {
      const Piece& suffix = pick(kSuffixes, rng);
      word += suffix.spelling;
      append_phonemes(phonemes, suffix.phonemes);
    }
    if (!seen.insert(word).second) continue;
    if (noisy(rng)) perturb(phonemes, rng);
    lexicon.entries.push_back({word, phonemes, 0});
    if (ambiguous(rng)) {
      std::vector<std::string> variant = phonemes;
      perturb(variant, rng);
      if (variant != phonemes) lexicon.entries.push_back({word, variant, 0});
    }
  }
  return lexicon;
}

Dictionary random_dictionary(std::uint64_t seed,
                             const RandomDictionaryConfig& config) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  Dictionary dict;
  const std::size_t alphabet = uniform(1, std::max<std::size_t>(1, config.max_alphabet));
  for (std::size_t i = 0; i < alphabet; ++i) {
    dict.input_symbols.intern(std::string(1, static_cast<char>('a' + i)));
  }
  const std::size_t outputs = std::max<std::size_t>(1, config.output_alphabet);
  for (std::size_t i = 0; i < outputs; ++i) {
    dict.output_symbols.intern("x" + std::to_string(i));
  }
  const std::size_t num_words = uniform(1, std::max<std::size_t>(1, config.max_words));
  std::set<Word> seen;
  std::vector<Word> words;
  for (std::size_t attempt = 0;
       words.size() < num_words && attempt < 20 * num_words; ++attempt) {
    Word w(uniform(1, std::max<std::size_t>(1, config.max_word_length)));
    for (Symbol& a : w) a = static_cast<Symbol>(uniform(0, alphabet - 1));
    if (seen.insert(w).second) words.push_back(std::move(w));
  }
  for (const Word& w : words) {
    const std::size_t k = uniform(1, std::max<std::size_t>(1, config.max_ambiguity));
    std::set<OutputString> chosen;
    for (std::size_t attempt = 0; chosen.size() < k && attempt < 20; ++attempt) {
      std::vector<Symbol> tokens(uniform(0, config.max_output_length));
      for (Symbol& x : tokens) x = static_cast<Symbol>(uniform(0, outputs - 1));
      OutputString o(std::move(tokens));
      if (chosen.insert(o).second) dict.pairs.push_back({w, std::move(o)});
    }
  }
  std::shuffle(dict.pairs.begin(), dict.pairs.end(), rng);
  return dict;
}

}  // namespace seqfst
