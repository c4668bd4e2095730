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

#include "seqfst/serialization.h"

#include <charconv>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "seqfst/errors.h"

namespace seqfst {
namespace {

constexpr char kTextMagic[] = "seqfst-text";
constexpr char kBinaryMagic[4] = {'S', 'Q', 'F', 'T'};

// Live states, breadth-first from the initial state, then the rest.
std::vector<StateId> canonical_numbering(const Transducer& t,
                                         std::vector<StateId>& new_id) {
  new_id.assign(t.arena_size(), kNoState);
  std::vector<StateId> order;
  order.reserve(t.num_states());
  auto visit = [&](StateId q) {
    new_id[q] = static_cast<StateId>(order.size());
    order.push_back(q);
  };
  visit(t.initial());
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const Arc& arc : t.state(order[head]).arcs) {
      if (new_id[arc.target] == kNoState) visit(arc.target);
    }
  }
  for (StateId q : t.live_states()) {
    if (new_id[q] == kNoState) visit(q);
  }
  return order;
}

const char* kind_name(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::kSentinel:
      return "sentinel";
    case SymbolKind::kInlineOutput:
      return "inline";
    case SymbolKind::kRegular:
      break;
  }
  return "sym";
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

bool parse_u32(std::string_view s, std::uint32_t& value) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::uint64_t fnv1a(std::span<const std::uint8_t> bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint8_t b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

class ByteWriter {
 public:
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void bytes(std::string_view s) { out_.insert(out_.end(), s.begin(), s.end()); }
  std::vector<std::uint8_t>& data() { return out_; }

 private:
  std::vector<std::uint8_t> out_;
};

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> in) : in_(in) {}

  std::uint8_t u8() {
    need(1);
    return in_[pos_++];
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t{in_[pos_++]} << (8 * i);
    return v;
  }
  std::string bytes(std::size_t n) {
    need(n);
    std::string s(reinterpret_cast<const char*>(in_.data() + pos_), n);
    pos_ += n;
    return s;
  }
  std::size_t pos() const { return pos_; }
  std::size_t remaining() const { return in_.size() - pos_; }
  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError(what, pos_, false);
  }

 private:
  void need(std::size_t n) const {
    if (in_.size() - pos_ < n) fail("unexpected end of data");
  }
  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

void write_symbols(ByteWriter& w, const SymbolTable& symbols) {
  w.u32(static_cast<std::uint32_t>(symbols.size()));
  for (Symbol s = 0; s < symbols.size(); ++s) {
    w.u8(static_cast<std::uint8_t>(symbols.kind(s)));
    w.u32(static_cast<std::uint32_t>(symbols.text(s).size()));
    w.bytes(symbols.text(s));
  }
}

SymbolTable read_symbols(ByteReader& r) {
  SymbolTable symbols;
  std::uint32_t count = r.u32();
  for (std::uint32_t i = 0; i < count; ++i) {
    std::uint8_t kind = r.u8();
    if (kind > static_cast<std::uint8_t>(SymbolKind::kInlineOutput)) {
      r.fail("unknown symbol kind");
    }
    std::uint32_t len = r.u32();
    if (len > r.remaining()) r.fail("symbol text exceeds data");
    std::string text = r.bytes(len);
    try {
      symbols.add_raw(text, static_cast<SymbolKind>(kind));
    } catch (const std::invalid_argument& e) {
      r.fail(e.what());
    }
  }
  return symbols;
}

}  // namespace

std::string to_text(const Transducer& t) {
  std::vector<StateId> new_id;
  const std::vector<StateId> order = canonical_numbering(t, new_id);
  std::ostringstream out;
  out << kTextMagic << '\t' << 1 << '\n';
  out << "initial\t0\n";
  out << "states\t" << order.size() << '\n';
  auto put_table = [&](const char* tag, const SymbolTable& symbols,
                       bool tokens) {
    for (Symbol s = 0; s < symbols.size(); ++s) {
      const std::string& text = symbols.text(s);
      if (tokens && text.find(' ') != std::string::npos) {
        throw std::invalid_argument("output token contains a space: '" + text +
                                    "'");
      }
      out << tag << '\t' << s << '\t' << kind_name(symbols.kind(s)) << '\t'
          << text << '\n';
    }
  };
  put_table("isym", t.input_symbols(), false);
  put_table("osym", t.output_symbols(), true);
  for (StateId q : order) {
    for (const Arc& arc : t.state(q).arcs) {
      out << new_id[q] << '\t' << new_id[arc.target] << '\t'
          << t.input_symbols().text(arc.input) << '\t';
      for (std::size_t i = 0; i < arc.output.size(); ++i) {
        if (i > 0) out << ' ';
        out << t.output_symbols().text(arc.output[i]);
      }
      out << '\n';
    }
    if (t.is_final(q)) out << new_id[q] << '\n';
  }
  return out.str();
}

Transducer from_text(std::string_view text) {
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) -> void {
    throw FormatError(what, line_no, true);
  };

  std::vector<std::string_view> lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();

  SymbolTable isyms;
  SymbolTable osyms;
  std::uint32_t num_states = 0;
  std::uint32_t initial = 0;
  bool have_states = false;
  std::size_t i = 0;

  for (; i < lines.size(); ++i) {
    line_no = i + 1;
    std::string_view line = lines[i];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (i == 0) {
      if (line != std::string(kTextMagic) + "\t1") {
        fail("expected header 'seqfst-text<TAB>1'");
      }
      continue;
    }
    if (!line.empty() && line[0] >= '0' && line[0] <= '9') break;
    auto fields = split(line, '\t');
    if (fields[0] == "initial" && fields.size() == 2) {
      if (!parse_u32(fields[1], initial)) fail("bad initial state");
    } else if (fields[0] == "states" && fields.size() == 2) {
      if (!parse_u32(fields[1], num_states)) fail("bad state count");
      have_states = true;
    } else if ((fields[0] == "isym" || fields[0] == "osym") &&
               fields.size() >= 4) {
      SymbolTable& table = fields[0] == "isym" ? isyms : osyms;
      std::uint32_t id = 0;
      if (!parse_u32(fields[1], id) || id != table.size()) {
        fail("symbol ids must be consecutive from 0");
      }
      SymbolKind kind = SymbolKind::kRegular;
      if (fields[2] == "sym") {
        kind = SymbolKind::kRegular;
      } else if (fields[2] == "sentinel") {
        kind = SymbolKind::kSentinel;
      } else if (fields[2] == "inline") {
        kind = SymbolKind::kInlineOutput;
      } else {
        fail("unknown symbol kind '" + std::string(fields[2]) + "'");
      }
      // The text is everything after the third tab.
      std::size_t offset = fields[0].size() + fields[1].size() +
                           fields[2].size() + 3;
      try {
        table.add_raw(line.substr(offset), kind);
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    } else {
      fail("unrecognised header line");
    }
  }
  if (lines.empty()) {
    line_no = 1;
    fail("empty input");
  }
  if (!have_states || num_states == 0) fail("missing 'states' line");
  if (initial >= num_states) fail("initial state out of range");

  // File id -> arena id; the file's initial state becomes the arena's.
  Transducer t(std::move(isyms), std::move(osyms));
  std::vector<StateId> id(num_states);
  for (std::uint32_t q = 0; q < num_states; ++q) {
    id[q] = q == initial ? t.initial() : t.add_state();
  }

  for (; i < lines.size(); ++i) {
    line_no = i + 1;
    std::string_view line = lines[i];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    auto fields = split(line, '\t');
    std::uint32_t src = 0;
    if (!parse_u32(fields[0], src) || src >= num_states) {
      fail("bad source state");
    }
    if (fields.size() == 1) {
      t.set_final(id[src], true);
      continue;
    }
    if (fields.size() != 3 && fields.size() != 4) {
      fail("expected 'src<TAB>dst<TAB>input<TAB>outputs'");
    }
    std::uint32_t dst = 0;
    if (!parse_u32(fields[1], dst) || dst >= num_states) {
      fail("bad target state");
    }
    auto input = t.input_symbols().find(fields[2]);
    if (!input) fail("unknown input symbol '" + std::string(fields[2]) + "'");
    if (t.find_arc(id[src], *input) != nullptr) {
      fail("second transition on the same input (nondeterministic)");
    }
    std::vector<Symbol> out;
    if (fields.size() == 4) {
      for (std::string_view token : split(fields[3], ' ')) {
        if (token.empty()) continue;
        auto sym = t.output_symbols().find(token);
        if (!sym) fail("unknown output symbol '" + std::string(token) + "'");
        out.push_back(*sym);
      }
    }
    t.set_transition(id[src], *input, OutputString(std::move(out)), id[dst]);
  }
  return t;
}

std::vector<std::uint8_t> to_binary(const Transducer& t) {
  std::vector<StateId> new_id;
  const std::vector<StateId> order = canonical_numbering(t, new_id);
  ByteWriter w;
  w.bytes(std::string_view(kBinaryMagic, 4));
  w.u8(kBinaryVersion);
  write_symbols(w, t.input_symbols());
  write_symbols(w, t.output_symbols());
  w.u32(static_cast<std::uint32_t>(order.size()));
  w.u32(0);
  for (StateId q : order) {
    const State& s = t.state(q);
    w.u8(s.is_final ? 1 : 0);
    w.u32(static_cast<std::uint32_t>(s.arcs.size()));
    for (const Arc& arc : s.arcs) {
      w.u32(arc.input);
      w.u32(new_id[arc.target]);
      w.u32(static_cast<std::uint32_t>(arc.output.size()));
      for (Symbol x : arc.output) w.u32(x);
    }
  }
  w.u64(fnv1a(w.data()));
  return std::move(w.data());
}

Transducer from_binary(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 13 || std::memcmp(bytes.data(), kBinaryMagic, 4) != 0) {
    throw FormatError("not a seqfst binary file", 0, false);
  }
  const std::size_t body = bytes.size() - 8;
  std::uint64_t stored = 0;
  for (int i = 0; i < 8; ++i) {
    stored |= std::uint64_t{bytes[body + static_cast<std::size_t>(i)]} << (8 * i);
  }
  if (stored != fnv1a(bytes.first(body))) {
    throw FormatError("checksum mismatch", body, false);
  }
  ByteReader r(bytes.first(body));
  r.bytes(4);
  if (std::uint8_t version = r.u8(); version != kBinaryVersion) {
    r.fail("unsupported version " + std::to_string(version));
  }
  SymbolTable isyms = read_symbols(r);
  SymbolTable osyms = read_symbols(r);
  std::uint32_t num_states = r.u32();
  std::uint32_t initial = r.u32();
  // Every state needs at least five bytes.
  if (num_states == 0 || num_states > r.remaining() / 5 + 1) {
    r.fail("bad state count");
  }
  if (initial >= num_states) r.fail("initial state out of range");

  Transducer t(std::move(isyms), std::move(osyms));
  std::vector<StateId> id(num_states);
  for (std::uint32_t q = 0; q < num_states; ++q) {
    id[q] = q == initial ? t.initial() : t.add_state();
  }
  for (std::uint32_t q = 0; q < num_states; ++q) {
    std::uint8_t final_flag = r.u8();
    if (final_flag > 1) r.fail("bad final flag");
    t.set_final(id[q], final_flag == 1);
    std::uint32_t num_arcs = r.u32();
    for (std::uint32_t k = 0; k < num_arcs; ++k) {
      Symbol input = r.u32();
      std::uint32_t target = r.u32();
      std::uint32_t len = r.u32();
      if (input >= t.input_symbols().size()) r.fail("input symbol out of range");
      if (target >= num_states) r.fail("target state out of range");
      if (len > r.remaining() / 4) r.fail("output exceeds data");
      if (t.find_arc(id[q], input) != nullptr) {
        r.fail("second transition on the same input (nondeterministic)");
      }
      std::vector<Symbol> out(len);
      for (Symbol& x : out) {
        x = r.u32();
        if (x >= t.output_symbols().size()) r.fail("output symbol out of range");
      }
      t.set_transition(id[q], input, OutputString(std::move(out)), id[target]);
    }
  }
  if (r.remaining() != 0) r.fail("trailing bytes");
  return t;
}

std::vector<std::uint8_t> serialize(const Transducer& t, Format format) {
  if (format == Format::kBinary) return to_binary(t);
  std::string text = to_text(t);
  return {text.begin(), text.end()};
}

Transducer deserialize(std::span<const std::uint8_t> bytes) {
  if (bytes.size() >= 4 && std::memcmp(bytes.data(), kBinaryMagic, 4) == 0) {
    return from_binary(bytes);
  }
  return from_text(std::string_view(reinterpret_cast<const char*>(bytes.data()),
                                    bytes.size()));
}

void write_file(const std::string& path, const Transducer& t, Format format) {
  std::vector<std::uint8_t> bytes = serialize(t, format);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("cannot write '" + path + "'");
}

Transducer read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return deserialize(bytes);
}

}  // namespace seqfst
