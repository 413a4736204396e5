// Copyright 2026 The dyckstream Authors
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

#include "dyck/stream_format.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

namespace dyck {

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

void skip_comment(std::istream& in) {
  in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
}

}  // namespace

std::string_view format_name(StreamFormat f) {
  switch (f) {
    case StreamFormat::chars2: return "chars2";
    case StreamFormat::tokens: return "tokens";
    case StreamFormat::tags: return "tags";
  }
  return "unknown";
}

StreamFormat parse_format(std::string_view s) {
  if (s == "chars2") return StreamFormat::chars2;
  if (s == "tokens") return StreamFormat::tokens;
  if (s == "tags") return StreamFormat::tags;
  throw InputError("unknown stream format '" + std::string(s) + "'");
}

std::optional<Letter> BracketStreamSource::next() {
  char ch;
  while (in_.get(ch)) {
    if (ch == '#') {
      skip_comment(in_);
      continue;
    }
    if (auto l = bracket_letter(ch)) return l;
  }
  return std::nullopt;
}

Letter parse_token(std::string_view tok, std::uint32_t s) {
  Kind kind;
  std::string_view digits;
  if (tok.starts_with('+')) {
    kind = Kind::opener;
    digits = tok.substr(1);
  } else if (tok.starts_with('-')) {
    kind = Kind::closer;
    digits = tok.substr(1);
  } else if (tok.starts_with(kUnicodeMinus)) {
    kind = Kind::closer;
    digits = tok.substr(kUnicodeMinus.size());
  } else {
    throw InputError("bad token '" + std::string(tok) + "'");
  }
  std::uint32_t type = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), type);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
    throw InputError("bad token '" + std::string(tok) + "'");
  }
  if (type < 1 || type > s) {
    throw InputError("token '" + std::string(tok) + "' outside alphabet of size " +
                     std::to_string(s));
  }
  return Letter{kind, type};
}

std::optional<Letter> TokenStreamSource::next() {
  std::string tok;
  while (in_ >> tok) {
    if (tok.starts_with('#')) {
      skip_comment(in_);
      continue;
    }
    return parse_token(tok, s_);
  }
  return std::nullopt;
}

std::vector<TagEvent> read_tag_events(std::istream& in) {
  std::vector<TagEvent> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    std::size_t start = 0;
    while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start]))) ++start;
    if (start == line.size() || line[start] == '#') continue;
    const char marker = line[start];
    if (marker != '<' && marker != '>') throw InputError("bad tag event '" + line + "'");
    TagEvent e{marker == '<', line.substr(start + 1)};
    if (e.name.empty()) throw InputError("tag name must be nonempty");
    out.push_back(std::move(e));
  }
  return out;
}

Word parse_stream(std::string_view bytes, StreamFormat format, std::uint32_t s) {
  std::istringstream in{std::string(bytes)};
  std::vector<Letter> out;
  switch (format) {
    case StreamFormat::chars2: {
      if (s != 2) throw InputError("chars2 format requires alphabet size 2");
      BracketStreamSource src(in);
      while (auto l = src.next()) out.push_back(*l);
      return Word(std::move(out), 2);
    }
    case StreamFormat::tokens: {
      TokenStreamSource src(in, s);
      while (auto l = src.next()) out.push_back(*l);
      return Word(std::move(out), s);
    }
    case StreamFormat::tags:
      return encode_tag_stream(read_tag_events(in));
  }
  throw InputError("unknown format");
}

std::string emit_stream(const Word& w, StreamFormat format) {
  switch (format) {
    case StreamFormat::chars2:
      return to_brackets(w);
    case StreamFormat::tokens: {
      std::string out;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out.push_back(' ');
        out.push_back(w[i].is_opener() ? '+' : '-');
        out += std::to_string(w[i].type);
      }
      return out;
    }
    case StreamFormat::tags:
      break;
  }
  throw InputError("words cannot be written in tags format");
}

std::string emit_tag_events(const std::vector<TagEvent>& events) {
  std::string out;
  for (const auto& e : events) {
    out.push_back(e.open ? '<' : '>');
    out += e.name;
    out.push_back('\n');
  }
  return out;
}

}  // namespace dyck
