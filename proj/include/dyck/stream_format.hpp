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

#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "dyck/core.hpp"
#include "dyck/reduction.hpp"
#include "dyck/source.hpp"

namespace dyck {

/// chars2: ( ) [ ] for a ā b b̄. tokens: "+i" / "-i" (or U+2212 minus) for
/// opener / closer of type i. tags: one "<name" or ">name" event per line.
/// All formats skip whitespace and '#' comments running to end of line.
enum class StreamFormat : std::uint8_t { chars2, tokens, tags };

std::string_view format_name(StreamFormat f);
StreamFormat parse_format(std::string_view s);

/// Letters of a bracket stream, read lazily from `in`.
class BracketStreamSource final : public LetterSource {
 public:
  explicit BracketStreamSource(std::istream& in) : in_(in) {}
  std::optional<Letter> next() override;

 private:
  std::istream& in_;
};

/// Letters of a token stream over an alphabet of size s.
class TokenStreamSource final : public LetterSource {
 public:
  TokenStreamSource(std::istream& in, std::uint32_t s) : in_(in), s_(s) {}
  std::optional<Letter> next() override;

 private:
  std::istream& in_;
  std::uint32_t s_;
};

/// Parses one token ("+3", "-1", "−2"). Throws InputError.
Letter parse_token(std::string_view tok, std::uint32_t s);

/// Reads all tag events from `in`.
std::vector<TagEvent> read_tag_events(std::istream& in);

/// Whole-buffer parse. tags are encoded through encode_tag_stream.
Word parse_stream(std::string_view bytes, StreamFormat format, std::uint32_t s = 2);

/// Text form of a word; tags is not a valid target.
std::string emit_stream(const Word& w, StreamFormat format);

std::string emit_tag_events(const std::vector<TagEvent>& events);

}  // namespace dyck
