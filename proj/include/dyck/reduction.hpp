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
#include <deque>
#include <memory>
#include <string>
#include <vector>

#include "dyck/core.hpp"
#include "dyck/source.hpp"

namespace dyck {

/// Letterwise encoding of a 2s-letter alphabet into {a, ā, b, b̄}: every
/// letter becomes `code_length` letters.
struct ReductionParams {
  std::uint32_t s = 2;
  std::uint32_t code_length = 1;

  /// code_length = max(1, ceil(log2 s)).
  static ReductionParams for_alphabet(std::uint32_t s);
};

/// Opener of type i: bits of i-1, most significant first, 0 -> a, 1 -> b.
/// Closer of type i: the same bits least significant first, 0 -> ā, 1 -> b̄.
/// Throws InputError when the type is outside [1, s].
std::vector<Letter> encode_letter(const ReductionParams& params, Letter l);

/// Streaming adapter applying encode_letter to every letter of `inner`.
class ReducedSource final : public LetterSource {
 public:
  ReducedSource(ReductionParams params, LetterSource& inner)
      : params_(params), inner_(inner) {}
  std::optional<Letter> next() override;

 private:
  ReductionParams params_;
  LetterSource& inner_;
  std::vector<Letter> pending_;
  std::size_t pos_ = 0;
};

/// Whole-word convenience over ReducedSource.
Word reduce_word(const Word& w);

/// Open/close event of a named tag.
struct TagEvent {
  bool open = true;
  std::string name;
  friend bool operator==(const TagEvent&, const TagEvent&) = default;
};

/// Encodes one tag event: an open tag emits 8 letters per name byte (most
/// significant bit first, 0 -> a, 1 -> b); a close tag emits the matching
/// word of that encoding. Throws InputError for an empty name.
std::vector<Letter> encode_tag(const TagEvent& e);

/// Streaming adapter over a sequence of tag events.
class TagSource final : public LetterSource {
 public:
  explicit TagSource(std::vector<TagEvent> events) : events_(std::move(events)) {}
  std::optional<Letter> next() override;

 private:
  std::vector<TagEvent> events_;
  std::size_t event_ = 0;
  std::vector<Letter> pending_;
  std::size_t pos_ = 0;
};

Word encode_tag_stream(const std::vector<TagEvent>& events);

}  // namespace dyck
