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
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "dyck/core.hpp"

namespace dyck {

/// Forward stream of letters; next() returns nullopt at end of stream.
class LetterSource {
 public:
  virtual ~LetterSource() = default;
  virtual std::optional<Letter> next() = 0;
};

/// A stream that can be scanned once forward and once in reverse. The reverse
/// scan yields the same letters back to front, without dualization.
class BidirectionalSource {
 public:
  virtual ~BidirectionalSource() = default;
  virtual std::uint64_t size() const = 0;
  virtual std::unique_ptr<LetterSource> forward() const = 0;
  virtual std::unique_ptr<LetterSource> reverse() const = 0;
};

/// Non-owning view over letters in memory.
class SpanSource final : public LetterSource {
 public:
  explicit SpanSource(std::span<const Letter> letters) : letters_(letters) {}
  std::optional<Letter> next() override {
    if (pos_ == letters_.size()) return std::nullopt;
    return letters_[pos_++];
  }

 private:
  std::span<const Letter> letters_;
  std::size_t pos_ = 0;
};

class ReverseSpanSource final : public LetterSource {
 public:
  explicit ReverseSpanSource(std::span<const Letter> letters)
      : letters_(letters), pos_(letters.size()) {}
  std::optional<Letter> next() override {
    if (pos_ == 0) return std::nullopt;
    return letters_[--pos_];
  }

 private:
  std::span<const Letter> letters_;
  std::size_t pos_;
};

/// Fully buffered word; the referenced letters must outlive this object.
class WordSource final : public BidirectionalSource {
 public:
  explicit WordSource(std::span<const Letter> letters) : letters_(letters) {}
  explicit WordSource(const Word& w) : letters_(w.letters()) {}

  std::uint64_t size() const override { return letters_.size(); }
  std::unique_ptr<LetterSource> forward() const override {
    return std::make_unique<SpanSource>(letters_);
  }
  std::unique_ptr<LetterSource> reverse() const override {
    return std::make_unique<ReverseSpanSource>(letters_);
  }

 private:
  std::span<const Letter> letters_;
};

/// Letters of a file in bracket form: ( ) [ ] plus whitespace, nothing else.
/// Both scans read fixed-size chunks; the reverse scan seeks backwards, so no
/// more than one chunk is resident at a time.
class BracketFileSource final : public BidirectionalSource {
 public:
  static constexpr std::size_t kChunk = 4096;

  /// Scans the file once to count letters. Throws InputError on any byte
  /// outside the bracket alphabet and whitespace.
  explicit BracketFileSource(std::filesystem::path path);

  std::uint64_t size() const override { return size_; }
  std::unique_ptr<LetterSource> forward() const override;
  std::unique_ptr<LetterSource> reverse() const override;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::uint64_t size_ = 0;
};

/// Maps a bracket byte to its letter; nullopt for whitespace. Throws
/// InputError for anything else.
std::optional<Letter> bracket_letter(char ch);

}  // namespace dyck
