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

#include "dyck/source.hpp"

#include <array>
#include <cctype>
#include <string>

namespace dyck {

std::optional<Letter> bracket_letter(char ch) {
  switch (ch) {
    case '(': return kA;
    case ')': return kAbar;
    case '[': return kB;
    case ']': return kBbar;
    default: break;
  }
  if (std::isspace(static_cast<unsigned char>(ch))) return std::nullopt;
  throw InputError(std::string("unexpected byte '") + ch + "' in bracket stream");
}

namespace {

class ForwardFileReader final : public LetterSource {
 public:
  explicit ForwardFileReader(const std::filesystem::path& path)
      : in_(path, std::ios::binary) {
    if (!in_) throw InputError("cannot open " + path.string());
  }

  std::optional<Letter> next() override {
    for (;;) {
      if (pos_ == len_) {
        in_.read(buf_.data(), buf_.size());
        len_ = static_cast<std::size_t>(in_.gcount());
        pos_ = 0;
        if (len_ == 0) return std::nullopt;
      }
      if (auto l = bracket_letter(buf_[pos_++])) return l;
    }
  }

 private:
  std::ifstream in_;
  std::array<char, BracketFileSource::kChunk> buf_{};
  std::size_t pos_ = 0;
  std::size_t len_ = 0;
};

class ReverseFileReader final : public LetterSource {
 public:
  explicit ReverseFileReader(const std::filesystem::path& path)
      : in_(path, std::ios::binary) {
    if (!in_) throw InputError("cannot open " + path.string());
    in_.seekg(0, std::ios::end);
    offset_ = static_cast<std::uint64_t>(in_.tellg());
  }

  std::optional<Letter> next() override {
    for (;;) {
      if (pos_ == 0) {
        if (offset_ == 0) return std::nullopt;
        const std::uint64_t take = std::min<std::uint64_t>(offset_, buf_.size());
        offset_ -= take;
        in_.seekg(static_cast<std::streamoff>(offset_));
        in_.read(buf_.data(), static_cast<std::streamsize>(take));
        if (static_cast<std::uint64_t>(in_.gcount()) != take) {
          throw InputError("short read while scanning in reverse");
        }
        pos_ = static_cast<std::size_t>(take);
      }
      if (auto l = bracket_letter(buf_[--pos_])) return l;
    }
  }

 private:
  std::ifstream in_;
  std::array<char, BracketFileSource::kChunk> buf_{};
  std::uint64_t offset_ = 0;
  std::size_t pos_ = 0;
};

}  // namespace

BracketFileSource::BracketFileSource(std::filesystem::path path) : path_(std::move(path)) {
  ForwardFileReader reader(path_);
  while (reader.next()) ++size_;
}

std::unique_ptr<LetterSource> BracketFileSource::forward() const {
  return std::make_unique<ForwardFileReader>(path_);
}

std::unique_ptr<LetterSource> BracketFileSource::reverse() const {
  return std::make_unique<ReverseFileReader>(path_);
}

}  // namespace dyck
