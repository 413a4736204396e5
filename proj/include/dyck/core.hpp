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

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dyck {

/// Raised for malformed input: bad bytes, out-of-range types, length mismatches.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Kind : std::uint8_t { opener, closer };

/// One parenthesis symbol. `type` is 1-based; for the four-letter alphabet
/// type 1 is a/ā and type 2 is b/b̄.
struct Letter {
  Kind kind = Kind::opener;
  std::uint32_t type = 1;

  static constexpr Letter open(std::uint32_t t) { return {Kind::opener, t}; }
  static constexpr Letter close(std::uint32_t t) { return {Kind::closer, t}; }

  constexpr bool is_opener() const { return kind == Kind::opener; }
  constexpr bool is_closer() const { return kind == Kind::closer; }

  friend constexpr bool operator==(Letter, Letter) = default;
};

inline constexpr Letter kA = Letter::open(1);
inline constexpr Letter kAbar = Letter::close(1);
inline constexpr Letter kB = Letter::open(2);
inline constexpr Letter kBbar = Letter::close(2);

/// A finite word over the 2s-letter alphabet {a_1, ā_1, ..., a_s, ā_s}.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters, std::uint32_t alphabet_size = 2);
  Word(std::initializer_list<Letter> letters, std::uint32_t alphabet_size = 2)
      : Word(std::vector<Letter>(letters), alphabet_size) {}

  std::span<const Letter> letters() const { return letters_; }
  std::uint32_t alphabet_size() const { return alphabet_size_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// 1-based access, matching x[i] notation.
  Letter at(std::size_t i) const { return letters_.at(i - 1); }
  Letter operator[](std::size_t zero_based) const { return letters_[zero_based]; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
  std::uint32_t alphabet_size_ = 2;
};

/// Word over {a, ā, b, b̄} written with ( ) [ ]. Throws InputError on other
/// non-whitespace bytes.
Word word(std::string_view brackets);

/// Inverse of word(); only valid for alphabet size 2.
std::string to_brackets(const Word& w);

/// A matching pair (i, j), 1-based, i < j.
struct MatchingPair {
  std::size_t i = 0;
  std::size_t j = 0;
  friend constexpr bool operator==(MatchingPair, MatchingPair) = default;
  friend constexpr auto operator<=>(MatchingPair, MatchingPair) = default;
};

enum class RejectReason : std::uint8_t {
  none,
  negative_height,
  missing_closing,
  mismatched,
  extra_closing,
};

/// Snake-case identifier, stable for machine-readable records.
std::string_view reason_name(RejectReason r);
/// Human-readable message, e.g. "mismatched parentheses".
std::string_view reason_message(RejectReason r);

class Verdict {
 public:
  static Verdict accept() { return Verdict{}; }
  static Verdict reject(RejectReason r);

  bool accepted() const { return reason_ == RejectReason::none; }
  RejectReason reason() const { return reason_; }

  friend bool operator==(const Verdict&, const Verdict&) = default;

 private:
  RejectReason reason_ = RejectReason::none;
};

std::ostream& operator<<(std::ostream& os, const Verdict& v);

constexpr int step_value(Letter l) { return l.is_opener() ? +1 : -1; }

/// Swaps opener and closer of the same type.
constexpr Letter dual(Letter l) {
  return {l.is_opener() ? Kind::closer : Kind::opener, l.type};
}

/// Element t (0-based) is height(x[1, t+1]).
std::vector<std::int64_t> prefix_heights(const Word& w);

/// All matching pairs, sorted by i. Closers that drive the height below every
/// open opener belong to no pair, nor do openers left unclosed.
std::vector<MatchingPair> matching_pairs(const Word& w);

/// partner[i] is the 1-based matching partner of position i, or 0 when i is
/// unmatched. partner[0] is unused.
std::vector<std::size_t> matching_partners(const Word& w);

/// Exact linear-space membership test with an explicit letter stack.
Verdict oracle_check(const Word& w);

/// Definition of an l-balanced index set: per height, openers of type `type`
/// (measured after the step) and closers of that type (measured before the
/// step) occur equally often. Indices are 1-based.
bool is_balanced(const Word& w, std::span<const std::size_t> indices,
                 std::uint32_t type);

/// Balanced for every type in the word's alphabet.
bool is_balanced(const Word& w, std::span<const std::size_t> indices);

}  // namespace dyck
