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
#include <optional>
#include <span>
#include <vector>

#include "dyck/core.hpp"
#include "dyck/fingerprint.hpp"
#include "dyck/metrics.hpp"
#include "dyck/onepass.hpp"
#include "dyck/source.hpp"

namespace dyck {

/// Summary of a subsequence v: h = hash(v), ell = height(v), first = the
/// 1-based position of v's first letter in the word being scanned.
struct TwoPassItem {
  Residue h;
  std::uint64_t ell = 0;
  std::uint64_t first = 0;
  friend bool operator==(const TwoPassItem&, const TwoPassItem&) = default;
};

enum class Direction : std::uint8_t { forward, reverse };

struct Padding {
  std::uint64_t padded_n = 0;
  std::uint64_t pad_count = 0;
};

/// Smallest power of two >= n and the number of letters (a pairs of aā) that
/// fill the gap. nullopt for odd n, which is never a member.
std::optional<Padding> pad_to_pow2(std::uint64_t n);

/// Instrumentation hook. Positions index the padded word as scanned in the
/// current direction (reversed for the second pass).
class TwoPassObserver {
 public:
  virtual ~TwoPassObserver() = default;
  virtual void on_pass_begin(Direction /*dir*/, std::uint64_t /*padded_n*/) {}
  virtual void on_push(std::uint64_t /*pos*/, const TwoPassItem& /*item*/) {}
  virtual void on_extend(std::uint64_t /*pos*/, const TwoPassItem& /*top*/) {}
  virtual void on_check(const TwoPassItem& /*item*/, bool /*passed*/) {}
  virtual void on_discard() {}
  virtual void on_compress(std::uint32_t /*level*/, const TwoPassItem& /*merged*/) {}
  /// `scanned` is the letter after dualization.
  virtual void on_letter_done(std::uint64_t /*pos*/, Letter /*scanned*/,
                              std::span<const TwoPassItem> /*stack*/) {}
};

/// Stack and counters of one directional pass over a padded word of length
/// 2^k. Letters are given raw; the reverse pass dualizes them.
class TwoPassState {
 public:
  TwoPassState(const HashParams& params, Direction dir, std::uint64_t padded_n,
               Metrics& metrics, TwoPassObserver* observer = nullptr);

  /// Reads one letter (the i = 1 leaf of the block recursion).
  RejectReason step(Letter raw);

  /// End of the level-`level` block that finishes at the current position:
  /// merges the top two items if both start inside that block.
  void close_block(std::uint32_t level);

  /// step() followed by close_block() for every block ending here.
  RejectReason feed(Letter raw);

  std::span<const TwoPassItem> stack() const { return stack_; }
  std::int64_t height() const { return height_; }
  std::uint64_t position() const { return pos_; }
  std::uint32_t levels() const { return k_; }

 private:
  HashParams params_;
  Direction dir_;
  std::uint32_t k_;
  Metrics& metrics_;
  TwoPassObserver* observer_;
  PowerTable powers_;
  std::vector<TwoPassItem> stack_;
  std::int64_t height_ = 0;
  std::uint64_t pos_ = 0;
};

/// Recursive form of the block algorithm: consumes exactly 2^level letters
/// from `reader`. Throws InputError if the reader runs dry.
RejectReason block_pass(std::uint32_t level, TwoPassState& state, LetterSource& reader);

/// The padded word x (aā)^i, scanned forward or, for the reverse pass,
/// back to front (raw letters, not dualized).
class PaddedSource final : public LetterSource {
 public:
  PaddedSource(std::unique_ptr<LetterSource> inner, std::uint64_t n,
               std::uint64_t pad_count, Direction dir);
  std::optional<Letter> next() override;

 private:
  std::unique_ptr<LetterSource> inner_;
  std::uint64_t n_;
  std::uint64_t pad_count_;
  Direction dir_;
  std::uint64_t emitted_ = 0;
};

/// Forward pass then reverse pass. The source must yield the same letters in
/// both directions.
CheckResult check_two_pass(const BidirectionalSource& stream, const HashParams& params,
                           TwoPassObserver* observer = nullptr);

CheckResult check_two_pass(const Word& w, const HashParams& params,
                           TwoPassObserver* observer = nullptr);

}  // namespace dyck
