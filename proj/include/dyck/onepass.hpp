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
#include <span>
#include <utility>
#include <vector>

#include "dyck/core.hpp"
#include "dyck/fingerprint.hpp"
#include "dyck/metrics.hpp"
#include "dyck/source.hpp"

namespace dyck {

/// Summary of a subsequence v of the stream: h = hash(v), ell = height(v).
struct OnePassItem {
  Residue h;
  std::uint64_t ell = 0;
  friend bool operator==(const OnePassItem&, const OnePassItem&) = default;
};

/// Residue of a block after cancelling every adjacent opener/closer pair:
/// a run of closers followed by a run of openers. Offsets are 0-based
/// positions inside the block.
struct SimplifiedBlock {
  bool mismatched = false;
  std::vector<std::uint32_t> down;
  std::vector<std::uint32_t> up;
  /// (opener, closer) offsets cancelled inside the block.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cancelled;
};

SimplifiedBlock simplify_block(std::span<const Letter> block);

/// Hook for test instrumentation. Positions are 1-based stream indices.
class OnePassObserver {
 public:
  virtual ~OnePassObserver() = default;
  virtual void on_block_pair(std::uint64_t /*open_pos*/, std::uint64_t /*close_pos*/) {}
  /// A down-run closer was folded into the top item; `top` is the result.
  virtual void on_extend(std::uint64_t /*pos*/, const OnePassItem& /*top*/) {}
  virtual void on_check(const OnePassItem& /*item*/, bool /*passed*/) {}
  virtual void on_discard() {}
  virtual void on_push(std::span<const std::uint64_t> /*positions*/, const OnePassItem& /*item*/) {}
  virtual void on_block_end(std::uint64_t /*last_pos*/, std::span<const OnePassItem> /*stack*/) {}
};

/// Streaming checker that reads blocks of ceil(sqrt(n)) letters and keeps one
/// compressed item per block on its stack.
class OnePassChecker {
 public:
  OnePassChecker(const HashParams& params, std::uint64_t n,
                 OnePassObserver* observer = nullptr);

  /// Feeds the next letter. Letters after a rejection are ignored; more than
  /// n letters is an InputError.
  void push(Letter l);

  /// Flushes the last partial block and decides. Throws InputError if fewer
  /// than n letters were fed.
  Verdict finish();

  bool rejected() const { return !verdict_.accepted(); }
  std::uint64_t block_size() const { return block_size_; }
  std::int64_t running_height() const { return height_; }
  std::span<const OnePassItem> stack() const { return stack_; }
  const Metrics& metrics() const { return metrics_; }

  /// Runs one block against the stack. Returns the reject reason, if any.
  RejectReason process_block(std::span<const Letter> block);

 private:
  void reject(RejectReason r);

  HashParams params_;
  std::uint64_t n_;
  std::uint64_t block_size_;
  OnePassObserver* observer_;
  PowerTable powers_;

  std::vector<OnePassItem> stack_;
  std::vector<Letter> buffer_;
  std::int64_t height_ = 0;
  std::uint64_t consumed_ = 0;  // letters already handed to process_block
  bool finished_ = false;
  Verdict verdict_;
  Metrics metrics_;
};

struct CheckResult {
  Verdict verdict;
  Metrics metrics;
};

/// Reads exactly n letters (stopping early on rejection).
CheckResult check_one_pass(LetterSource& stream, std::uint64_t n,
                           const HashParams& params,
                           OnePassObserver* observer = nullptr);

CheckResult check_one_pass(const Word& w, const HashParams& params,
                           OnePassObserver* observer = nullptr);

/// ceil(sqrt(n)), exact for all 64-bit n.
std::uint64_t ceil_sqrt(std::uint64_t n);

}  // namespace dyck
