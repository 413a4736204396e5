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

#include "dyck/onepass.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace dyck {

std::uint64_t ceil_sqrt(std::uint64_t n) {
  if (n == 0) return 0;
  using Wide = unsigned __int128;
  auto r = std::min<std::uint64_t>(static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n))),
                                   0xFFFFFFFFu);
  while (Wide{r} * r > n) --r;
  while (Wide{r + 1} * (r + 1) <= n) ++r;
  return Wide{r} * r == n ? r : r + 1;
}

SimplifiedBlock simplify_block(std::span<const Letter> block) {
  SimplifiedBlock out;
  // `up` doubles as the cancellation stack: an opener stays in the residue
  // until a later closer in the block pairs with it.
  for (std::uint32_t k = 0; k < block.size(); ++k) {
    const Letter l = block[k];
    if (l.is_opener()) {
      out.up.push_back(k);
    } else if (out.up.empty()) {
      out.down.push_back(k);
    } else {
      const std::uint32_t open = out.up.back();
      out.up.pop_back();
      if (block[open].type != l.type) {
        out.mismatched = true;
        return out;
      }
      out.cancelled.emplace_back(open, k);
    }
  }
  return out;
}

OnePassChecker::OnePassChecker(const HashParams& params, std::uint64_t n,
                               OnePassObserver* observer)
    : params_(params),
      n_(n),
      block_size_(std::max<std::uint64_t>(1, ceil_sqrt(n))),
      observer_(observer),
      powers_(params, n) {
  buffer_.reserve(block_size_);
  metrics_.algo = Algo::onepass;
  metrics_.n = n;
  metrics_.padded_n = n;
  metrics_.pass_count = 1;
  metrics_.item_bits = bits_for(params.p - 1) + bits_for(n);
  // Block buffer (two bits per letter), height, position and fill counters,
  // and the table of squares of alpha.
  metrics_.control_bits =
      2 * block_size_ + 3 * bits_for(n) + powers_.size() * bits_for(params.p - 1);
  metrics_.hash_mults = powers_.setup_mults();
}

void OnePassChecker::reject(RejectReason r) {
  if (verdict_.accepted()) verdict_ = Verdict::reject(r);
}

void OnePassChecker::push(Letter l) {
  if (finished_) throw std::logic_error("push after finish");
  if (metrics_.letters_read == n_) {
    throw InputError("stream longer than the declared length " + std::to_string(n_));
  }
  ++metrics_.letters_read;
  if (rejected()) return;
  buffer_.push_back(l);
  if (buffer_.size() == block_size_) {
    process_block(buffer_);
    buffer_.clear();
  }
}

RejectReason OnePassChecker::process_block(std::span<const Letter> block) {
  const std::uint64_t base = consumed_;
  consumed_ += block.size();
  const SimplifiedBlock simple = simplify_block(block);
  if (simple.mismatched) {
    reject(RejectReason::mismatched);
    return RejectReason::mismatched;
  }
  if (observer_) {
    for (auto [o, c] : simple.cancelled) observer_->on_block_pair(base + o + 1, base + c + 1);
  }

  for (std::uint32_t off : simple.down) {
    if (stack_.empty()) {
      reject(RejectReason::extra_closing);
      return RejectReason::extra_closing;
    }
    OnePassItem item = stack_.back();
    stack_.pop_back();
    metrics_.record_pop();
    // Pair-height of a closer is the height before it.
    const Residue lh = powers_.letter_hash(block[off], static_cast<std::uint64_t>(height_),
                                           &metrics_.hash_mults);
    --height_;
    --item.ell;
    item.h = combine(params_, item.h, lh);
    stack_.push_back(item);
    metrics_.record_push();
    if (observer_) observer_->on_extend(base + off + 1, item);
    if (item.ell == 0) {
      metrics_.record_check();
      const bool passed = item.h.is_zero();
      if (observer_) observer_->on_check(item, passed);
      if (!passed) {
        reject(RejectReason::mismatched);
        return RejectReason::mismatched;
      }
      stack_.pop_back();
      metrics_.record_pop();
      if (observer_) observer_->on_discard();
    }
  }

  if (!simple.up.empty()) {
    OnePassItem item;
    std::vector<std::uint64_t> positions;
    if (observer_) positions.reserve(simple.up.size());
    for (std::uint32_t off : simple.up) {
      ++height_;
      item.h = combine(params_, item.h,
                       powers_.letter_hash(block[off], static_cast<std::uint64_t>(height_),
                                           &metrics_.hash_mults));
      ++item.ell;
      if (observer_) positions.push_back(base + off + 1);
    }
    stack_.push_back(item);
    metrics_.record_push();
    if (observer_) observer_->on_push(positions, item);
  }
  if (observer_) observer_->on_block_end(consumed_, stack_);
  return RejectReason::none;
}

Verdict OnePassChecker::finish() {
  if (finished_) return verdict_;
  if (!rejected() && metrics_.letters_read < n_) {
    throw InputError("stream ended after " + std::to_string(metrics_.letters_read) +
                     " of " + std::to_string(n_) + " letters");
  }
  finished_ = true;
  if (!rejected() && !buffer_.empty()) {
    process_block(buffer_);
    buffer_.clear();
  }
  if (!rejected() && !stack_.empty()) reject(RejectReason::missing_closing);
  metrics_.verdict = verdict_;
  return verdict_;
}

CheckResult check_one_pass(LetterSource& stream, std::uint64_t n,
                           const HashParams& params, OnePassObserver* observer) {
  const auto start = std::chrono::steady_clock::now();
  OnePassChecker checker(params, n, observer);
  while (!checker.rejected()) {
    auto l = stream.next();
    if (!l) break;
    checker.push(*l);
  }
  const Verdict v = checker.finish();
  Metrics m = checker.metrics();
  m.elapsed_us = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::microseconds>(
          std::chrono::steady_clock::now() - start)
          .count());
  return {v, m};
}

CheckResult check_one_pass(const Word& w, const HashParams& params,
                           OnePassObserver* observer) {
  SpanSource src(w.letters());
  return check_one_pass(src, w.size(), params, observer);
}

}  // namespace dyck
