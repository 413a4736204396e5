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

#include "dyck/twopass.hpp"

#include <bit>
#include <chrono>

namespace dyck {

std::optional<Padding> pad_to_pow2(std::uint64_t n) {
  if (n % 2 != 0) return std::nullopt;
  if (n == 0) return Padding{0, 0};
  const std::uint64_t padded = std::bit_ceil(n);
  return Padding{padded, padded - n};
}

TwoPassState::TwoPassState(const HashParams& params, Direction dir,
                           std::uint64_t padded_n, Metrics& metrics,
                           TwoPassObserver* observer)
    : params_(params),
      dir_(dir),
      k_(static_cast<std::uint32_t>(std::countr_zero(padded_n))),
      metrics_(metrics),
      observer_(observer),
      powers_(params, padded_n) {
  if (!std::has_single_bit(padded_n)) throw std::logic_error("padded length must be 2^k");
  metrics_.hash_mults += powers_.setup_mults();
  stack_.reserve(2 * k_ + 2);
}

RejectReason TwoPassState::step(Letter raw) {
  const Letter y = dir_ == Direction::reverse ? dual(raw) : raw;
  ++pos_;
  ++metrics_.letters_read;
  if (y.is_opener()) {
    ++height_;
    TwoPassItem item{
        powers_.letter_hash(y, static_cast<std::uint64_t>(height_), &metrics_.hash_mults), 1,
        pos_};
    stack_.push_back(item);
    metrics_.record_push();
    if (observer_) observer_->on_push(pos_, item);
  } else {
    if (stack_.empty()) return RejectReason::negative_height;
    TwoPassItem item = stack_.back();
    stack_.pop_back();
    metrics_.record_pop();
    const Residue lh =
        powers_.letter_hash(y, static_cast<std::uint64_t>(height_), &metrics_.hash_mults);
    --height_;
    --item.ell;
    item.h = combine(params_, item.h, lh);
    stack_.push_back(item);
    metrics_.record_push();
    if (observer_) observer_->on_extend(pos_, item);
    if (item.ell == 0) {
      metrics_.record_check();
      const bool passed = item.h.is_zero();
      if (observer_) observer_->on_check(item, passed);
      if (!passed) return RejectReason::mismatched;
      stack_.pop_back();
      metrics_.record_pop();
      if (observer_) observer_->on_discard();
    }
  }
  if (observer_) observer_->on_letter_done(pos_, y, stack_);
  return RejectReason::none;
}

void TwoPassState::close_block(std::uint32_t level) {
  const std::uint64_t start = pos_ - (std::uint64_t{1} << level) + 1;
  const std::size_t size = stack_.size();
  if (size < 2 || stack_[size - 1].first < start || stack_[size - 2].first < start) return;
  if (size >= 3 && stack_[size - 3].first >= start) {
    throw std::logic_error("more than two stack items start inside one block");
  }
  const TwoPassItem upper = stack_.back();
  stack_.pop_back();
  metrics_.record_pop();
  TwoPassItem& lower = stack_.back();
  lower.h = combine(params_, lower.h, upper.h);
  lower.ell += upper.ell;
  if (observer_) observer_->on_compress(level, lower);
}

RejectReason TwoPassState::feed(Letter raw) {
  const RejectReason r = step(raw);
  if (r != RejectReason::none) return r;
  // Blocks of level i end at positions divisible by 2^i.
  const auto closing = static_cast<std::uint32_t>(std::countr_zero(pos_));
  for (std::uint32_t level = 1; level <= closing && level <= k_; ++level) close_block(level);
  return RejectReason::none;
}

RejectReason block_pass(std::uint32_t level, TwoPassState& state, LetterSource& reader) {
  if (level == 0) throw std::logic_error("block level starts at 1");
  for (int half = 0; half < 2; ++half) {
    if (level > 1) {
      const RejectReason r = block_pass(level - 1, state, reader);
      if (r != RejectReason::none) return r;
    } else {
      const auto l = reader.next();
      if (!l) throw InputError("stream ended inside a block");
      const RejectReason r = state.step(*l);
      if (r != RejectReason::none) return r;
    }
  }
  state.close_block(level);
  return RejectReason::none;
}

PaddedSource::PaddedSource(std::unique_ptr<LetterSource> inner, std::uint64_t n,
                           std::uint64_t pad_count, Direction dir)
    : inner_(std::move(inner)), n_(n), pad_count_(pad_count), dir_(dir) {}

std::optional<Letter> PaddedSource::next() {
  const std::uint64_t total = n_ + pad_count_;
  if (emitted_ == total) return std::nullopt;
  const std::uint64_t k = emitted_++;
  if (dir_ == Direction::forward) {
    if (k < n_) {
      auto l = inner_->next();
      if (!l) throw InputError("stream shorter than its declared length");
      return l;
    }
    return (k - n_) % 2 == 0 ? kA : kAbar;
  }
  // Reversed (aā)^i reads ā a ā a ...
  if (k < pad_count_) return k % 2 == 0 ? kAbar : kA;
  auto l = inner_->next();
  if (!l) throw InputError("stream shorter than its declared length");
  return l;
}

namespace {

RejectReason run_pass(const BidirectionalSource& stream, const Padding& pad,
                      Direction dir, const HashParams& params, Metrics& metrics,
                      TwoPassObserver* observer, bool& stack_empty) {
  const std::uint64_t n = stream.size();
  auto inner = dir == Direction::forward ? stream.forward() : stream.reverse();
  LetterSource& raw = *inner;
  PaddedSource padded(std::move(inner), n, pad.pad_count, dir);
  if (observer) observer->on_pass_begin(dir, pad.padded_n);
  TwoPassState state(params, dir, pad.padded_n, metrics, observer);
  ++metrics.pass_count;
  while (auto l = padded.next()) {
    const RejectReason r = state.feed(*l);
    if (r != RejectReason::none) return r;
  }
  if (raw.next()) throw InputError("stream longer than its declared length");
  stack_empty = state.stack().empty();
  return RejectReason::none;
}

}  // namespace

CheckResult check_two_pass(const BidirectionalSource& stream, const HashParams& params,
                           TwoPassObserver* observer) {
  const auto start = std::chrono::steady_clock::now();
  Metrics m;
  m.algo = Algo::twopass;
  m.n = stream.size();
  Verdict verdict = Verdict::accept();

  const auto pad = pad_to_pow2(m.n);
  if (!pad) {
    verdict = Verdict::reject(RejectReason::missing_closing);
  } else if (pad->padded_n > 0) {
    m.padded_n = pad->padded_n;
    m.item_bits = bits_for(params.p - 1) + 2 * bits_for(pad->padded_n);
    // Position, height, pad count, block level and the squares of alpha.
    m.control_bits = 4 * bits_for(pad->padded_n) +
                     PowerTable::entries(pad->padded_n) * bits_for(params.p - 1);

    bool empty = false;
    RejectReason r = run_pass(stream, *pad, Direction::forward, params, m, observer, empty);
    if (r == RejectReason::none && !empty) r = RejectReason::missing_closing;
    if (r == RejectReason::none) {
      m.stack_items = 0;
      r = run_pass(stream, *pad, Direction::reverse, params, m, observer, empty);
      if (r == RejectReason::none && !empty) {
        throw std::logic_error("reverse pass ended with a nonempty stack");
      }
    }
    if (r != RejectReason::none) verdict = Verdict::reject(r);
  }
  m.verdict = verdict;
  m.elapsed_us = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::microseconds>(
          std::chrono::steady_clock::now() - start)
          .count());
  return {verdict, m};
}

CheckResult check_two_pass(const Word& w, const HashParams& params,
                           TwoPassObserver* observer) {
  WordSource src(w);
  return check_two_pass(src, params, observer);
}

}  // namespace dyck
