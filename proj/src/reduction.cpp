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

#include "dyck/reduction.hpp"

#include <bit>

namespace dyck {

ReductionParams ReductionParams::for_alphabet(std::uint32_t s) {
  if (s < 1) throw InputError("alphabet size must be at least 1");
  ReductionParams p;
  p.s = s;
  // ceil(log2 s) == bit_width(s - 1); s = 1 still gets a one-letter code.
  p.code_length = std::max<std::uint32_t>(1, static_cast<std::uint32_t>(std::bit_width(s - 1)));
  return p;
}

std::vector<Letter> encode_letter(const ReductionParams& params, Letter l) {
  if (l.type < 1 || l.type > params.s) {
    throw InputError("letter type " + std::to_string(l.type) + " outside [1, " +
                     std::to_string(params.s) + "]");
  }
  const std::uint32_t code = l.type - 1;
  const std::uint32_t len = params.code_length;
  std::vector<Letter> out;
  out.reserve(len);
  for (std::uint32_t k = 0; k < len; ++k) {
    // Openers read the bits high to low, closers low to high.
    const std::uint32_t bit = l.is_opener() ? (code >> (len - 1 - k)) & 1U : (code >> k) & 1U;
    out.push_back(Letter{l.kind, bit + 1});
  }
  return out;
}

std::optional<Letter> ReducedSource::next() {
  if (pos_ == pending_.size()) {
    auto l = inner_.next();
    if (!l) return std::nullopt;
    pending_ = encode_letter(params_, *l);
    pos_ = 0;
  }
  return pending_[pos_++];
}

Word reduce_word(const Word& w) {
  SpanSource src(w.letters());
  ReducedSource reduced(ReductionParams::for_alphabet(w.alphabet_size()), src);
  std::vector<Letter> out;
  out.reserve(w.size());
  while (auto l = reduced.next()) out.push_back(*l);
  return Word(std::move(out), 2);
}

std::vector<Letter> encode_tag(const TagEvent& e) {
  if (e.name.empty()) throw InputError("tag name must be nonempty");
  std::vector<Letter> out;
  out.reserve(8 * e.name.size());
  if (e.open) {
    for (unsigned char byte : e.name) {
      for (int b = 7; b >= 0; --b) out.push_back(Letter::open(((byte >> b) & 1U) + 1));
    }
  } else {
    for (auto it = e.name.rbegin(); it != e.name.rend(); ++it) {
      const auto byte = static_cast<unsigned char>(*it);
      for (int b = 0; b < 8; ++b) out.push_back(Letter::close(((byte >> b) & 1U) + 1));
    }
  }
  return out;
}

std::optional<Letter> TagSource::next() {
  while (pos_ == pending_.size()) {
    if (event_ == events_.size()) return std::nullopt;
    pending_ = encode_tag(events_[event_++]);
    pos_ = 0;
  }
  return pending_[pos_++];
}

Word encode_tag_stream(const std::vector<TagEvent>& events) {
  TagSource src(events);
  std::vector<Letter> out;
  while (auto l = src.next()) out.push_back(*l);
  return Word(std::move(out), 2);
}

}  // namespace dyck
