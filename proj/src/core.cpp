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

#include "dyck/core.hpp"

#include <cctype>
#include <map>
#include <ostream>

namespace dyck {

Word::Word(std::vector<Letter> letters, std::uint32_t alphabet_size)
    : letters_(std::move(letters)), alphabet_size_(alphabet_size) {
  if (alphabet_size_ < 1) throw InputError("alphabet size must be at least 1");
  for (const Letter& l : letters_) {
    if (l.type < 1 || l.type > alphabet_size_) {
      throw InputError("letter type " + std::to_string(l.type) +
                       " outside alphabet of size " +
                       std::to_string(alphabet_size_));
    }
  }
}

Word word(std::string_view brackets) {
  std::vector<Letter> out;
  out.reserve(brackets.size());
  for (char ch : brackets) {
    switch (ch) {
      case '(': out.push_back(kA); break;
      case ')': out.push_back(kAbar); break;
      case '[': out.push_back(kB); break;
      case ']': out.push_back(kBbar); break;
      default:
        if (std::isspace(static_cast<unsigned char>(ch))) break;
        throw InputError(std::string("unexpected byte '") + ch + "'");
    }
  }
  return Word(std::move(out), 2);
}

std::string to_brackets(const Word& w) {
  if (w.alphabet_size() > 2) throw InputError("bracket form needs alphabet size <= 2");
  std::string out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (l.type == 1) out.push_back(l.is_opener() ? '(' : ')');
    else out.push_back(l.is_opener() ? '[' : ']');
  }
  return out;
}

std::string_view reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::none: return "none";
    case RejectReason::negative_height: return "negative_height";
    case RejectReason::missing_closing: return "missing_closing";
    case RejectReason::mismatched: return "mismatched";
    case RejectReason::extra_closing: return "extra_closing";
  }
  return "unknown";
}

std::string_view reason_message(RejectReason r) {
  switch (r) {
    case RejectReason::none: return "accepted";
    case RejectReason::negative_height: return "negative height";
    case RejectReason::missing_closing: return "missing closing parenthesis";
    case RejectReason::mismatched: return "mismatched parentheses";
    case RejectReason::extra_closing: return "extra closing parenthesis";
  }
  return "unknown";
}

Verdict Verdict::reject(RejectReason r) {
  if (r == RejectReason::none) throw std::logic_error("reject needs a reason");
  Verdict v;
  v.reason_ = r;
  return v;
}

std::ostream& operator<<(std::ostream& os, const Verdict& v) {
  if (v.accepted()) return os << "accept";
  return os << "reject(" << reason_name(v.reason()) << ")";
}

std::vector<std::int64_t> prefix_heights(const Word& w) {
  std::vector<std::int64_t> out;
  out.reserve(w.size());
  std::int64_t h = 0;
  for (Letter l : w) {
    h += step_value(l);
    out.push_back(h);
  }
  return out;
}

std::vector<std::size_t> matching_partners(const Word& w) {
  std::vector<std::size_t> partner(w.size() + 1, 0);
  // Open upsteps, innermost last. A downstep pairs with the innermost open
  // upstep; with none open it sits in negative territory and stays unmatched.
  std::vector<std::size_t> open;
  for (std::size_t pos = 1; pos <= w.size(); ++pos) {
    if (w.at(pos).is_opener()) {
      open.push_back(pos);
    } else if (!open.empty()) {
      partner[pos] = open.back();
      partner[open.back()] = pos;
      open.pop_back();
    }
  }
  return partner;
}

std::vector<MatchingPair> matching_pairs(const Word& w) {
  const auto partner = matching_partners(w);
  std::vector<MatchingPair> out;
  for (std::size_t i = 1; i < partner.size(); ++i) {
    if (partner[i] > i) out.push_back({i, partner[i]});
  }
  return out;
}

Verdict oracle_check(const Word& w) {
  std::vector<std::uint32_t> stack;
  for (Letter l : w) {
    if (l.is_opener()) {
      stack.push_back(l.type);
      continue;
    }
    if (stack.empty()) return Verdict::reject(RejectReason::negative_height);
    if (stack.back() != l.type) return Verdict::reject(RejectReason::mismatched);
    stack.pop_back();
  }
  if (!stack.empty()) return Verdict::reject(RejectReason::missing_closing);
  return Verdict::accept();
}

bool is_balanced(const Word& w, std::span<const std::size_t> indices,
                 std::uint32_t type) {
  const auto heights = prefix_heights(w);
  // height(x[1, i]) for openers, height(x[1, i-1]) for closers.
  std::map<std::int64_t, std::int64_t> excess;
  for (std::size_t i : indices) {
    if (i < 1 || i > w.size()) throw InputError("index out of range");
    const Letter l = w.at(i);
    if (l.type != type) continue;
    if (l.is_opener()) {
      ++excess[heights[i - 1]];
    } else {
      const std::int64_t before = i >= 2 ? heights[i - 2] : 0;
      --excess[before];
    }
  }
  for (const auto& [d, count] : excess) {
    if (d >= 0 && count != 0) return false;
  }
  return true;
}

bool is_balanced(const Word& w, std::span<const std::size_t> indices) {
  for (std::uint32_t t = 1; t <= w.alphabet_size(); ++t) {
    if (!is_balanced(w, indices, t)) return false;
  }
  return true;
}

}  // namespace dyck
