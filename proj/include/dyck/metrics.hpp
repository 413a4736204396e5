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
#include <iosfwd>
#include <map>
#include <string>

#include "dyck/core.hpp"

namespace dyck {

enum class Algo : std::uint8_t { onepass, twopass, oracle };

std::string_view algo_name(Algo a);
Algo parse_algo(std::string_view s);

/// Per-run space and work counters. Owned by one checker instance.
struct Metrics {
  static constexpr int kRecordVersion = 1;

  Algo algo = Algo::oracle;
  std::uint64_t n = 0;
  std::uint64_t padded_n = 0;
  std::uint64_t stack_items = 0;  // current depth
  std::uint64_t peak_stack_items = 0;
  std::uint64_t item_bits = 0;
  /// Control state outside the stack: counters, the block buffer (one-pass).
  std::uint64_t control_bits = 0;
  std::uint64_t letters_read = 0;
  std::uint64_t hash_mults = 0;
  std::uint64_t checks_performed = 0;
  std::uint64_t pass_count = 0;
  bool buffered_reverse = false;
  Verdict verdict;
  std::uint64_t elapsed_us = 0;

  void record_push() {
    ++stack_items;
    if (stack_items > peak_stack_items) peak_stack_items = stack_items;
  }
  void record_pop() {
    if (stack_items == 0) throw std::logic_error("pop recorded on empty stack");
    --stack_items;
  }
  void record_check() { ++checks_performed; }

  /// peak_stack_items * item_bits + control_bits.
  std::uint64_t space_bits() const { return peak_stack_items * item_bits + control_bits; }

  /// One line of space-separated key=value fields, starting with
  /// "record=dyck-metrics v=1". Timing is the only field that varies
  /// between identical runs.
  std::string emit() const;
};

std::ostream& operator<<(std::ostream& os, const Metrics& m);

/// Splits an emitted record back into its fields.
std::map<std::string, std::string> parse_record(std::string_view line);

/// Number of bits needed to store values in [0, v].
std::uint64_t bits_for(std::uint64_t v);

}  // namespace dyck
