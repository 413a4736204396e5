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

#include "dyck/metrics.hpp"

#include <bit>
#include <ostream>
#include <sstream>

namespace dyck {

std::string_view algo_name(Algo a) {
  switch (a) {
    case Algo::onepass: return "onepass";
    case Algo::twopass: return "twopass";
    case Algo::oracle: return "oracle";
  }
  return "unknown";
}

Algo parse_algo(std::string_view s) {
  if (s == "onepass") return Algo::onepass;
  if (s == "twopass") return Algo::twopass;
  if (s == "oracle") return Algo::oracle;
  throw InputError("unknown algorithm '" + std::string(s) + "'");
}

std::uint64_t bits_for(std::uint64_t v) {
  return v == 0 ? 1 : static_cast<std::uint64_t>(std::bit_width(v));
}

std::string Metrics::emit() const {
  std::ostringstream os;
  os << "record=dyck-metrics v=" << kRecordVersion << " algo=" << algo_name(algo)
     << " n=" << n << " padded_n=" << padded_n
     << " peak_stack_items=" << peak_stack_items << " item_bits=" << item_bits
     << " control_bits=" << control_bits << " space_bits=" << space_bits()
     << " letters_read=" << letters_read << " hash_mults=" << hash_mults
     << " checks_performed=" << checks_performed << " pass_count=" << pass_count
     << " buffered_reverse=" << (buffered_reverse ? "true" : "false")
     << " verdict=" << (verdict.accepted() ? "accept" : "reject")
     << " reason=" << reason_name(verdict.reason()) << " elapsed_us=" << elapsed_us;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Metrics& m) { return os << m.emit(); }

std::map<std::string, std::string> parse_record(std::string_view line) {
  std::map<std::string, std::string> out;
  std::istringstream is{std::string(line)};
  std::string field;
  while (is >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw InputError("bad record field '" + field + "'");
    out[field.substr(0, eq)] = field.substr(eq + 1);
  }
  return out;
}

}  // namespace dyck
