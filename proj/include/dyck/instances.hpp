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
#include <string>
#include <vector>

#include "dyck/core.hpp"

namespace dyck {

/// Parameters of an ASCENSION(m) word. Each X_i is a string over {a, b}
/// (bit 0 -> a, bit 1 -> b) of length n; k_i is in [1, n]; c_i is 'a' or 'b'.
struct InstanceSpec {
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  std::vector<std::string> x;
  std::vector<std::uint32_t> k;
  std::string c;
  bool label = false;

  /// Throws InputError on dimension or range violations.
  void validate() const;

  /// "ascension m=2 n=3 x=aba,bba k=1,3 c=ab label=1"
  std::string to_record() const;
  static InstanceSpec parse_record(std::string_view line);

  friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

struct Instance {
  Word word;
  bool label = false;
};

/// Reverse of z with every opener replaced by its closer. Throws InputError
/// if z contains a closer.
Word matching_word(const Word& z);

/// Opener word for a string over {a, b}.
Word opener_word(std::string_view ab);

/// X · matching(Y) · c̄ · c · Y · matching(X) with Y the last k-1 letters of X.
/// Member iff c == X[n-k+1].
Instance gen_mountain(std::string_view x, std::uint32_t k, char c);

/// Builds the word and sets the label (ignores spec.label on input).
Instance gen_ascension(const InstanceSpec& spec);

/// Random spec with every c_i correct, except c_fault (1-based) when given.
InstanceSpec random_ascension_spec(std::uint32_t m, std::uint32_t n, std::uint64_t seed,
                                   std::optional<std::uint32_t> fault = std::nullopt);

/// Uniform Dyck path of semilength `pairs` (cycle lemma), each pair typed
/// uniformly in [1, alphabet_size].
Word gen_random_member(std::uint64_t pairs, std::uint64_t seed,
                       std::uint32_t alphabet_size = 2);

/// Changes the type of the opener of one uniformly chosen matching pair to a
/// different type. Requires a nonempty member.
Word mutate_member(const Word& w, std::uint64_t seed);

/// Uniform random letters over the word's alphabet.
Word gen_random_word(std::size_t length, std::uint64_t seed, std::uint32_t alphabet_size = 2);

}  // namespace dyck
