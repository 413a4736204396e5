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
#include <string>
#include <vector>

#include "dyck/core.hpp"

namespace dyck {

/// Element of Z/pZ, always kept reduced into [0, p-1].
class Residue {
 public:
  constexpr Residue() = default;
  constexpr explicit Residue(std::uint64_t reduced) : value_(reduced) {}

  constexpr std::uint64_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr bool operator==(Residue, Residue) = default;

 private:
  std::uint64_t value_ = 0;
};

enum class ModulusMode : std::uint8_t {
  /// Smallest prime >= n_bound^(1+c); lies below 2 n_bound^(1+c).
  paper_exact,
  /// The Mersenne prime 2^61 - 1.
  fixed_prime,
};

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

std::string_view mode_name(ModulusMode m);
/// Throws InputError for anything but "paper_exact" / "fixed_prime".
ModulusMode parse_mode(std::string_view s);

/// Raised when the requested modulus does not fit, or the fixed prime is too
/// small for the declared input length.
class ParamsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HashParams {
  std::uint64_t p = kMersenne61;
  std::uint64_t alpha = 0;
  std::uint64_t n_bound = 1;
  std::uint32_t c = 1;
  ModulusMode mode = ModulusMode::fixed_prime;

  /// Same modulus, different evaluation point. Throws if alpha >= p.
  HashParams with_alpha(std::uint64_t a) const;

  /// "mode=fixed_prime p=... alpha=... n_bound=... c=..."
  std::string to_string() const;
  static HashParams parse(std::string_view record);

  friend bool operator==(const HashParams&, const HashParams&) = default;
};

// Modular arithmetic with 128-bit intermediates.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

/// base^exp mod m by repeated squaring. Every modular multiplication
/// performed is added to *mults when it is non-null.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m,
                      std::uint64_t* mults = nullptr);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Smallest prime >= n.
std::uint64_t next_prime(std::uint64_t n);

/// Builds params for inputs of length <= n_bound. Alpha is uniform in
/// [0, p-1] from a generator seeded with `seed`.
HashParams make_params(std::uint64_t n_bound, std::uint32_t c, std::uint64_t seed,
                       ModulusMode mode = ModulusMode::fixed_prime);

/// Hash of a single letter at pair-height d: α^d for a, -α^d for ā, zero for
/// every other type. For an opener d is the height after the step, for a
/// closer the height before it.
Residue letter_hash(const HashParams& params, Letter l, std::uint64_t d,
                    std::uint64_t* mults = nullptr);

/// The squares α^(2^j) for 2^j <= max_exp. With them α^d, d <= max_exp,
/// costs popcount(d) - 1 multiplications instead of a full square-and-multiply.
class PowerTable {
 public:
  PowerTable(const HashParams& params, std::uint64_t max_exp);

  /// Table length for a given exponent bound.
  static std::size_t entries(std::uint64_t max_exp);

  /// α^d. Throws std::logic_error when d exceeds the table.
  std::uint64_t pow(std::uint64_t d, std::uint64_t* mults = nullptr) const;
  /// Same value as the free letter_hash.
  Residue letter_hash(Letter l, std::uint64_t d, std::uint64_t* mults = nullptr) const;

  std::size_t size() const { return squares_.size(); }
  /// Squarings spent building the table.
  std::uint64_t setup_mults() const { return setup_mults_; }

 private:
  std::uint64_t p_;
  std::vector<std::uint64_t> squares_;
  std::uint64_t setup_mults_ = 0;
};

inline Residue combine(const HashParams& params, Residue h1, Residue h2) {
  const std::uint64_t s = h1.value() + h2.value();  // < 2^64 since p < 2^63
  return Residue(s >= params.p ? s - params.p : s);
}

/// Reference fingerprint of the letters at 1-based `indices`, each hashed at
/// its pair-height within the whole word.
Residue subsequence_hash(const HashParams& params, const Word& w,
                         std::span<const std::size_t> indices);

}  // namespace dyck
