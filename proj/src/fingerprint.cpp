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

#include "dyck/fingerprint.hpp"

#include <bit>

#include <algorithm>
#include <random>
#include <sstream>

namespace dyck {

namespace {

using u128 = unsigned __int128;

// 2 * p must stay below 2^64 so that combine() never wraps.
constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

// n^e, or 0 when the result would exceed `limit`.
std::uint64_t checked_pow(std::uint64_t n, std::uint32_t e, std::uint64_t limit) {
  u128 acc = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    acc *= n;
    if (acc > limit) return 0;
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace

std::string_view mode_name(ModulusMode m) {
  return m == ModulusMode::paper_exact ? "paper_exact" : "fixed_prime";
}

ModulusMode parse_mode(std::string_view s) {
  if (s == "paper_exact") return ModulusMode::paper_exact;
  if (s == "fixed_prime") return ModulusMode::fixed_prime;
  throw InputError("unknown modulus mode '" + std::string(s) + "'");
}

HashParams HashParams::with_alpha(std::uint64_t a) const {
  if (a >= p) throw ParamsError("alpha must be below p");
  HashParams out = *this;
  out.alpha = a;
  return out;
}

std::string HashParams::to_string() const {
  std::ostringstream os;
  os << "mode=" << mode_name(mode) << " p=" << p << " alpha=" << alpha
     << " n_bound=" << n_bound << " c=" << c;
  return os.str();
}

HashParams HashParams::parse(std::string_view record) {
  HashParams out;
  std::istringstream is{std::string(record)};
  std::string field;
  int seen = 0;
  while (is >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw InputError("bad params field '" + field + "'");
    const std::string key = field.substr(0, eq);
    const std::string val = field.substr(eq + 1);
    try {
      if (key == "mode") out.mode = parse_mode(val);
      else if (key == "p") out.p = std::stoull(val);
      else if (key == "alpha") out.alpha = std::stoull(val);
      else if (key == "n_bound") out.n_bound = std::stoull(val);
      else if (key == "c") out.c = static_cast<std::uint32_t>(std::stoul(val));
      else throw InputError("unknown params key '" + key + "'");
    } catch (const std::logic_error&) {
      throw InputError("bad params value '" + field + "'");
    }
    ++seen;
  }
  if (seen != 5) throw InputError("params record needs mode, p, alpha, n_bound, c");
  if (out.alpha >= out.p || !is_prime(out.p)) throw InputError("inconsistent params record");
  return out;
}

namespace {

std::uint64_t mul_mersenne(std::uint64_t a, std::uint64_t b) {
  const u128 prod = static_cast<u128>(a) * b;
  // 2^61 == 1 (mod p): fold the high bits onto the low ones.
  std::uint64_t r = static_cast<std::uint64_t>(prod & kMersenne61) +
                    static_cast<std::uint64_t>(prod >> 61);
  r = (r & kMersenne61) + (r >> 61);
  return r == kMersenne61 ? 0 : r;
}

template <class Mul>
std::uint64_t pow_with(std::uint64_t base, std::uint64_t exp, std::uint64_t one, Mul mul,
                       std::uint64_t* mults) {
  std::uint64_t result = one;
  std::uint64_t count = 0;
  bool started = false;
  while (exp > 0) {
    if (exp & 1) {
      // The first multiplication by 1 is a copy, not a product.
      if (started) {
        result = mul(result, base);
        ++count;
      } else {
        result = base;
        started = true;
      }
    }
    exp >>= 1;
    if (exp > 0) {
      base = mul(base, base);
      ++count;
    }
  }
  if (mults) *mults += count;
  return result;
}

}  // namespace

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  if (m == kMersenne61 && a < m && b < m) return mul_mersenne(a, b);
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m,
                      std::uint64_t* mults) {
  base %= m;
  if (m == kMersenne61) return pow_with(base, exp, 1, mul_mersenne, mults);
  return pow_with(
      base, exp, 1 % m,
      [m](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
      },
      mults);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  if (n <= 2) return 2;
  std::uint64_t q = n | 1;
  while (!is_prime(q)) q += 2;
  return q;
}

HashParams make_params(std::uint64_t n_bound, std::uint32_t c, std::uint64_t seed,
                       ModulusMode mode) {
  if (n_bound < 1) throw ParamsError("n_bound must be at least 1");
  if (c < 1) throw ParamsError("c must be at least 1");
  HashParams out;
  out.n_bound = n_bound;
  out.c = c;
  out.mode = mode;
  if (mode == ModulusMode::paper_exact) {
    const std::uint64_t lower = checked_pow(n_bound, c + 1, kMaxModulus / 2);
    if (lower == 0) {
      throw ParamsError("n_bound^(1+c) too large for paper_exact moduli; use fixed_prime");
    }
    out.p = next_prime(std::max<std::uint64_t>(lower, 2));
  } else {
    if (checked_pow(n_bound, c + 1, kMersenne61) == 0) {
      throw ParamsError("n_bound^(1+c) exceeds 2^61-1; fixed_prime error bound does not hold");
    }
    out.p = kMersenne61;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, out.p - 1);
  out.alpha = dist(rng);
  return out;
}

Residue letter_hash(const HashParams& params, Letter l, std::uint64_t d,
                    std::uint64_t* mults) {
  if (l.type != 1) return Residue{};
  const std::uint64_t v = pow_mod(params.alpha, d, params.p, mults);
  if (l.is_opener() || v == 0) return Residue(v);
  return Residue(params.p - v);
}

std::size_t PowerTable::entries(std::uint64_t max_exp) {
  return static_cast<std::size_t>(std::bit_width(max_exp));
}

PowerTable::PowerTable(const HashParams& params, std::uint64_t max_exp) : p_(params.p) {
  squares_.resize(entries(max_exp));
  std::uint64_t sq = params.alpha % p_;
  for (std::size_t j = 0; j < squares_.size(); ++j) {
    if (j > 0) {
      sq = mul_mod(sq, sq, p_);
      ++setup_mults_;
    }
    squares_[j] = sq;
  }
}

std::uint64_t PowerTable::pow(std::uint64_t d, std::uint64_t* mults) const {
  if (std::bit_width(d) > squares_.size()) throw std::logic_error("exponent beyond power table");
  std::uint64_t result = 1 % p_;
  std::uint64_t count = 0;
  bool started = false;
  for (; d != 0; d &= d - 1) {
    const auto j = static_cast<std::size_t>(std::countr_zero(d));
    if (started) {
      result = mul_mod(result, squares_[j], p_);
      ++count;
    } else {
      result = squares_[j];
      started = true;
    }
  }
  if (mults) *mults += count;
  return result;
}

Residue PowerTable::letter_hash(Letter l, std::uint64_t d, std::uint64_t* mults) const {
  if (l.type != 1) return Residue{};
  const std::uint64_t v = pow(d, mults);
  if (l.is_opener() || v == 0) return Residue(v);
  return Residue(p_ - v);
}

Residue subsequence_hash(const HashParams& params, const Word& w,
                         std::span<const std::size_t> indices) {
  const auto heights = prefix_heights(w);
  Residue acc;
  for (std::size_t i : indices) {
    if (i < 1 || i > w.size()) throw InputError("index out of range");
    const Letter l = w.at(i);
    const std::int64_t d = l.is_opener() ? heights[i - 1] : (i >= 2 ? heights[i - 2] : 0);
    if (d < 0) throw InputError("pair-height is negative");
    acc = combine(params, acc, letter_hash(params, l, static_cast<std::uint64_t>(d)));
  }
  return acc;
}

}  // namespace dyck
