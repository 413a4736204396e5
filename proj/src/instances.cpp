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

#include "dyck/instances.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace dyck {

namespace {

std::uint32_t ab_type(char ch) {
  if (ch == 'a') return 1;
  if (ch == 'b') return 2;
  throw InputError(std::string("expected 'a' or 'b', got '") + ch + "'");
}

void append(std::vector<Letter>& out, const Word& w) {
  out.insert(out.end(), w.begin(), w.end());
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

void InstanceSpec::validate() const {
  if (m < 1 || n < 1) throw InputError("m and n must be at least 1");
  if (x.size() != m || k.size() != m || c.size() != m) {
    throw InputError("X, k and c must each have m entries");
  }
  for (std::uint32_t i = 0; i < m; ++i) {
    if (x[i].size() != n) throw InputError("every X_i must have length n");
    for (char ch : x[i]) ab_type(ch);
    if (k[i] < 1 || k[i] > n) throw InputError("k_i must lie in [1, n]");
    ab_type(c[i]);
  }
}

std::string InstanceSpec::to_record() const {
  std::ostringstream os;
  os << "ascension m=" << m << " n=" << n << " x=";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
  os << " k=";
  for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
  os << " c=" << c << " label=" << (label ? 1 : 0);
  return os.str();
}

InstanceSpec InstanceSpec::parse_record(std::string_view line) {
  std::istringstream is{std::string(line)};
  std::string tag;
  is >> tag;
  if (tag != "ascension") throw InputError("instance record must start with 'ascension'");
  InstanceSpec out;
  std::string field;
  try {
    while (is >> field) {
      const auto eq = field.find('=');
      if (eq == std::string::npos) throw InputError("bad instance field '" + field + "'");
      const std::string key = field.substr(0, eq);
      const std::string val = field.substr(eq + 1);
      if (key == "m") out.m = static_cast<std::uint32_t>(std::stoul(val));
      else if (key == "n") out.n = static_cast<std::uint32_t>(std::stoul(val));
      else if (key == "x") out.x = split(val, ',');
      else if (key == "k") {
        for (const auto& part : split(val, ',')) {
          out.k.push_back(static_cast<std::uint32_t>(std::stoul(part)));
        }
      } else if (key == "c") out.c = val;
      else if (key == "label") out.label = val == "1";
      else throw InputError("unknown instance key '" + key + "'");
    }
  } catch (const std::logic_error&) {
    throw InputError("bad instance record");
  }
  out.validate();
  return out;
}

Word matching_word(const Word& z) {
  std::vector<Letter> out;
  out.reserve(z.size());
  for (auto it = z.letters().rbegin(); it != z.letters().rend(); ++it) {
    if (!it->is_opener()) throw InputError("matching_word expects openers only");
    out.push_back(dual(*it));
  }
  return Word(std::move(out), z.alphabet_size());
}

Word opener_word(std::string_view ab) {
  std::vector<Letter> out;
  out.reserve(ab.size());
  for (char ch : ab) out.push_back(Letter::open(ab_type(ch)));
  return Word(std::move(out), 2);
}

Instance gen_mountain(std::string_view x, std::uint32_t k, char c) {
  InstanceSpec spec;
  spec.m = 1;
  spec.n = static_cast<std::uint32_t>(x.size());
  spec.x = {std::string(x)};
  spec.k = {k};
  spec.c = std::string(1, c);
  return gen_ascension(spec);
}

Instance gen_ascension(const InstanceSpec& spec) {
  spec.validate();
  const std::uint32_t n = spec.n;
  std::vector<Letter> out;
  out.reserve(2 * static_cast<std::size_t>(spec.m) * (2 * n));
  bool label = true;
  std::vector<Word> xs;
  xs.reserve(spec.m);
  for (std::uint32_t i = 0; i < spec.m; ++i) {
    xs.push_back(opener_word(spec.x[i]));
    const Word& x = xs.back();
    const std::uint32_t k = spec.k[i];
    // Y_i = X_i[n-k+2, n], the last k-1 letters.
    const Word y = opener_word(std::string_view(spec.x[i]).substr(n - k + 1));
    const Letter c = Letter::open(ab_type(spec.c[i]));
    append(out, x);
    append(out, matching_word(y));
    out.push_back(dual(c));
    out.push_back(c);
    append(out, y);
    label = label && spec.c[i] == spec.x[i][n - k];
  }
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) append(out, matching_word(*it));
  return {Word(std::move(out), 2), label};
}

InstanceSpec random_ascension_spec(std::uint32_t m, std::uint32_t n, std::uint64_t seed,
                                   std::optional<std::uint32_t> fault) {
  if (m < 1 || n < 1) throw InputError("m and n must be at least 1");
  if (fault && (*fault < 1 || *fault > m)) throw InputError("fault index must lie in [1, m]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution bit(0.5);
  std::uniform_int_distribution<std::uint32_t> pick_k(1, n);
  InstanceSpec spec;
  spec.m = m;
  spec.n = n;
  for (std::uint32_t i = 1; i <= m; ++i) {
    std::string x(n, 'a');
    for (char& ch : x) ch = bit(rng) ? 'b' : 'a';
    const std::uint32_t k = pick_k(rng);
    char c = x[n - k];
    if (fault && *fault == i) c = c == 'a' ? 'b' : 'a';
    spec.x.push_back(std::move(x));
    spec.k.push_back(k);
    spec.c.push_back(c);
  }
  spec.label = !fault.has_value();
  return spec;
}

Word gen_random_member(std::uint64_t pairs, std::uint64_t seed, std::uint32_t alphabet_size) {
  if (alphabet_size < 1) throw InputError("alphabet size must be at least 1");
  std::mt19937_64 rng(seed);
  // pairs up-steps and pairs+1 down-steps in uniform order; exactly one
  // rotation keeps every proper prefix nonnegative (cycle lemma). It starts
  // right after the first position where the prefix sum is minimal.
  std::vector<std::int8_t> steps(2 * pairs + 1, -1);
  std::fill_n(steps.begin(), pairs, std::int8_t{1});
  std::shuffle(steps.begin(), steps.end(), rng);
  std::int64_t sum = 0;
  std::int64_t best = 0;
  std::size_t cut = 0;
  for (std::size_t t = 0; t < steps.size(); ++t) {
    sum += steps[t];
    if (sum < best) {
      best = sum;
      cut = t + 1;
    }
  }
  std::rotate(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(cut % steps.size()),
              steps.end());
  steps.pop_back();  // the final down-step

  std::uniform_int_distribution<std::uint32_t> pick_type(1, alphabet_size);
  std::vector<Letter> out;
  out.reserve(steps.size());
  std::vector<std::uint32_t> open;
  for (std::int8_t s : steps) {
    if (s > 0) {
      const std::uint32_t t = pick_type(rng);
      open.push_back(t);
      out.push_back(Letter::open(t));
    } else {
      out.push_back(Letter::close(open.back()));
      open.pop_back();
    }
  }
  return Word(std::move(out), alphabet_size);
}

Word mutate_member(const Word& w, std::uint64_t seed) {
  if (w.empty()) throw InputError("cannot mutate the empty word");
  if (w.alphabet_size() < 2) throw InputError("mutation needs at least two types");
  const auto pairs = matching_pairs(w);
  if (pairs.empty()) throw InputError("word has no matching pair");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
  const MatchingPair target = pairs[pick(rng)];
  std::vector<Letter> letters(w.begin(), w.end());
  Letter& opener = letters[target.i - 1];
  if (w.alphabet_size() == 2) {
    opener.type = opener.type == 1 ? 2 : 1;
  } else {
    std::uniform_int_distribution<std::uint32_t> shift(1, w.alphabet_size() - 1);
    opener.type = (opener.type - 1 + shift(rng)) % w.alphabet_size() + 1;
  }
  return Word(std::move(letters), w.alphabet_size());
}

Word gen_random_word(std::size_t length, std::uint64_t seed, std::uint32_t alphabet_size) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, 2 * alphabet_size - 1);
  std::vector<Letter> out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    const std::uint32_t v = pick(rng);
    out.push_back(Letter{v % 2 == 0 ? Kind::opener : Kind::closer, v / 2 + 1});
  }
  return Word(std::move(out), alphabet_size);
}

}  // namespace dyck
