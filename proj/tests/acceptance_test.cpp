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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dyck/core.hpp"
#include "dyck/fingerprint.hpp"
#include "dyck/instances.hpp"
#include "dyck/onepass.hpp"
#include "dyck/reduction.hpp"
#include "dyck/twopass.hpp"
#include "support/oracles.hpp"
#include "support/shadow.hpp"

namespace {

using namespace dyck;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Peak stack sizes seen in criteria 1 and 2, audited by criterion 4.
struct SpaceLog {
  std::uint64_t runs = 0;
  std::uint64_t violations = 0;
  std::string first;

  void onepass(const Metrics& m) {
    ++runs;
    if (m.peak_stack_items > ceil_sqrt(m.n) + 1) note("onepass", m);
  }
  void twopass(const Metrics& m) {
    ++runs;
    const std::uint64_t k = m.padded_n ? std::countr_zero(m.padded_n) : 0;
    if (m.peak_stack_items > 2 * k) note("twopass", m);
  }
  void note(const char* algo, const Metrics& m) {
    if (violations++ == 0) {
      first = std::string(algo) + " n=" + std::to_string(m.n) +
              " peak=" + std::to_string(m.peak_stack_items);
    }
  }
};

// Shadow audits over the criteria 1 and 2 corpora, reported by criterion 9.
struct ShadowLog {
  std::uint64_t words = 0;
  std::uint64_t events = 0;
  std::uint64_t violations = 0;
  std::string first;

  template <class Shadow>
  void take(const Shadow& s) {
    ++words;
    events += s.events();
    if (!s.violations().empty()) {
      if (violations == 0) first = s.violations().front();
      violations += s.violations().size();
    }
  }
};

SpaceLog g_space;
ShadowLog g_shadow;
// Member corpus of criterion 1, replayed under the shadows by criterion 9.
std::vector<Word> g_members;

HashParams params_for(std::uint64_t n, std::uint64_t seed) {
  return make_params(std::max<std::uint64_t>(n, 1), 2, seed, ModulusMode::fixed_prime);
}

// ---------------------------------------------------------------- criterion 1

Outcome completeness() {
  std::vector<Word> corpus;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const std::uint64_t n = std::uint64_t{1} << (6 + i % 9);
    corpus.push_back(gen_random_member(n / 2, 1000 + i));
  }
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::uint32_t> pick_m(1, 64), pick_n(1, 256);
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const auto spec = random_ascension_spec(pick_m(rng), pick_n(rng), 5000 + i);
    const auto inst = gen_ascension(spec);
    if (!inst.label) return {false, "generator produced a labelled non-member"};
    corpus.push_back(inst.word);
  }
  std::uint64_t failures = 0, runs = 0;
  std::string first;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const Word& w = corpus[i];
      const auto params = params_for(w.size(), 77 * seed + 1);
      const auto r1 = check_one_pass(w, params);
      const auto r2 = check_two_pass(w, params);
      g_space.onepass(r1.metrics);
      g_space.twopass(r2.metrics);
      runs += 2;
      for (const auto* r : {&r1, &r2}) {
        if (!r->verdict.accepted() && failures++ == 0) {
          first = "word " + std::to_string(i) + " seed " + std::to_string(seed);
        }
      }
    }
  }
  g_members = std::move(corpus);
  std::ostringstream os;
  os << runs << " runs over " << g_members.size() << " members x 10 seeds, " << failures
     << " rejections" << (first.empty() ? "" : " (first: " + first + ")");
  return {failures == 0, os.str()};
}

// ---------------------------------------------------------------- criterion 2

Outcome soundness() {
  std::uint64_t false_accepts = 0, wrong_reason = 0;
  for (std::uint64_t t = 0; t < 10000; ++t) {
    const Word member = gen_random_member(512, 90000 + t);
    const Word bad = mutate_member(member, t);
    const auto params = params_for(bad.size(), 1'000'003 * t + 7);  // fresh alpha
    testing::OnePassShadow s1(bad, params);
    testing::TwoPassShadow s2(bad, params);
    const auto r1 = check_one_pass(bad, params, &s1);
    const auto r2 = check_two_pass(bad, params, &s2);
    g_shadow.take(s1);
    g_shadow.take(s2);
    g_space.onepass(r1.metrics);
    g_space.twopass(r2.metrics);
    false_accepts += r1.verdict.accepted() + r2.verdict.accepted();
    wrong_reason += (!r1.verdict.accepted() && r1.verdict.reason() != RejectReason::mismatched) +
                    (!r2.verdict.accepted() && r2.verdict.reason() != RejectReason::mismatched);
  }
  std::ostringstream os;
  os << "10000 mutants at n=1024, both checkers: false_accepts=" << false_accepts
     << " non-mismatch reasons=" << wrong_reason;
  return {false_accepts == 0 && wrong_reason == 0, os.str()};
}

// ---------------------------------------------------------------- criterion 3

Outcome calibration() {
  const auto base = make_params(16, 1, 0, ModulusMode::paper_exact);
  if (base.p != 257) return {false, "unexpected modulus " + std::to_string(base.p)};
  const double bound = 16.0 / static_cast<double>(base.p);
  double worst = 0;
  std::uint64_t over = 0;
  std::vector<std::size_t> all(16);
  for (std::size_t i = 0; i < 16; ++i) all[i] = i + 1;
  for (std::uint64_t t = 0; t < 100; ++t) {
    const Word bad = mutate_member(gen_random_member(8, 300 + t), t);
    std::uint64_t roots = 0, acc1 = 0, acc2 = 0;
    for (std::uint64_t alpha = 0; alpha < base.p; ++alpha) {
      const auto params = base.with_alpha(alpha);
      roots += subsequence_hash(params, bad, all).is_zero();
      acc1 += check_one_pass(bad, params).verdict.accepted();
      acc2 += check_two_pass(bad, params).verdict.accepted();
    }
    for (std::uint64_t count : {roots, acc1, acc2}) {
      const double frac = static_cast<double>(count) / static_cast<double>(base.p);
      worst = std::max(worst, frac);
      over += frac > bound;
    }
  }
  std::ostringstream os;
  os << "p=257, 100 mutants, every alpha: max collision fraction " << worst << " (bound "
     << bound << "), instances over bound=" << over;
  return {over == 0, os.str()};
}

// ---------------------------------------------------------------- criterion 4

Outcome space_bounds() {
  std::ostringstream os;
  os << g_space.runs << " runs from criteria 1-2 audited, violations=" << g_space.violations;
  if (!g_space.first.empty()) os << " (first: " << g_space.first << ")";
  return {g_space.runs > 0 && g_space.violations == 0, os.str()};
}

// ---------------------------------------------------------------- criterion 5

Outcome oracle_equivalence() {
  std::uint64_t words = 0, disagreements = 0;
  std::string first;
  for (std::size_t len = 0; len <= 8; ++len) {
    const auto params = params_for(len, 31 + len);
    testing::for_each_word(len, 2, [&](const Word& w) {
      ++words;
      const Verdict o = oracle_check(w);
      const bool a = check_one_pass(w, params).verdict.accepted();
      const bool b = check_two_pass(w, params).verdict.accepted();
      if ((a != o.accepted() || b != o.accepted()) && disagreements++ == 0) first = to_brackets(w);
    });
  }
  std::ostringstream os;
  os << words << " words of length <= 8, disagreements=" << disagreements;
  if (!first.empty()) os << " (first: " << first << ")";
  return {disagreements == 0, os.str()};
}

// ---------------------------------------------------------------- criterion 6

Outcome reduction_correctness() {
  std::uint64_t checked = 0, mismatches = 0;
  for (std::uint32_t s : {3u, 4u, 8u}) {
    const auto rp = ReductionParams::for_alphabet(s);
    for (std::uint64_t i = 0; i < 500; ++i) {
      Word x;
      switch (i % 3) {
        case 0: x = gen_random_member(1 + i % 40, i, s); break;
        case 1: x = mutate_member(gen_random_member(1 + i % 40, i, s), i); break;
        default: x = gen_random_word(i % 60, i, s); break;
      }
      SpanSource inner(x.letters());
      ReducedSource stream(rp, inner);
      std::vector<Letter> y;
      while (auto l = stream.next()) y.push_back(*l);
      ++checked;
      mismatches += y.size() != rp.code_length * x.size() ||
                    oracle_check(x).accepted() != oracle_check(Word(y)).accepted();
    }
  }
  for (std::size_t len = 0; len <= 6; ++len) {
    testing::for_each_word(len, 3, [&](const Word& x) {
      ++checked;
      mismatches += oracle_check(x).accepted() != oracle_check(reduce_word(x)).accepted();
    });
  }
  std::ostringstream os;
  os << checked << " words (s in {3,4,8} random, s=3 exhaustive to length 6), mismatches="
     << mismatches;
  return {mismatches == 0, os.str()};
}

// ---------------------------------------------------------------- criterion 7

Outcome label_fidelity() {
  std::mt19937_64 rng(7);
  std::uint64_t checked = 0, wrong = 0, members = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const std::uint32_t m = 1 + rng() % 8, n = 1 + rng() % 16;
    InstanceSpec spec;
    if (i % 2 == 0) {
      std::optional<std::uint32_t> fault;
      if (rng() % 2) fault = 1 + rng() % m;
      spec = random_ascension_spec(m, n, rng(), fault);
    } else {
      spec.m = m;
      spec.n = n;
      for (std::uint32_t j = 0; j < m; ++j) {
        std::string x(n, 'a');
        for (char& ch : x) ch = rng() % 2 ? 'b' : 'a';
        spec.x.push_back(x);
        spec.k.push_back(1 + rng() % n);
        spec.c.push_back(rng() % 2 ? 'b' : 'a');
      }
    }
    const auto inst = gen_ascension(spec);
    ++checked;
    members += inst.label;
    wrong += inst.label != oracle_check(inst.word).accepted();
  }
  // Exhaustive: every (X, k, c) for n <= 3 and m <= 2.
  for (std::uint32_t n = 1; n <= 3; ++n) {
    std::vector<std::tuple<std::string, std::uint32_t, char>> coords;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      std::string x;
      for (std::uint32_t t = 0; t < n; ++t) x.push_back(bits >> t & 1 ? 'b' : 'a');
      for (std::uint32_t k = 1; k <= n; ++k) {
        for (char c : {'a', 'b'}) coords.emplace_back(x, k, c);
      }
    }
    auto run = [&](const std::vector<std::size_t>& pick) {
      InstanceSpec spec;
      spec.m = static_cast<std::uint32_t>(pick.size());
      spec.n = n;
      bool expect = true;
      for (auto p : pick) {
        const auto& [x, k, c] = coords[p];
        spec.x.push_back(x);
        spec.k.push_back(k);
        spec.c.push_back(c);
        expect = expect && c == x[n - k];
      }
      const auto inst = gen_ascension(spec);
      ++checked;
      wrong += inst.label != expect || inst.label != oracle_check(inst.word).accepted();
    };
    for (std::size_t a = 0; a < coords.size(); ++a) {
      run({a});
      for (std::size_t b = 0; b < coords.size(); ++b) run({a, b});
    }
  }
  std::ostringstream os;
  os << checked << " instances (1000 random, " << members
     << " of them members, plus exhaustive n<=3, m<=2), label/oracle disagreements=" << wrong;
  return {wrong == 0, os.str()};
}

// ---------------------------------------------------------------- criterion 8

Outcome directional_coverage() {
  const auto params = params_for(16, 99);
  std::uint64_t ill = 0, uncovered = 0, missed = 0, fwd_blind = 0;
  std::string example;
  auto examine = [&](const Word& w, const std::vector<MatchingPair>& pairs) {
    std::vector<std::size_t> bad;
    for (const auto& p : pairs) {
      if (w.at(p.i).type != w.at(p.j).type) bad.push_back(p.i);
    }
    if (bad.empty()) return;
    ++ill;
    testing::TwoPassShadow shadow(w, params);
    shadow.set_coverage_only(true);
    const auto r = check_two_pass(w, params, &shadow);
    if (r.verdict.accepted()) ++missed;
    bool fwd = false, rev = false;
    for (auto i : bad) {
      fwd = fwd || shadow.covered(i, Direction::forward);
      rev = rev || shadow.covered(i, Direction::reverse);
    }
    if (!fwd && !rev) ++uncovered;
    if (!fwd && rev && r.verdict.reason() == RejectReason::mismatched && r.metrics.pass_count == 2 &&
        fwd_blind++ == 0) {
      example = to_brackets(w);
    }
  };
  for (std::size_t k = 1; k <= 8; ++k) {
    for (const auto& path : testing::dyck_paths(k)) {
      std::vector<Letter> letters;
      for (int s : path) letters.push_back(s > 0 ? kA : kAbar);
      const auto pairs = matching_pairs(Word(letters));
      if (k <= 6) {
        // Every typing of every opener and closer.
        for (std::uint32_t mask = 0; mask < (1u << (2 * k)); ++mask) {
          for (std::size_t t = 0; t < k; ++t) {
            letters[pairs[t].i - 1].type = (mask >> (2 * t) & 1) + 1;
            letters[pairs[t].j - 1].type = (mask >> (2 * t + 1) & 1) + 1;
          }
          examine(Word(letters), pairs);
        }
        continue;
      }
      // Longer words: the pairs typed all a or all b, except one bad pair of
      // each orientation (the two may coincide, giving a single fault).
      for (std::uint32_t rest = 1; rest <= 2; ++rest) {
        for (std::size_t u = 0; u < k; ++u) {
          for (std::size_t v = 0; v < k; ++v) {
            for (std::size_t t = 0; t < k; ++t) {
              letters[pairs[t].i - 1].type = rest;
              letters[pairs[t].j - 1].type = rest;
            }
            letters[pairs[u].i - 1].type = 1;
            letters[pairs[u].j - 1].type = 2;
            if (v != u) {
              letters[pairs[v].i - 1].type = 2;
              letters[pairs[v].j - 1].type = 1;
            }
            examine(Word(letters), pairs);
          }
        }
      }
    }
  }
  std::ostringstream os;
  os << ill << " ill-formed words of length <= 16: accepted=" << missed
     << ", no bad pair visible to either pass=" << uncovered
     << ", invisible to the forward pass but rejected by the reverse pass=" << fwd_blind;
  if (!example.empty()) os << " (e.g. " << example << ")";
  return {missed == 0 && uncovered == 0 && fwd_blind > 0, os.str()};
}

// ---------------------------------------------------------------- criterion 9

Outcome invariants() {
  // Shadows over the criterion 1 members (criterion 2 ran them inline).
  for (const Word& w : g_members) {
    const auto params = params_for(w.size(), 1);
    testing::OnePassShadow s1(w, params);
    testing::TwoPassShadow s2(w, params);
    check_one_pass(w, params, &s1);
    check_two_pass(w, params, &s2);
    g_shadow.take(s1);
    g_shadow.take(s2);
  }
  std::uint64_t linear_bad = 0, fact3_bad = 0, sets = 0;
  const std::vector<HashParams> ps{params_for(8, 1), params_for(8, 2),
                                   make_params(8, 1, 3, ModulusMode::paper_exact)};
  for (std::size_t len = 1; len <= 8; ++len) {
    testing::for_each_word(len, 2, [&](const Word& w) {
      for (auto h : prefix_heights(w)) {
        if (h < 0) return;
      }
      for (const auto& params : ps) {
        std::vector<Residue> single(len + 1);
        for (std::size_t i = 1; i <= len; ++i) {
          const std::vector<std::size_t> one{i};
          single[i] = subsequence_hash(params, w, one);
        }
        for (std::uint32_t mask = 1; mask < (1u << len); ++mask) {
          std::vector<std::size_t> idx;
          Residue sum;
          for (std::size_t i = 0; i < len; ++i) {
            if (mask >> i & 1) {
              idx.push_back(i + 1);
              sum = combine(params, sum, single[i + 1]);
            }
          }
          const Residue h = subsequence_hash(params, w, idx);
          ++sets;
          linear_bad += h != sum;
          fact3_bad += is_balanced(w, idx) && !h.is_zero();
        }
      }
    });
  }
  std::ostringstream os;
  os << "shadow: " << g_shadow.words << " runs, " << g_shadow.events << " events, violations="
     << g_shadow.violations;
  if (!g_shadow.first.empty()) os << " (first: " << g_shadow.first << ")";
  os << "; hash: " << sets << " index sets, linearity failures=" << linear_bad
     << ", balanced-but-nonzero=" << fact3_bad;
  return {g_shadow.words > 0 && g_shadow.violations == 0 && linear_bad == 0 && fact3_bad == 0,
          os.str()};
}

// ---------------------------------------------------------------- criterion 10

Outcome per_letter_work() {
  std::vector<double> xs, ys1, ys2;
  for (std::uint32_t e = 10; e <= 20; ++e) {
    const std::uint64_t n = std::uint64_t{1} << e;
    const Word w = gen_random_member(n / 2, e);
    const auto params = params_for(n, e);
    const auto r1 = check_one_pass(w, params).metrics;
    const auto r2 = check_two_pass(w, params).metrics;
    xs.push_back(e);
    ys1.push_back(static_cast<double>(r1.hash_mults) / static_cast<double>(r1.letters_read));
    ys2.push_back(static_cast<double>(r2.hash_mults) / static_cast<double>(r2.letters_read));
  }
  std::ostringstream os;
  bool ok = true;
  for (auto [name, ys] : {std::pair{"onepass", &ys1}, std::pair{"twopass", &ys2}}) {
    const double m = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sx += xs[i];
      sy += (*ys)[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * (*ys)[i];
    }
    const double a = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    const double b = (sy - a * sx) / m;
    double worst = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double fit = a * xs[i] + b;
      worst = std::max(worst, std::abs((*ys)[i] - fit) / fit);
    }
    ok = ok && worst <= 0.25;
    os << name << ": mults/letter " << (*ys)[0] << " at 2^10 to " << ys->back()
       << " at 2^20, fit a=" << a << " b=" << b << " max residual " << worst * 100 << "%; ";
  }
  return {ok, os.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* name;
    std::function<Outcome()> run;
  };
  // Criterion 4 and 9 read logs filled while running 1 and 2.
  const std::vector<Criterion> all{
      {"C1", "completeness", completeness},
      {"C2", "soundness", soundness},
      {"C3", "exact-modulus error calibration", calibration},
      {"C4", "space bounds", space_bounds},
      {"C5", "oracle equivalence (exhaustive)", oracle_equivalence},
      {"C6", "reduction correctness", reduction_correctness},
      {"C7", "instance-label fidelity", label_fidelity},
      {"C8", "directional coverage", directional_coverage},
      {"C9", "invariant suites", invariants},
      {"C10", "per-letter work", per_letter_work},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::printf("[%s] %s %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
