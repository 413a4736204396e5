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

#include <gtest/gtest.h>

#include <cmath>

#include "dyck/instances.hpp"
#include "dyck/metrics.hpp"
#include "dyck/onepass.hpp"
#include "dyck/twopass.hpp"

namespace dyck {
namespace {

TEST(Metrics, PushPushPop) {
  Metrics m;
  m.record_push();
  m.record_push();
  m.record_pop();
  EXPECT_EQ(m.peak_stack_items, 2u);
  EXPECT_EQ(m.stack_items, 1u);
  EXPECT_THROW((m.record_pop(), m.record_pop()), std::logic_error);
}

TEST(Metrics, FreshCountersAreZero) {
  const Metrics m;
  EXPECT_EQ(m.peak_stack_items, 0u);
  EXPECT_EQ(m.letters_read, 0u);
  EXPECT_EQ(m.hash_mults, 0u);
  EXPECT_EQ(m.checks_performed, 0u);
  EXPECT_EQ(m.space_bits(), 0u);
}

TEST(Metrics, OnePassPeakOnRandomMember) {
  const Word w = gen_random_member(512, 7);
  const auto r = check_one_pass(w, make_params(w.size(), 2, 7, ModulusMode::fixed_prime));
  EXPECT_TRUE(r.verdict.accepted());
  EXPECT_LE(r.metrics.peak_stack_items, 33u);
  EXPECT_EQ(r.metrics.letters_read, 1024u);
}

TEST(Metrics, RecordFields) {
  const Word w = gen_random_member(8, 1);
  const auto params = make_params(16, 2, 1, ModulusMode::fixed_prime);
  const auto acc = parse_record(check_two_pass(w, params).metrics.emit());
  EXPECT_EQ(acc.at("record"), "dyck-metrics");
  EXPECT_EQ(acc.at("v"), "1");
  EXPECT_EQ(acc.at("verdict"), "accept");
  EXPECT_EQ(acc.at("reason"), "none");
  EXPECT_EQ(acc.at("pass_count"), "2");
  EXPECT_EQ(acc.at("algo"), "twopass");
  EXPECT_EQ(acc.at("n"), "16");
  EXPECT_EQ(acc.at("padded_n"), "16");
  EXPECT_EQ(acc.at("buffered_reverse"), "false");
  for (const char* key : {"peak_stack_items", "item_bits", "control_bits", "space_bits",
                          "letters_read", "hash_mults", "checks_performed", "elapsed_us"}) {
    EXPECT_TRUE(acc.count(key)) << key;
  }
  const auto rej = parse_record(check_one_pass(mutate_member(w, 3), params).metrics.emit());
  EXPECT_EQ(rej.at("verdict"), "reject");
  EXPECT_EQ(rej.at("reason"), "mismatched");
}

TEST(Metrics, SpaceBitsAccounting) {
  const Word w = gen_random_member(200, 2);
  const auto r = check_one_pass(w, make_params(w.size(), 2, 2, ModulusMode::fixed_prime));
  EXPECT_EQ(r.metrics.space_bits(),
            r.metrics.peak_stack_items * r.metrics.item_bits + r.metrics.control_bits);
  EXPECT_EQ(r.metrics.item_bits, bits_for(kMersenne61 - 1) + bits_for(400));
}

TEST(Metrics, BitsFor) {
  EXPECT_EQ(bits_for(0), 1u);
  EXPECT_EQ(bits_for(1), 1u);
  EXPECT_EQ(bits_for(255), 8u);
  EXPECT_EQ(bits_for(256), 9u);
}

TEST(Metrics, AlgoNames) {
  for (Algo a : {Algo::onepass, Algo::twopass, Algo::oracle}) EXPECT_EQ(parse_algo(algo_name(a)), a);
  EXPECT_THROW(parse_algo("threepass"), InputError);
}

// On a^(n/2) abar^(n/2) every block is a pure up-run, so the onepass peak is
// about sqrt(n)/2 and grows by sqrt 2 per doubling; twopass grows by at most 2.
TEST(Metrics, ScalingLaw) {
  auto staircase = [](std::uint64_t n) {
    std::vector<Letter> letters(n / 2, kA);
    letters.insert(letters.end(), n / 2, kAbar);
    return Word(letters);
  };
  auto peak = [&](Algo algo, std::uint64_t n) {
    const Word w = staircase(n);
    const auto params = make_params(n, 2, 5, ModulusMode::fixed_prime);
    const auto r = algo == Algo::onepass ? check_one_pass(w, params) : check_two_pass(w, params);
    EXPECT_TRUE(r.verdict.accepted());
    return static_cast<double>(r.metrics.peak_stack_items);
  };
  for (std::uint64_t n = 1 << 10; n <= 1 << 17; n <<= 1) {
    const double b = static_cast<double>(ceil_sqrt(n));
    EXPECT_NEAR(peak(Algo::onepass, n), std::ceil(static_cast<double>(n / 2) / b), 1.0) << n;
    const double ratio = peak(Algo::onepass, 2 * n) / peak(Algo::onepass, n);
    EXPECT_NEAR(ratio, std::sqrt(2.0), 0.1 * std::sqrt(2.0)) << n;
    EXPECT_LE(peak(Algo::twopass, 2 * n), peak(Algo::twopass, n) + 2.0) << n;
  }
}

}  // namespace
}  // namespace dyck
