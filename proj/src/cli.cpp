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

#include "dyck/cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>

#include "dyck/core.hpp"
#include "dyck/fingerprint.hpp"
#include "dyck/instances.hpp"
#include "dyck/metrics.hpp"
#include "dyck/onepass.hpp"
#include "dyck/reduction.hpp"
#include "dyck/source.hpp"
#include "dyck/stream_format.hpp"
#include "dyck/twopass.hpp"

namespace dyck {

namespace {

namespace fs = std::filesystem;

/// Scratch file removed on destruction.
class TempFile {
 public:
  TempFile() {
    std::string pattern = (fs::temp_directory_path() / "dyck-XXXXXX").string();
    const int fd = ::mkstemp(pattern.data());
    if (fd < 0) throw InputError("cannot create temporary file");
    ::close(fd);
    path_ = pattern;
  }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
  ~TempFile() {
    std::error_code ec;
    fs::remove(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

struct InputOptions {
  std::string path = "-";
  std::string format = "chars2";
  std::uint32_t s = 2;
};

/// The input as a re-readable bracket stream over {a, ā, b, b̄}.
struct PreparedInput {
  std::unique_ptr<TempFile> scratch;
  std::unique_ptr<BracketFileSource> source;
  bool buffered = false;
};

PreparedInput prepare_input(const InputOptions& opt, std::istream& stdin_stream) {
  const StreamFormat format = parse_format(opt.format);
  if (opt.s < 1) throw InputError("--s must be at least 1");
  if (format == StreamFormat::chars2 && opt.s != 2) {
    throw InputError("chars2 format requires --s 2");
  }
  PreparedInput prepared;
  if (format == StreamFormat::chars2 && opt.path != "-") {
    try {
      prepared.source = std::make_unique<BracketFileSource>(opt.path);
      return prepared;
    } catch (const InputError&) {
      // Comments or a missing file; the buffered route reports real errors.
    }
  }

  std::ifstream file;
  std::istream* in = &stdin_stream;
  if (opt.path != "-") {
    file.open(opt.path, std::ios::binary);
    if (!file) throw InputError("cannot open " + opt.path);
    in = &file;
  }

  std::unique_ptr<LetterSource> raw;
  switch (format) {
    case StreamFormat::chars2: raw = std::make_unique<BracketStreamSource>(*in); break;
    case StreamFormat::tokens: raw = std::make_unique<TokenStreamSource>(*in, opt.s); break;
    case StreamFormat::tags: raw = std::make_unique<TagSource>(read_tag_events(*in)); break;
  }
  std::unique_ptr<LetterSource> reduced;
  LetterSource* letters = raw.get();
  if (format == StreamFormat::tokens && opt.s != 2) {
    reduced = std::make_unique<ReducedSource>(ReductionParams::for_alphabet(opt.s), *raw);
    letters = reduced.get();
  }

  prepared.scratch = std::make_unique<TempFile>();
  {
    std::ofstream outf(prepared.scratch->path(), std::ios::binary);
    std::string chunk;
    while (auto l = letters->next()) {
      if (l->type == 1) chunk.push_back(l->is_opener() ? '(' : ')');
      else chunk.push_back(l->is_opener() ? '[' : ']');
      if (chunk.size() >= 1 << 16) {
        outf << chunk;
        chunk.clear();
      }
    }
    outf << chunk;
    if (!outf) throw InputError("cannot write temporary file");
  }
  prepared.source = std::make_unique<BracketFileSource>(prepared.scratch->path());
  prepared.buffered = true;
  return prepared;
}

CheckResult run_oracle(const BidirectionalSource& src, std::uint32_t s) {
  auto fwd = src.forward();
  std::vector<Letter> letters;
  letters.reserve(src.size());
  while (auto l = fwd->next()) letters.push_back(*l);
  const Word w(std::move(letters), 2);
  CheckResult r;
  r.verdict = oracle_check(w);
  r.metrics.algo = Algo::oracle;
  r.metrics.n = w.size();
  r.metrics.padded_n = w.size();
  r.metrics.letters_read = w.size();
  r.metrics.pass_count = 1;
  r.metrics.item_bits = bits_for(std::max<std::uint32_t>(s, 2) - 1) + 1;
  std::int64_t h = 0;
  std::int64_t peak = 0;
  for (Letter l : w) {
    h += step_value(l);
    peak = std::max(peak, h);
  }
  r.metrics.peak_stack_items = static_cast<std::uint64_t>(peak);
  r.metrics.verdict = r.verdict;
  return r;
}

void write_metrics(const std::string& path, const Metrics& m, std::ostream& out) {
  if (path.empty()) return;
  if (path == "-") {
    out << m.emit() << '\n';
    return;
  }
  std::ofstream f(path, std::ios::app);
  if (!f) throw InputError("cannot write metrics to " + path);
  f << m.emit() << '\n';
}

struct CheckOptions {
  InputOptions input;
  std::string algo = "onepass";
  std::uint64_t seed = 0;
  std::string mode = "fixed_prime";
  std::uint32_t c = 1;
  std::string metrics_path;
};

int run_check(const CheckOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  const Algo algo = parse_algo(opt.algo);
  const ModulusMode mode = parse_mode(opt.mode);
  PreparedInput input = prepare_input(opt.input, in);
  const std::uint64_t n = input.source->size();

  CheckResult result;
  if (algo == Algo::oracle) {
    result = run_oracle(*input.source, opt.input.s);
  } else {
    const HashParams params = make_params(std::max<std::uint64_t>(n, 1), opt.c, opt.seed, mode);
    if (algo == Algo::onepass) {
      auto fwd = input.source->forward();
      result = check_one_pass(*fwd, n, params);
    } else {
      result = check_two_pass(*input.source, params);
    }
  }
  result.metrics.buffered_reverse = input.buffered;
  write_metrics(opt.metrics_path, result.metrics, out);
  if (result.verdict.accepted()) {
    out << "accept\n";
    return kExitAccept;
  }
  out << "reject " << reason_name(result.verdict.reason()) << '\n';
  err << "reject: " << reason_message(result.verdict.reason()) << '\n';
  return kExitReject;
}

void write_word(std::ostream& out, const Word& w, const std::string& format,
                const std::vector<std::string>& comments) {
  const StreamFormat f = parse_format(format);
  for (const auto& c : comments) out << "# " << c << '\n';
  out << emit_stream(w, f) << '\n';
}

std::string label_comment(bool member) {
  return std::string("label=") + (member ? "member" : "non-member");
}

/// X from a hex number: its n low-order bits, most significant first.
std::string x_from_hex(const std::string& hex, std::uint32_t n) {
  std::string bits;
  for (char ch : hex) {
    int v;
    if (ch >= '0' && ch <= '9') v = ch - '0';
    else if (ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
    else if (ch >= 'A' && ch <= 'F') v = ch - 'A' + 10;
    else throw InputError("bad hex digit in --x");
    for (int b = 3; b >= 0; --b) bits.push_back(((v >> b) & 1) ? 'b' : 'a');
  }
  if (bits.size() < n) bits.insert(0, n - bits.size(), 'a');
  const std::size_t extra = bits.size() - n;
  if (bits.find('b') < extra) throw InputError("--x has more than n significant bits");
  return bits.substr(extra);
}

std::uint64_t parse_size(const std::string& s) {
  try {
    const auto caret = s.find('^');
    if (caret == std::string::npos) return std::stoull(s);
    const std::uint64_t base = std::stoull(s.substr(0, caret));
    const std::uint64_t exp = std::stoull(s.substr(caret + 1));
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
      if (v > std::numeric_limits<std::uint64_t>::max() / base) throw InputError("size overflow");
      v *= base;
    }
    return v;
  } catch (const std::logic_error&) {
    throw InputError("bad size '" + s + "'");
  }
}

struct BenchOptions {
  std::string algo = "onepass";
  std::vector<std::string> sizes{"2^10", "2^12"};
  std::uint32_t seeds = 3;
  std::uint32_t trials = 100;
  std::string mode = "fixed_prime";
  std::uint32_t c = 1;
};

CheckResult run_algo(Algo algo, const Word& w, const HashParams& params) {
  if (algo == Algo::onepass) return check_one_pass(w, params);
  if (algo == Algo::twopass) return check_two_pass(w, params);
  WordSource src(w);
  return run_oracle(src, 2);
}

std::uint64_t bound_for(Algo algo, std::uint64_t n) {
  if (algo == Algo::onepass) return ceil_sqrt(n) + 1;
  if (algo == Algo::twopass) {
    const auto pad = pad_to_pow2(n);
    return pad && pad->padded_n > 1
               ? 2 * static_cast<std::uint64_t>(std::countr_zero(pad->padded_n))
               : 0;
  }
  return n;
}

int run_bench(const BenchOptions& opt, std::ostream& out) {
  const Algo algo = parse_algo(opt.algo);
  const ModulusMode mode = parse_mode(opt.mode);
  if (opt.seeds < 1) throw InputError("--seeds must be at least 1");
  std::uint64_t total_trials = 0;
  std::uint64_t total_false = 0;
  double prev_mean = 0;
  std::uint64_t prev_n = 0;
  bool bound_ok = true;
  for (const auto& size_text : opt.sizes) {
    const std::uint64_t n = parse_size(size_text);
    if (n < 2 || n % 2 != 0) throw InputError("bench sizes must be even and >= 2");
    std::uint64_t peak_sum = 0;
    std::uint64_t peak_max = 0;
    std::uint64_t false_accepts = 0;
    for (std::uint32_t seed = 0; seed < opt.seeds; ++seed) {
      const Word w = gen_random_member(n / 2, seed);
      const HashParams params = make_params(n, opt.c, seed, mode);
      CheckResult r = run_algo(algo, w, params);
      out << r.metrics.emit() << " seed=" << seed << '\n';
      if (!r.verdict.accepted()) {
        out << "error: member rejected at n=" << n << " seed=" << seed << '\n';
        return kExitReject;
      }
      peak_sum += r.metrics.peak_stack_items;
      peak_max = std::max(peak_max, r.metrics.peak_stack_items);
      for (std::uint32_t t = 0; t < opt.trials; ++t) {
        const std::uint64_t trial_seed = (std::uint64_t{seed} << 32) | t;
        const Word bad = mutate_member(w, trial_seed);
        const HashParams fresh = make_params(n, opt.c, trial_seed + 1, mode);
        if (run_algo(algo, bad, fresh).verdict.accepted()) ++false_accepts;
      }
    }
    const double mean = static_cast<double>(peak_sum) / opt.seeds;
    const std::uint64_t bound = bound_for(algo, n);
    bound_ok = bound_ok && peak_max <= bound;
    out << "summary algo=" << algo_name(algo) << " n=" << n << " seeds=" << opt.seeds
        << " mean_peak_stack_items=" << mean << " max_peak_stack_items=" << peak_max
        << " bound=" << bound << " false_accepts=" << false_accepts
        << " trials=" << opt.trials * opt.seeds;
    if (prev_n != 0) {
      out << " peak_ratio=" << mean / prev_mean
          << " size_ratio=" << static_cast<double>(n) / static_cast<double>(prev_n);
    }
    out << '\n';
    total_trials += std::uint64_t{opt.trials} * opt.seeds;
    total_false += false_accepts;
    prev_mean = mean;
    prev_n = n;
  }
  const double rate = total_trials ? static_cast<double>(total_false) / total_trials : 0.0;
  out << "summary algo=" << algo_name(algo) << " false_accept_rate=" << rate
      << " false_accepts=" << total_false << " trials=" << total_trials
      << " space_bound=" << (bound_ok ? "held" : "violated") << '\n';
  return bound_ok ? kExitAccept : kExitReject;
}

Word read_word(const std::string& path, const std::string& format, std::uint32_t s,
               std::istream& stdin_stream) {
  std::ostringstream buf;
  if (path == "-") {
    buf << stdin_stream.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open " + path);
    buf << f.rdbuf();
  }
  return parse_stream(buf.str(), parse_format(format), s);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Streaming recognizer for well-parenthesized words"};
  app.require_subcommand(1);

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Decide membership of a word");
  check_cmd->add_option("input", check.input.path, "Input file, '-' for stdin");
  check_cmd->add_option("--algo", check.algo, "onepass, twopass or oracle")
      ->check(CLI::IsMember({"onepass", "twopass", "oracle"}));
  check_cmd->add_option("--format", check.input.format, "chars2, tokens or tags")
      ->check(CLI::IsMember({"chars2", "tokens", "tags"}));
  check_cmd->add_option("--s", check.input.s, "Alphabet size (number of types)");
  check_cmd->add_option("--seed", check.seed, "Seed for the evaluation point");
  check_cmd->add_option("--mode", check.mode, "paper_exact or fixed_prime")
      ->check(CLI::IsMember({"paper_exact", "fixed_prime"}));
  check_cmd->add_option("--c", check.c, "Error exponent");
  check_cmd->add_option("--metrics", check.metrics_path, "Append a metrics record ('-' = stdout)");

  auto* gen_cmd = app.add_subcommand("gen", "Generate labelled words");
  gen_cmd->require_subcommand(1);
  std::string gen_format = "chars2";
  gen_cmd->add_option("--format", gen_format, "chars2 or tokens")
      ->check(CLI::IsMember({"chars2", "tokens"}));

  std::uint64_t pairs = 0;
  std::uint64_t gen_seed = 0;
  std::uint32_t gen_s = 2;
  auto* dyck_cmd = gen_cmd->add_subcommand("dyck", "Uniform random member");
  dyck_cmd->fallthrough();
  dyck_cmd->add_option("--pairs", pairs, "Number of matching pairs")->required();
  dyck_cmd->add_option("--seed", gen_seed, "Seed");
  dyck_cmd->add_option("--s", gen_s, "Alphabet size");

  std::string mutate_path;
  std::uint32_t mutate_s = 2;
  auto* mutate_cmd = gen_cmd->add_subcommand("mutate", "Flip the type of one matching pair");
  mutate_cmd->fallthrough();
  mutate_cmd->add_option("input", mutate_path, "Member word file, '-' for stdin")->required();
  mutate_cmd->add_option("--seed", gen_seed, "Seed");
  mutate_cmd->add_option("--s", mutate_s, "Alphabet size of a tokens input");
  std::string mutate_format = "chars2";
  mutate_cmd->add_option("--in-format", mutate_format, "chars2 or tokens");

  std::uint32_t mn = 0;
  std::uint32_t mk = 0;
  std::string mc;
  std::string mx;
  auto* mountain_cmd = gen_cmd->add_subcommand("mountain", "Single-coordinate hard instance");
  mountain_cmd->fallthrough();
  mountain_cmd->add_option("--n", mn, "Length of X")->required();
  mountain_cmd->add_option("--k", mk, "Position from the end, in [1, n]")->required();
  mountain_cmd->add_option("--c", mc, "a or b")->required()->check(CLI::IsMember({"a", "b"}));
  auto* x_opt = mountain_cmd->add_option("--x", mx, "X as hex (low n bits, bit 1 = b)");
  auto* mseed_opt = mountain_cmd->add_option("--seed", gen_seed, "Seed for a random X");
  x_opt->excludes(mseed_opt);

  std::uint32_t am = 0;
  std::uint32_t an = 0;
  std::optional<std::uint32_t> fault;
  auto* asc_cmd = gen_cmd->add_subcommand("ascension", "m-coordinate hard instance");
  asc_cmd->fallthrough();
  asc_cmd->add_option("--m", am, "Coordinates")->required();
  asc_cmd->add_option("--n", an, "Bits per coordinate")->required();
  asc_cmd->add_option("--seed", gen_seed, "Seed");
  asc_cmd->add_option("--fault", fault, "1-based coordinate given a wrong c_i");

  InputOptions reduce_in;
  reduce_in.format = "tokens";
  auto* reduce_cmd = app.add_subcommand("reduce", "Encode into the four-letter alphabet");
  reduce_cmd->add_option("input", reduce_in.path, "Input file, '-' for stdin");
  reduce_cmd->add_option("--format", reduce_in.format, "tokens or tags")
      ->check(CLI::IsMember({"chars2", "tokens", "tags"}));
  reduce_cmd->add_option("--s", reduce_in.s, "Alphabet size");
  std::string reduce_out = "chars2";
  reduce_cmd->add_option("--out-format", reduce_out, "chars2 or tokens")
      ->check(CLI::IsMember({"chars2", "tokens"}));

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Space and error measurements");
  bench_cmd->add_option("--algo", bench.algo, "onepass, twopass or oracle")
      ->check(CLI::IsMember({"onepass", "twopass", "oracle"}));
  bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated sizes, e.g. 2^10,2^12")
      ->delimiter(',');
  bench_cmd->add_option("--seeds", bench.seeds, "Members per size");
  bench_cmd->add_option("--trials", bench.trials, "Mutants per member");
  bench_cmd->add_option("--mode", bench.mode, "paper_exact or fixed_prime")
      ->check(CLI::IsMember({"paper_exact", "fixed_prime"}));
  bench_cmd->add_option("--c", bench.c, "Error exponent");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*check_cmd) return run_check(check, in, out, err);
    if (*gen_cmd) {
      if (*dyck_cmd) {
        write_word(out, gen_random_member(pairs, gen_seed, gen_s), gen_format,
                   {label_comment(true)});
        return kExitAccept;
      }
      if (*mutate_cmd) {
        const Word w = read_word(mutate_path, mutate_format, mutate_s, in);
        if (!oracle_check(w).accepted()) throw InputError("mutate expects a member word");
        write_word(out, mutate_member(w, gen_seed), gen_format, {label_comment(false)});
        return kExitAccept;
      }
      if (*mountain_cmd) {
        if (mn < 1) throw InputError("--n must be at least 1");
        std::string x;
        if (!mx.empty()) {
          x = x_from_hex(mx, mn);
        } else {
          x = random_ascension_spec(1, mn, gen_seed).x.front();
        }
        const Instance inst = gen_mountain(x, mk, mc.front());
        write_word(out, inst.word, gen_format,
                   {label_comment(inst.label),
                    "mountain n=" + std::to_string(mn) + " x=" + x + " k=" +
                        std::to_string(mk) + " c=" + mc});
        return kExitAccept;
      }
      if (*asc_cmd) {
        InstanceSpec spec = random_ascension_spec(am, an, gen_seed, fault);
        const Instance inst = gen_ascension(spec);
        spec.label = inst.label;
        write_word(out, inst.word, gen_format, {label_comment(inst.label), spec.to_record()});
        return kExitAccept;
      }
    }
    if (*reduce_cmd) {
      const Word w = read_word(reduce_in.path, reduce_in.format, reduce_in.s, in);
      const Word reduced = reduce_in.format == "tags" || w.alphabet_size() == 2
                               ? Word(std::vector<Letter>(w.begin(), w.end()), 2)
                               : reduce_word(w);
      out << emit_stream(reduced, parse_format(reduce_out)) << '\n';
      return kExitAccept;
    }
    if (*bench_cmd) return run_bench(bench, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParamsError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace dyck
