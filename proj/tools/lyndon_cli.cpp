// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: computes border arrays, Lyndon border arrays,
// Lyndon factorizations, suffix arrays and Lyndon suffix arrays, renders
// the combined table, differential-checks the fast paths against the
// brute-force references, and benchmarks scaling behavior.
//
// Exit codes: 0 success, 1 divergence found by check, 2 usage error,
// 3 input error.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <malloc.h>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lyndon/lyndon.hpp"

namespace {

using nlohmann::json;

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct global_options {
  std::string input_path;
  std::string format = "tsv";
  bool reverse = false;
  bool strip_newline = true;
  std::uint64_t seed = 1;
  bool timings = false;
};

lyndon::text load_input(const global_options& g) {
  std::string data;
  if (!g.input_path.empty()) {
    std::ifstream in(g.input_path, std::ios::binary);
    if (!in) throw input_error("cannot open input file: " + g.input_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    data = buf.str();
  } else {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    data = buf.str();
  }
  if (g.strip_newline) {  // remove one trailing line terminator
    if (!data.empty() && data.back() == '\n') data.pop_back();
    if (!data.empty() && data.back() == '\r') data.pop_back();
  }
  if (g.reverse) std::reverse(data.begin(), data.end());
  return lyndon::text(std::move(data));
}

using int_row = std::vector<long long>;

int_row to_row(const std::vector<std::size_t>& v) {
  return int_row(v.begin(), v.end());
}

void print_tsv_row(const int_row& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) std::fputc('\t', stdout);
    std::printf("%lld", row[i]);
  }
  std::fputc('\n', stdout);
}

long long now_ns() {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

/// One output record: named integer arrays plus the row TSV mode prints.
void emit(const global_options& g, std::size_t input_length,
          const std::vector<std::pair<std::string, int_row>>& arrays,
          const int_row& tsv_row, long long total_ns) {
  if (g.format == "json") {
    json j;
    j["input_length"] = input_length;
    json arr = json::object();
    for (const auto& [name, vals] : arrays) arr[name] = vals;
    j["arrays"] = arr;
    if (g.timings) j["timings"] = {{"total_ns", total_ns}};
    std::cout << j.dump(2) << '\n';
  } else {
    print_tsv_row(tsv_row);
    if (g.timings) std::printf("# total_ns\t%lld\n", total_ns);
  }
}

int cmd_array(const global_options& g, const std::string& which) {
  const auto t = load_input(g);
  const long long start = now_ns();
  std::vector<std::pair<std::string, int_row>> arrays;
  int_row tsv_row;

  if (which == "border") {
    tsv_row = to_row(lyndon::border_array(t));
    arrays = {{"border", tsv_row}};
  } else if (which == "lba") {
    tsv_row = to_row(lyndon::lyndon_border_array_efficient(t));
    arrays = {{"lyndon_border", tsv_row}};
  } else if (which == "psi") {
    const auto flags = lyndon::psi_array(t);
    tsv_row.reserve(flags.size());
    for (const bool b : flags) tsv_row.push_back(b ? 1 : 0);
    arrays = {{"psi", tsv_row}};
  } else if (which == "cfl") {
    const auto f = lyndon::cfl_factorize(t);
    int_row starts, lens;
    for (const auto& span : f.factors) {
      starts.push_back(static_cast<long long>(span.start));
      lens.push_back(static_cast<long long>(span.len));
    }
    tsv_row = lens;
    arrays = {{"cfl_starts", starts}, {"cfl_lengths", lens}};
  } else if (which == "snlbfp") {
    const auto r = lyndon::snlbfp(t);
    tsv_row = {r.prefix_len ? static_cast<long long>(*r.prefix_len) : -1};
    int_row len_arr, wit_arr;
    if (r.prefix_len) len_arr.push_back(static_cast<long long>(*r.prefix_len));
    if (r.witness_factor) wit_arr.push_back(static_cast<long long>(*r.witness_factor));
    arrays = {{"snlbfp", len_arr}, {"witness_factor", wit_arr}};
  } else if (which == "rle") {
    const auto runs = lyndon::rle(t);
    int_row syms;
    for (const auto& run : runs.runs) syms.push_back(run.sym);
    tsv_row = to_row(lyndon::exponent_list(runs));
    arrays = {{"rle_exponents", tsv_row}, {"rle_symbols", syms}};
  } else if (which == "sa") {
    tsv_row = to_row(lyndon::suffix_array(t));
    arrays = {{"suffix_array", tsv_row}};
  } else {  // lsa
    tsv_row = to_row(lyndon::lyndon_suffix_array_scan(t));
    arrays = {{"lyndon_suffix_array", tsv_row}};
  }
  emit(g, t.size(), arrays, tsv_row, now_ns() - start);
  return 0;
}

int cmd_table(const global_options& g) {
  const auto t = load_input(g);
  const long long start = now_ns();
  const std::size_t n = t.size();
  const auto beta = to_row(lyndon::border_array(t));
  const auto lba = to_row(lyndon::lyndon_border_array_efficient(t));
  const auto sa = to_row(lyndon::suffix_array(t));
  int_row ls = to_row(lyndon::lyndon_suffix_array_scan(t));
  ls.resize(n, -1);  // pad to full length
  const long long total = now_ns() - start;

  if (g.format == "json") {
    emit(g, n, {{"beta", beta}, {"lbeta", lba}, {"sa", sa}, {"ls", ls}}, {}, total);
    return 0;
  }
  std::fputs("i", stdout);
  for (std::size_t i = 0; i < n; ++i) std::printf("\t%zu", i);
  std::fputc('\n', stdout);
  std::fputs("s[i]", stdout);
  for (std::size_t i = 0; i < n; ++i) std::printf("\t%c", static_cast<char>(t[i]));
  std::fputc('\n', stdout);
  const auto row = [&](const char* label, const int_row& values) {
    std::fputs(label, stdout);
    for (const long long v : values) std::printf("\t%lld", v);
    std::fputc('\n', stdout);
  };
  row("beta[i]", beta);
  row("Lbeta[i]", lba);
  row("A[i]", sa);
  row("LS[i]", ls);
  if (g.timings) std::printf("# total_ns\t%lld\n", total);
  return 0;
}

struct check_options {
  std::size_t exhaustive_upto = 0;
  std::size_t random_count = 0;
  std::size_t max_len = 256;
  std::string alphabet = "binary";
};

std::size_t alphabet_size(const std::string& name) {
  if (name == "binary") return 2;
  if (name == "ternary") return 3;
  const int v = std::stoi(name);
  if (v < 1 || v > 256) throw input_error("alphabet size out of range: " + name);
  return static_cast<std::size_t>(v);
}

int cmd_check(const global_options& g, const check_options& c) {
  std::size_t checked = 0;
  std::size_t divergent = 0;
  std::size_t printed = 0;

  const auto run_one = [&](const lyndon::text& t, const std::string& label) {
    const auto r = lyndon::check::run_differential(t);
    ++checked;
    if (!r.all_ok()) {
      ++divergent;
      if (printed < 20) {
        ++printed;
        std::fprintf(stderr, "divergence on %s:", label.c_str());
        for (const auto& f : r.failures) std::fprintf(stderr, " [%s]", f.c_str());
        std::fputc('\n', stderr);
      }
    }
  };

  if (c.exhaustive_upto == 0 && c.random_count == 0) {
    const auto t = load_input(g);
    if (t.empty()) throw input_error("check: empty input");
    if (t.size() > 4096) throw input_error("check: input longer than the 4096-byte oracle cap");
    run_one(t, "input");
  } else {
    const std::size_t sigma = alphabet_size(c.alphabet);
    if (c.exhaustive_upto > 0) {
      std::string s;
      for (std::size_t len = 1; len <= c.exhaustive_upto; ++len) {
        s.assign(len, 'a');
        std::size_t total = 1;
        for (std::size_t i = 0; i < len; ++i) total *= sigma;
        for (std::size_t m = 0; m < total; ++m) {
          std::size_t v = m;
          for (std::size_t i = 0; i < len; ++i) {
            s[i] = static_cast<char>('a' + v % sigma);
            v /= sigma;
          }
          run_one(lyndon::text(s), s);
        }
      }
    }
    if (c.random_count > 0) {
      const std::size_t cap = std::min<std::size_t>(c.max_len, 4096);
      std::mt19937 rng(static_cast<std::uint32_t>(g.seed));
      std::uniform_int_distribution<std::size_t> len_dist(1, cap);
      std::uniform_int_distribution<std::size_t> sym_dist(0, sigma - 1);
      for (std::size_t i = 0; i < c.random_count; ++i) {
        std::string s(len_dist(rng), '\0');
        for (auto& ch : s) ch = static_cast<char>('a' + sym_dist(rng));
        run_one(lyndon::text(s), "random #" + std::to_string(i));
      }
    }
  }
  std::printf("checked %zu input%s, %zu divergence%s\n", checked, checked == 1 ? "" : "s",
              divergent, divergent == 1 ? "" : "s");
  return divergent == 0 ? 0 : 1;
}

struct bench_options {
  std::size_t min_exp = 16;
  std::size_t max_exp = 22;
  std::size_t repeats = 3;
};

volatile std::size_t bench_sink = 0;

int cmd_bench(const global_options& g, const bench_options& b) {
  if (b.min_exp > b.max_exp || b.max_exp > 30) throw input_error("bench: bad exponent range");
#if defined(__GLIBC__)
  // Keep large scratch vectors on the reusable heap; otherwise every repeat
  // above the mmap threshold pays kernel page-zeroing instead of measuring
  // the algorithm.
  mallopt(M_MMAP_THRESHOLD, 1 << 30);
#endif
  std::mt19937_64 rng(g.seed);

  std::vector<lyndon::text> inputs;
  for (std::size_t e = b.min_exp; e <= b.max_exp; ++e) {
    std::string s(std::size_t{1} << e, 'a');
    for (auto& c : s) c = rng() & 1 ? 'b' : 'a';
    inputs.emplace_back(std::move(s));
  }

  // Minimum wall time per (size, stage) cell. Rounds are interleaved across
  // all sizes so a transient system slowdown cannot inflate every sample of
  // one cell; fast cells keep sampling until a 20 ms budget is spent.
  constexpr std::size_t stages = 4;
  struct cell {
    long long best = std::numeric_limits<long long>::max();
    long long spent = 0;
    std::size_t samples = 0;
  };
  std::vector<std::array<cell, stages>> cells(inputs.size());
  const auto satisfied = [&](const cell& c) {
    return c.samples >= b.repeats && (c.spent >= 20'000'000 || c.samples >= 50);
  };
  const auto sample = [&](cell& c, const auto& fn) {
    if (satisfied(c)) return;
    const long long start = now_ns();
    bench_sink = bench_sink + fn();
    const long long took = now_ns() - start;
    c.best = std::min(c.best, took);
    c.spent += took;
    ++c.samples;
  };
  bool pending = true;
  while (pending) {
    pending = false;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      const lyndon::text& t = inputs[i];
      sample(cells[i][0], [&] { return lyndon::border_array(t).size(); });
      sample(cells[i][1], [&] { return lyndon::lyndon_border_array_efficient(t).size(); });
      sample(cells[i][2], [&] { return lyndon::suffix_array(t).size(); });
      sample(cells[i][3], [&] { return lyndon::lyndon_suffix_array_scan(t).size(); });
      for (const cell& c : cells[i]) pending = pending || !satisfied(c);
    }
  }

  json rows = json::array();
  if (g.format != "json")
    std::printf("# n\tborder_ns\tlba_ns\tsa_ns\tlsa_scan_ns\n");
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const std::size_t n = inputs[i].size();
    if (g.format == "json") {
      rows.push_back({{"n", n},
                      {"border_ns", cells[i][0].best},
                      {"lba_ns", cells[i][1].best},
                      {"sa_ns", cells[i][2].best},
                      {"lsa_scan_ns", cells[i][3].best}});
    } else {
      std::printf("%zu\t%lld\t%lld\t%lld\t%lld\n", n, cells[i][0].best, cells[i][1].best,
                  cells[i][2].best, cells[i][3].best);
    }
  }
  if (g.format == "json") std::cout << json{{"bench", rows}}.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  global_options g;
  check_options c;
  bench_options b;

  CLI::App app{"Lyndon border arrays, Lyndon suffix arrays, and supporting structures"};
  app.require_subcommand(1);
  app.add_option("-i,--input", g.input_path, "Read input from FILE instead of stdin");
  app.add_option("-f,--format", g.format, "Output format")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();
  app.add_flag("--reverse", g.reverse,
               "Reverse the input before computing (co-Lyndon convenience)");
  app.add_flag("--strip-newline,!--no-strip-newline", g.strip_newline,
               "Remove one trailing line terminator from the input (default: on)");
  app.add_option("--seed", g.seed, "Seed for generated corpora and benchmarks")
      ->capture_default_str();
  app.add_flag("--timings", g.timings, "Report per-command timings in nanoseconds");

  for (const char* name : {"border", "lba", "psi", "cfl", "snlbfp", "rle", "sa", "lsa"}) {
    app.add_subcommand(name)->fallthrough();
  }
  app.get_subcommand("border")->description("Border array (longest proper border per prefix)");
  app.get_subcommand("lba")->description("Lyndon border array");
  app.get_subcommand("psi")->description("Per-prefix Lyndon flags (1/0)");
  app.get_subcommand("cfl")->description("Chen-Fox-Lyndon factorization");
  app.get_subcommand("snlbfp")->description("Shortest non-Lyndon border-free prefix length (-1 if none)");
  app.get_subcommand("rle")->description("Run-length exponent list (binary alphabet)");
  app.get_subcommand("sa")->description("Suffix array");
  app.get_subcommand("lsa")->description("Lyndon suffix array");

  auto* table = app.add_subcommand("table", "All rows (i, s, beta, Lbeta, A, LS) in one table");
  table->fallthrough();

  auto* check_cmd = app.add_subcommand(
      "check", "Differential-check fast paths against brute-force references");
  check_cmd->fallthrough();
  check_cmd->add_option("--exhaustive-upto", c.exhaustive_upto,
                        "Check every string up to this length over --alphabet");
  check_cmd->add_option("--random", c.random_count, "Check this many random strings");
  check_cmd->add_option("--max-len", c.max_len, "Maximum random string length")
      ->capture_default_str();
  check_cmd->add_option("--alphabet", c.alphabet, "binary, ternary, or a size")
      ->capture_default_str();

  auto* bench_cmd =
      app.add_subcommand("bench", "Time the linear algorithms on doubling input sizes");
  bench_cmd->fallthrough();
  bench_cmd->add_option("--min-exp", b.min_exp, "Smallest size as a power of two")
      ->capture_default_str();
  bench_cmd->add_option("--max-exp", b.max_exp, "Largest size as a power of two")
      ->capture_default_str();
  bench_cmd->add_option("--repeats", b.repeats, "Repetitions per size (best is kept)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const char* name : {"border", "lba", "psi", "cfl", "snlbfp", "rle", "sa", "lsa"})
      if (app.got_subcommand(name)) return cmd_array(g, name);
    if (app.got_subcommand(table)) return cmd_table(g);
    if (app.got_subcommand(check_cmd)) return cmd_check(g, c);
    if (app.got_subcommand(bench_cmd)) return cmd_bench(g, b);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 2;
}
