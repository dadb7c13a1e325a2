// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exits nonzero if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <sys/wait.h>
#include <vector>

#include "lyndon/lyndon.hpp"

namespace {

using namespace lyndon;
using clock_type = std::chrono::steady_clock;

int failures_total = 0;

void report(int criterion, bool ok, const std::string& what) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures_total;
}

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

template <typename Fn>
void for_each_binary(std::size_t max_len, Fn&& fn) {
  std::string s;
  for (std::size_t len = 1; len <= max_len; ++len) {
    s.assign(len, 'a');
    for (std::size_t m = 0; m < (std::size_t{1} << len); ++m) {
      for (std::size_t i = 0; i < len; ++i) s[i] = (m >> i) & 1 ? 'b' : 'a';
      fn(std::string_view(s));
    }
  }
}

struct sweep_totals {
  std::size_t inputs = 0;
  std::size_t equality_failures = 0;
  std::size_t link_failures = 0;
  std::size_t structural_failures = 0;
  std::string first_failure;

  void add(const check::differential_result& r, std::string_view label) {
    ++inputs;
    const bool equal = r.border_ok && r.lyndon_ok && r.cfl_ok && r.psi_ok &&
                       r.snlbfp_ok && r.lba_ok && r.sa_ok && r.lsa_ok && r.rle_ok;
    if (!equal) ++equality_failures;
    if (!r.links_ok) ++link_failures;
    if (!r.structural_ok) ++structural_failures;
    if (!r.all_ok() && first_failure.empty())
      first_failure = std::string(label) + ": " + r.failures.front();
  }
};

// --- criterion 1: golden reproduction of the running example -------------

void criterion_1() {
  const text t("abaabaaabbaabaab");
  using sv = std::vector<std::size_t>;
  const sv beta_expected{0, 0, 1, 1, 2, 3, 4, 1, 2, 0, 1, 1, 2, 3, 4, 5};
  const sv lba_expected{0, 0, 1, 1, 2, 1, 1, 1, 2, 0, 1, 1, 2, 1, 1, 2};
  const sv sa_expected{5, 13, 2, 10, 6, 14, 3, 11, 0, 7, 15, 4, 12, 1, 9, 8};
  const sv ls_expected{5, 13, 14, 15};

  bool exact = border_array(t) == beta_expected &&
               lyndon_border_array_efficient(t) == lba_expected &&
               suffix_array(t) == sa_expected &&
               lyndon_suffix_array_scan(t) == ls_expected;

  double best = 1e9;
  for (int rep = 0; rep < 5; ++rep) {
    const auto start = clock_type::now();
    exact = exact && border_array(t) == beta_expected &&
            lyndon_border_array_efficient(t) == lba_expected &&
            suffix_array(t) == sa_expected &&
            lyndon_suffix_array_scan(t) == ls_expected;
    best = std::min(best, seconds_since(start));
  }
  char msg[160];
  std::snprintf(msg, sizeof msg,
                "golden rows (beta, Lbeta, A, LS) reproduced exactly in %.3f ms", best * 1e3);
  report(1, exact && best < 1e-3, msg);
}

// --- criteria 2, 4a, 5 over the exhaustive binary corpus -----------------

sweep_totals sweep_exhaustive_14(double& elapsed) {
  sweep_totals totals;
  const auto start = clock_type::now();
  for_each_binary(14, [&](std::string_view s) {
    totals.add(check::run_differential(text(s)), s);
  });
  elapsed = seconds_since(start);
  return totals;
}

// --- criterion 3 over random corpora --------------------------------------

sweep_totals sweep_random() {
  sweep_totals totals;
  std::mt19937 rng(424242);
  std::uniform_int_distribution<std::size_t> len_dist(1, 2000);
  for (const std::size_t sigma : {2u, 3u, 26u}) {
    std::uniform_int_distribution<std::size_t> sym_dist(0, sigma - 1);
    for (int iter = 0; iter < 1000; ++iter) {
      std::string s(len_dist(rng), '\0');
      for (auto& c : s) c = static_cast<char>('a' + sym_dist(rng));
      totals.add(check::run_differential(text(s)),
                 "random sigma=" + std::to_string(sigma) + " #" + std::to_string(iter));
    }
  }
  return totals;
}

// --- criterion 4b: empirical linearity through the CLI bench --------------

void criterion_4(const sweep_totals& exhaustive, const sweep_totals& random_sweep) {
  const bool links_ok =
      exhaustive.link_failures == 0 && random_sweep.link_failures == 0;

  const std::string cmd = std::string("'") + LYNDON_CLI_PATH +
                          "' bench --min-exp 16 --max-exp 22 --repeats 5 --seed 7";
  std::string out;
  bool bench_ok = false;
  double worst_ratio = 0.0;
  if (FILE* pipe = popen(cmd.c_str(), "r")) {
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    if (WIFEXITED(status) && WEXITSTATUS(status) == 0) {
      std::istringstream lines(out);
      std::string line;
      std::vector<std::vector<double>> rows;
      while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::vector<double> row;
        double v;
        while (fields >> v) row.push_back(v);
        if (row.size() == 5) rows.push_back(row);
      }
      if (rows.size() == 7) {
        bench_ok = true;
        for (std::size_t r = 1; r < rows.size(); ++r)
          for (std::size_t col = 1; col < 5; ++col) {
            const double ratio = rows[r][col] / rows[r - 1][col];
            worst_ratio = std::max(worst_ratio, ratio);
            if (ratio > 2.5) bench_ok = false;
          }
      }
    }
  }
  char msg[200];
  std::snprintf(msg, sizeof msg,
                "linearity: chain links <= n on all %zu inputs; bench 2^16..2^22 worst "
                "per-doubling growth %.2fx (limit 2.5x)",
                exhaustive.inputs + random_sweep.inputs, worst_ratio);
  report(4, links_ok && bench_ok, msg);
}

// --- criterion 6: failure points stay failed under extension --------------

void criterion_6() {
  std::size_t base_words = 0, violations = 0;
  for_each_binary(10, [&](std::string_view s) {
    const text t(s);
    if (s.size() < 2) return;
    if (oracle::border_array(t).back() != 0) return;
    if (oracle::is_lyndon(t)) return;
    ++base_words;
    for_each_binary(3, [&](std::string_view ext) {
      const text extended(std::string(s) + std::string(ext));
      if (is_lyndon(extended) || oracle::is_lyndon(extended)) ++violations;
    });
  });
  char msg[160];
  std::snprintf(msg, sizeof msg,
                "no right extension (up to 3 symbols) of %zu border-free non-Lyndon words "
                "is Lyndon (%zu violations)",
                base_words, violations);
  report(6, base_words > 0 && violations == 0, msg);
}

// --- criterion 7: binary Lyndon test, exhaustive to 18 ---------------------

void criterion_7() {
  std::size_t total = 0, mismatches = 0;
  for_each_binary(18, [&](std::string_view s) {
    ++total;
    const text t(s);
    if (binary_is_lyndon(t) != oracle::is_lyndon(t)) ++mismatches;
  });
  char msg[160];
  std::snprintf(msg, sizeof msg,
                "binary Lyndon test agrees with the reference on all %zu binary strings "
                "up to length 18 (%zu divergences)",
                total, mismatches);
  report(7, mismatches == 0, msg);
}

}  // namespace

int main() {
  criterion_1();

  double exhaustive_seconds = 0;
  const sweep_totals exhaustive = sweep_exhaustive_14(exhaustive_seconds);
  {
    char msg[200];
    std::snprintf(msg, sizeof msg,
                  "exhaustive oracle equivalence on %zu binary strings up to length 14 "
                  "(%zu divergences%s%s) in %.1f s (limit 300 s)",
                  exhaustive.inputs, exhaustive.equality_failures,
                  exhaustive.first_failure.empty() ? "" : ", first: ",
                  exhaustive.first_failure.c_str(), exhaustive_seconds);
    report(2, exhaustive.equality_failures == 0 && exhaustive_seconds < 300.0, msg);
  }

  const sweep_totals random_sweep = sweep_random();
  {
    char msg[200];
    std::snprintf(msg, sizeof msg,
                  "randomized oracle equivalence on %zu strings (alphabets 2, 3, 26; n <= "
                  "2000): %zu divergences%s%s",
                  random_sweep.inputs, random_sweep.equality_failures,
                  random_sweep.first_failure.empty() ? "" : ", first: ",
                  random_sweep.first_failure.c_str());
    report(3, random_sweep.equality_failures == 0, msg);
  }

  criterion_4(exhaustive, random_sweep);

  {
    const std::size_t bad =
        exhaustive.structural_failures + random_sweep.structural_failures;
    char msg[200];
    std::snprintf(msg, sizeof msg,
                  "structural invariants (nested Lyndon borders, doubly increasing LS, "
                  "non-increasing Lyndon factors, sorted permutation) on %zu inputs "
                  "(%zu violations)",
                  exhaustive.inputs + random_sweep.inputs, bad);
    report(5, bad == 0, msg);
  }

  criterion_6();
  criterion_7();

  if (failures_total > 0) std::printf("%d criterion(s) FAILED\n", failures_total);
  return failures_total == 0 ? 0 : 1;
}
