// SPDX-License-Identifier: Apache-2.0
#pragma once

// Differential checking: run every fast path against its brute-force
// reference on one input and report divergences, together with the
// structural invariants the arrays must satisfy.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lyndon/binary_rle.hpp"
#include "lyndon/border.hpp"
#include "lyndon/lyndon_border_array.hpp"
#include "lyndon/lyndon_word.hpp"
#include "lyndon/oracle.hpp"
#include "lyndon/snlbfp.hpp"
#include "lyndon/suffix_index.hpp"
#include "lyndon/text.hpp"

namespace lyndon::check {

struct differential_result {
  std::size_t text_length = 0;
  std::size_t distinct_symbols = 0;
  std::size_t chain_links_traversed = 0;

  bool border_ok = true;    // border_array vs reference
  bool lyndon_ok = true;    // is_lyndon (and binary_is_lyndon) vs reference
  bool cfl_ok = true;       // cfl_factorize (and binary_cfl) vs reference
  bool psi_ok = true;       // psi_array (and binary_psi) vs per-prefix reference
  bool snlbfp_ok = true;    // snlbfp vs reference scan
  bool lba_ok = true;       // naive and efficient vs reference
  bool links_ok = true;     // chain link traversals <= n
  bool sa_ok = true;        // suffix_array vs sorted suffixes
  bool lsa_ok = true;       // both Lyndon suffix array routes vs reference
  bool rle_ok = true;       // run-length round trip (binary inputs)
  bool structural_ok = true;

  std::vector<std::string> failures;

  bool all_ok() const { return failures.empty(); }
};

namespace detail {

inline void report(differential_result& r, bool& flag, std::string_view what) {
  flag = false;
  r.failures.emplace_back(what);
}

}  // namespace detail

/// Run every applicable fast path against its reference on one input.
inline differential_result run_differential(const text& t) {
  differential_result r;
  r.text_length = t.size();
  const std::size_t n = t.size();
  if (n == 0) return r;

  bool present[256] = {};
  for (std::size_t i = 0; i < n; ++i) present[t[i]] = true;
  for (bool p : present) r.distinct_symbols += p ? 1 : 0;
  const bool binary = r.distinct_symbols <= 2;

  const auto beta = border_array(t);
  if (beta != oracle::border_array(t))
    detail::report(r, r.border_ok, "border_array != reference");

  const bool lyn = is_lyndon(t);
  if (lyn != oracle::is_lyndon(t))
    detail::report(r, r.lyndon_ok, "is_lyndon != reference");
  if (binary && binary_is_lyndon(t) != lyn)
    detail::report(r, r.lyndon_ok, "binary_is_lyndon != is_lyndon");

  const auto cfl = cfl_factorize(t);
  if (cfl != oracle::cfl_factorize(t))
    detail::report(r, r.cfl_ok, "cfl_factorize != reference");
  if (binary && binary_cfl(t) != cfl)
    detail::report(r, r.cfl_ok, "binary_cfl != cfl_factorize");

  const auto psi = psi_array(t);
  for (std::size_t i = 0; i < n; ++i) {
    if (psi[i] != oracle::is_lyndon(text(t.prefix(i + 1)))) {
      detail::report(r, r.psi_ok, "psi_array != per-prefix reference");
      break;
    }
  }
  if (binary && binary_psi(t) != psi)
    detail::report(r, r.psi_ok, "binary_psi != psi_array");

  if (snlbfp(t).prefix_len != oracle::snlbfp_length(t))
    detail::report(r, r.snlbfp_ok, "snlbfp != reference");

  lba_stats stats;
  const auto lba_fast = lyndon_border_array_efficient(t, &stats);
  r.chain_links_traversed = stats.chain_links_traversed;
  const auto lba_ref = oracle::lyndon_border_array(t);
  if (lba_fast != lba_ref)
    detail::report(r, r.lba_ok, "lyndon_border_array_efficient != reference");
  if (lyndon_border_array_naive(t) != lba_ref)
    detail::report(r, r.lba_ok, "lyndon_border_array_naive != reference");
  if (stats.chain_links_traversed > n)
    detail::report(r, r.links_ok, "chain link traversals exceed n");

  const auto order = suffix_array(t);
  if (order != oracle::suffix_array(t))
    detail::report(r, r.sa_ok, "suffix_array != reference");

  const auto lsa_ref = oracle::lyndon_suffix_array(t);
  if (lyndon_suffix_array_scan(t) != lsa_ref)
    detail::report(r, r.lsa_ok, "lyndon_suffix_array_scan != reference");
  if (lyndon_suffix_array_rmq(t) != lsa_ref)
    detail::report(r, r.lsa_ok, "lyndon_suffix_array_rmq != reference");

  if (binary && expand(rle(t)) != t)
    detail::report(r, r.rle_ok, "rle round trip failed");

  // Structural invariants.
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t x = lba_fast[i];
    if (x > 0 && lba_ref[x - 1] != 0) {
      detail::report(r, r.structural_ok, "Lyndon border of a Lyndon border is nonzero");
      break;
    }
  }
  for (std::size_t k = 1; k < lsa_ref.size(); ++k) {
    if (lsa_ref[k - 1] >= lsa_ref[k] ||
        t.suffix(lsa_ref[k - 1]) >= t.suffix(lsa_ref[k])) {
      detail::report(r, r.structural_ok, "Lyndon suffix array not doubly increasing");
      break;
    }
  }
  {
    bool ok = true;
    for (std::size_t f = 0; f < cfl.factors.size() && ok; ++f) {
      ok = oracle::is_lyndon(text(factor_view(t, cfl.factors[f])));
      if (f > 0 && factor_view(t, cfl.factors[f - 1]) < factor_view(t, cfl.factors[f]))
        ok = false;
    }
    if (!ok)
      detail::report(r, r.structural_ok, "factorization not a non-increasing Lyndon product");
  }
  {
    std::vector<bool> seen(n, false);
    bool ok = true;
    for (const std::size_t p : order) {
      if (p >= n || seen[p]) {
        ok = false;
        break;
      }
      seen[p] = true;
    }
    for (std::size_t k = 1; k < n && ok; ++k)
      ok = t.suffix(order[k - 1]) < t.suffix(order[k]);
    if (!ok)
      detail::report(r, r.structural_ok, "suffix array not a sorted permutation");
  }
  return r;
}

}  // namespace lyndon::check
