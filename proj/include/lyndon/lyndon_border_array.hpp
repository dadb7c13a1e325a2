// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "lyndon/border.hpp"
#include "lyndon/snlbfp.hpp"
#include "lyndon/text.hpp"

namespace lyndon {

/// Instrumentation for the efficient Lyndon border array construction.
struct lba_stats {
  /// Number of border-chain links followed. At most n for any input: every
  /// prefix length is walked once and memoized.
  std::size_t chain_links_traversed = 0;
};

/// Lyndon border array, naive construction: for each prefix take the
/// penultimate value of its chain of borders and keep it when that prefix
/// is a Lyndon word. A Lyndon border is border-free, and the only
/// border-free entry of a chain is the penultimate one, so no other chain
/// value can qualify. Border-free prefixes get 0.
inline std::vector<std::size_t> lyndon_border_array_naive(const text& t) {
  if (t.empty()) throw std::invalid_argument("lyndon_border_array_naive: empty text");
  const std::size_t n = t.size();
  const auto beta = border_array(t);
  const auto psi = psi_array(t);
  std::vector<std::size_t> lba(n, 0);
  for (std::size_t len = 1; len <= n; ++len) {
    const auto chain = border_chain(beta, len);
    const auto k = penultimate(chain);
    if (k && psi[*k - 1]) lba[len - 1] = *k;
  }
  return lba;
}

/// Lyndon border array, single-pass construction: walk each chain of
/// borders once, pushing the visited prefix lengths on a stack, then assign
/// the memoized penultimate value to every popped length. Pval short-cuts
/// any chain tail that was walked before, so the total number of link
/// traversals is at most n. The Lyndon test for a border-free length k
/// reduces to k < r with r the shortest non-Lyndon border-free prefix
/// length (n+1 when none exists).
inline std::vector<std::size_t> lyndon_border_array_efficient(const text& t,
                                                              lba_stats* stats = nullptr) {
  if (t.empty()) throw std::invalid_argument("lyndon_border_array_efficient: empty text");
  const std::size_t n = t.size();
  const auto beta = border_array(t);
  const std::size_t r = snlbfp(t).prefix_len.value_or(n + 1);

  constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> pval(n + 1, unset);  // indexed by prefix length
  std::vector<bool> done(n + 1, false);
  std::vector<std::size_t> lba(n, 0);
  std::vector<std::size_t> stack;
  std::size_t links = 0;

  for (std::size_t i = n; i >= 1; --i) {
    if (done[i]) continue;
    stack.clear();
    // Walk the chain from i down to 0 or to a memoized tail. k ends up as
    // the last nonzero value seen: the penultimate value of the chain, or i
    // itself when i is border-free.
    std::size_t j = i;
    std::size_t k = 0;
    while (true) {
      if (j == 0) break;
      if (pval[j] != unset) {
        k = pval[j];
        break;
      }
      stack.push_back(j);
      k = j;
      ++links;
      j = beta[j - 1];
    }
    while (!stack.empty()) {
      const std::size_t popped = stack.back();
      stack.pop_back();
      // A border must be strictly shorter than its word, hence k < popped;
      // k < r makes the border-free prefix of length k a Lyndon word.
      lba[popped - 1] = (k < r && k < popped) ? k : 0;
      done[popped] = true;
      pval[popped] = k;
    }
  }
  if (stats) stats->chain_links_traversed = links;
  return lba;
}

}  // namespace lyndon
