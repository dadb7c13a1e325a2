// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lyndon/border.hpp"
#include "lyndon/lyndon_word.hpp"
#include "lyndon/text.hpp"

namespace lyndon {

/// Result of the shortest non-Lyndon border-free prefix search.
///
/// When prefix_len is present, the prefix of that length is border-free and
/// not a Lyndon word, and every shorter border-free prefix is a Lyndon word.
/// Absent means no such prefix exists (for example when the text itself is
/// a Lyndon word). witness_factor is the index of the first factorization
/// factor starting with a letter smaller than t[0], when one exists.
struct snlbfp_result {
  std::optional<std::size_t> prefix_len;
  std::optional<std::size_t> witness_factor;
  friend bool operator==(const snlbfp_result&, const snlbfp_result&) = default;
};

/// Shortest prefix that is both border-free and not a Lyndon word, in O(n):
/// factorize, binary-search the factor first letters (non-increasing) for
/// the first letter below t[0], then scan the all-same-letter region for an
/// interior border-free point past the first factor, falling back to the
/// first position of the smaller-letter factor.
inline snlbfp_result snlbfp(const text& t) {
  if (t.empty()) throw std::invalid_argument("snlbfp: empty text");
  const std::size_t n = t.size();
  const auto fac = cfl_factorize(t);
  const symbol gamma = t[0];

  // Binary search for the first factor whose first letter is strictly
  // below gamma; factor first letters are non-increasing.
  std::size_t lo = 0, hi = fac.factors.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (t[fac.factors[mid].start] >= gamma)
      lo = mid + 1;
    else
      hi = mid;
  }
  std::optional<std::size_t> witness;
  if (lo < fac.factors.size()) witness = lo;

  // Maximal prefix p whose factors all start with gamma; the border array of
  // p is a prefix of the border array of t.
  const std::size_t p_len = witness ? fac.factors[*witness].start : n;
  const auto beta = border_array(t);

  const std::size_t first_factor_end = fac.factors[0].len;
  for (std::size_t len = first_factor_end + 1; len <= p_len; ++len)
    if (beta[len - 1] == 0) return {len, witness};

  if (witness) return {p_len + 1, witness};
  return {std::nullopt, std::nullopt};
}

/// Per-prefix Lyndon flags: flags[i] is true iff the prefix of length i+1 is
/// a Lyndon word. A prefix is Lyndon exactly when it is border-free and
/// shorter than the shortest non-Lyndon border-free prefix, so the whole
/// array costs one border array plus one snlbfp run. A precomputed snlbfp
/// length may be passed in (use n+1 for "none exists").
inline std::vector<bool> psi_array(const text& t,
                                   std::optional<std::size_t> snlbfp_len = std::nullopt) {
  if (t.empty()) throw std::invalid_argument("psi_array: empty text");
  const std::size_t n = t.size();
  const std::size_t r =
      snlbfp_len ? *snlbfp_len : snlbfp(t).prefix_len.value_or(n + 1);
  const auto beta = border_array(t);
  std::vector<bool> flags(n, false);
  for (std::size_t i = 0; i < n; ++i)
    flags[i] = beta[i] == 0 && i + 1 < r;
  return flags;
}

}  // namespace lyndon
