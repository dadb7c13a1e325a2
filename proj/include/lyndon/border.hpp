// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "lyndon/text.hpp"

namespace lyndon {

/// Border array (Morris-Pratt failure function): values[i] is the length of
/// the longest proper border of the prefix of length i+1. Linear time.
inline std::vector<std::size_t> border_array(const text& t) {
  const std::size_t n = t.size();
  std::vector<std::size_t> beta(n, 0);
  std::size_t k = 0;  // border of the previous prefix
  for (std::size_t i = 1; i < n; ++i) {
    while (k > 0 && t[i] != t[k]) k = beta[k - 1];
    if (t[i] == t[k]) ++k;
    beta[i] = k;
  }
  return beta;
}

/// Chain of borders for the prefix of the given length: the strictly
/// decreasing sequence beta^1, beta^2, ..., ending in 0. The nonzero entries
/// enumerate every border of the prefix.
inline std::vector<std::size_t> border_chain(std::span<const std::size_t> beta,
                                             std::size_t prefix_len) {
  if (prefix_len == 0 || prefix_len > beta.size())
    throw std::out_of_range("border_chain: prefix length out of range");
  std::vector<std::size_t> chain;
  std::size_t b = beta[prefix_len - 1];
  chain.push_back(b);
  while (b != 0) {
    b = beta[b - 1];
    chain.push_back(b);
  }
  return chain;
}

/// The last nonzero value of a border chain (the shortest nonzero border).
/// Absent when the chain is just [0], i.e. the prefix is border-free.
inline std::optional<std::size_t> penultimate(std::span<const std::size_t> chain) {
  if (chain.size() < 2) return std::nullopt;
  return chain[chain.size() - 2];
}

/// True iff t is not an integer power u^k with k >= 2.
/// Uses per(t) + border(t) = |t|: t is a power iff its shortest period
/// divides |t| and is proper.
inline bool is_primitive(const text& t) {
  if (t.empty()) throw std::invalid_argument("is_primitive: empty text");
  const auto beta = border_array(t);
  const std::size_t n = t.size();
  const std::size_t period = n - beta[n - 1];
  return !(period < n && n % period == 0);
}

}  // namespace lyndon
