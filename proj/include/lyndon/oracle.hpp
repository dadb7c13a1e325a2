// SPDX-License-Identifier: Apache-2.0
#pragma once

// Brute-force reference implementations, written from the definitions and
// deliberately independent of the fast paths they check. Obviousness over
// speed: quadratic and cubic behavior is accepted.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "lyndon/factorization.hpp"
#include "lyndon/text.hpp"

namespace lyndon::oracle {

/// Longest proper border of each prefix by direct prefix/suffix comparison.
inline std::vector<std::size_t> border_array(const text& t) {
  const std::size_t n = t.size();
  const std::string_view v = t.view();
  std::vector<std::size_t> beta(n, 0);
  for (std::size_t len = 1; len <= n; ++len) {
    for (std::size_t b = len; b-- > 1;) {
      if (v.substr(0, b) == v.substr(len - b, b)) {
        beta[len - 1] = b;
        break;
      }
    }
  }
  return beta;
}

/// Primitivity by trying every proper divisor as a period.
inline bool is_primitive(const text& t) {
  if (t.empty()) throw std::invalid_argument("oracle::is_primitive: empty text");
  const std::size_t n = t.size();
  const std::string_view v = t.view();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < n && repeats; ++i) repeats = v[i] == v[i - d];
    if (repeats) return false;
  }
  return true;
}

namespace detail {

/// Compare t against its rotation starting at k, without materializing it.
inline std::strong_ordering compare_with_rotation(std::string_view v, std::size_t k) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned char a = static_cast<unsigned char>(v[i]);
    const unsigned char b = static_cast<unsigned char>(v[(k + i) % n]);
    if (a != b) return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace detail

/// Lyndon test from both definitions: strictly smaller than every
/// nontrivial rotation and primitive, and strictly smaller than every
/// nonempty proper suffix. The two verdicts are computed independently and
/// must agree.
inline bool is_lyndon(const text& t) {
  if (t.empty()) throw std::invalid_argument("oracle::is_lyndon: empty text");
  const std::size_t n = t.size();
  const std::string_view v = t.view();

  bool rotation_form = oracle::is_primitive(t);
  for (std::size_t k = 1; k < n && rotation_form; ++k)
    rotation_form = detail::compare_with_rotation(v, k) == std::strong_ordering::less;

  bool suffix_form = true;
  for (std::size_t i = 1; i < n && suffix_form; ++i)
    suffix_form = v < v.substr(i);

  assert(rotation_form == suffix_form);
  return rotation_form && suffix_form;
}

/// Longest Lyndon border of each prefix: enumerate borders longest-first,
/// keep the first that passes the Lyndon test.
inline std::vector<std::size_t> lyndon_border_array(const text& t) {
  if (t.empty()) throw std::invalid_argument("oracle::lyndon_border_array: empty text");
  const std::size_t n = t.size();
  const std::string_view v = t.view();
  std::vector<std::size_t> lba(n, 0);
  for (std::size_t len = 1; len <= n; ++len) {
    for (std::size_t b = len; b-- > 1;) {
      if (v.substr(0, b) != v.substr(len - b, b)) continue;
      if (oracle::is_lyndon(text(v.substr(0, b)))) {
        lba[len - 1] = b;
        break;
      }
    }
  }
  return lba;
}

/// All suffix start positions whose suffixes are Lyndon words, sorted
/// lexicographically by suffix.
inline std::vector<std::size_t> lyndon_suffix_array(const text& t) {
  if (t.empty()) throw std::invalid_argument("oracle::lyndon_suffix_array: empty text");
  const std::string_view v = t.view();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (oracle::is_lyndon(text(v.substr(i)))) out.push_back(i);
  std::sort(out.begin(), out.end(),
            [&](std::size_t a, std::size_t b) { return v.substr(a) < v.substr(b); });
  return out;
}

/// Suffix array by sorting all suffixes.
inline std::vector<std::size_t> suffix_array(const text& t) {
  if (t.empty()) throw std::invalid_argument("oracle::suffix_array: empty text");
  const std::string_view v = t.view();
  std::vector<std::size_t> order(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return v.substr(a) < v.substr(b); });
  return order;
}

/// Factorization by repeatedly stripping the longest prefix that passes the
/// Lyndon test.
inline factorization cfl_factorize(const text& t) {
  if (t.empty()) throw std::invalid_argument("oracle::cfl_factorize: empty text");
  const std::string_view v = t.view();
  factorization out;
  std::size_t pos = 0;
  while (pos < v.size()) {
    std::size_t best = 1;
    for (std::size_t len = v.size() - pos; len >= 1; --len) {
      if (oracle::is_lyndon(text(v.substr(pos, len)))) {
        best = len;
        break;
      }
    }
    out.factors.push_back({pos, best});
    pos += best;
  }
  return out;
}

/// Shortest prefix length that is border-free and not Lyndon, by scanning
/// all prefixes against the definitions. Absent when none exists.
inline std::optional<std::size_t> snlbfp_length(const text& t) {
  if (t.empty()) throw std::invalid_argument("oracle::snlbfp_length: empty text");
  const auto beta = oracle::border_array(t);
  for (std::size_t len = 1; len <= t.size(); ++len) {
    if (beta[len - 1] != 0) continue;
    if (!oracle::is_lyndon(text(t.prefix(len)))) return len;
  }
  return std::nullopt;
}

}  // namespace lyndon::oracle
