// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "lyndon/border.hpp"
#include "lyndon/duval.hpp"
#include "lyndon/factorization.hpp"
#include "lyndon/text.hpp"

namespace lyndon {

namespace detail {
inline bool byte_less(symbol a, symbol b) { return a < b; }

struct byte_seq {
  std::string_view v;
  symbol operator[](std::size_t i) const { return static_cast<symbol>(v[i]); }
};
}  // namespace detail

/// True iff t is strictly smaller than every nonempty proper suffix;
/// equivalently, t is primitive and minimal in its conjugacy class.
inline bool is_lyndon(const text& t) {
  if (t.empty()) throw std::invalid_argument("is_lyndon: empty text");
  return detail::longest_lyndon_prefix(detail::byte_seq{t.view()}, t.size(),
                                       detail::byte_less) == t.size();
}

/// Chen-Fox-Lyndon factorization: the unique decomposition into a
/// non-increasing product of Lyndon words. Duval's method, linear time.
inline factorization cfl_factorize(const text& t) {
  if (t.empty()) throw std::invalid_argument("cfl_factorize: empty text");
  factorization out;
  detail::duval_factorize(detail::byte_seq{t.view()}, t.size(), detail::byte_less,
                          [&](std::size_t start, std::size_t len) {
                            out.factors.push_back({start, len});
                          });
  return out;
}

/// Standard factorization of a Lyndon word of length >= 2: the split t = uv
/// where v is the longest proper suffix that is itself a Lyndon word. Both
/// halves are Lyndon and u < v. The longest Lyndon proper suffix is the
/// lexicographically smallest proper suffix, i.e. the last Chen-Fox-Lyndon
/// factor of t[1..n).
inline std::pair<text, text> standard_factorization(const text& t) {
  if (t.size() < 2 || !is_lyndon(t))
    throw std::domain_error("standard_factorization: requires a Lyndon word of length >= 2");
  std::size_t last_start = 1;
  detail::duval_factorize(detail::byte_seq{t.suffix(1)}, t.size() - 1, detail::byte_less,
                          [&](std::size_t start, std::size_t) { last_start = 1 + start; });
  return {text(t.prefix(last_start)), text(t.suffix(last_start))};
}

/// For a border-free word of length >= 2 that is not Lyndon, no right
/// extension is Lyndon either. Returns true exactly when t is such a dead
/// end. Requires border(t) == 0.
inline bool lfail_borderfree(const text& t) {
  if (t.size() < 2) throw std::invalid_argument("lfail_borderfree: length must be >= 2");
  const auto beta = border_array(t);
  if (beta[t.size() - 1] != 0)
    throw std::invalid_argument("lfail_borderfree: text must be border-free");
  return !is_lyndon(t);
}

/// For a bordered word, appending next_symbol kills all Lyndon extensions
/// when next_symbol is smaller than the symbol following the border's copy
/// at the front, i.e. t[border(t)]. Sufficient, not necessary: false does
/// not promise that some extension is Lyndon.
inline bool lfail_bordered(const text& t, symbol next_symbol) {
  if (t.size() < 2) throw std::invalid_argument("lfail_bordered: length must be >= 2");
  const auto beta = border_array(t);
  const std::size_t b = beta[t.size() - 1];
  if (b == 0) throw std::invalid_argument("lfail_bordered: text must be bordered");
  return next_symbol < t[b];
}

}  // namespace lyndon
