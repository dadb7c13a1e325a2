// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lyndon/duval.hpp"
#include "lyndon/factorization.hpp"
#include "lyndon/text.hpp"

namespace lyndon {

/// Thrown when a binary-alphabet routine sees more than two distinct symbols.
struct alphabet_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// One maximal run: `count` consecutive copies of `sym`.
struct rle_run {
  symbol sym = 0;
  std::size_t count = 0;
  friend bool operator==(const rle_run&, const rle_run&) = default;
};

/// Run-length encoding; adjacent runs carry distinct symbols and expansion
/// reproduces the source text exactly.
struct rle_runs {
  std::vector<rle_run> runs;
  friend bool operator==(const rle_runs&, const rle_runs&) = default;
};

/// The two run-exponent subsequences of a binary string: counts of the
/// smaller symbol's runs and of the larger symbol's runs, in text order.
/// They interleave back into the full exponent list.
struct projected_encoding {
  std::vector<std::size_t> a_exponents;
  std::vector<std::size_t> b_exponents;
};

namespace detail {

struct binary_roles {
  symbol lo = 0;
  symbol hi = 0;
  std::size_t distinct = 0;  // 0, 1 or 2
};

/// Identify which of the (at most two) symbols plays the small letter and
/// which the large one. More than two distinct symbols is an error.
inline binary_roles classify_binary(const text& t, const char* who) {
  binary_roles r;
  bool seen[256] = {};
  for (std::size_t i = 0; i < t.size(); ++i) {
    const symbol s = t[i];
    if (!seen[s]) {
      seen[s] = true;
      ++r.distinct;
      if (r.distinct > 2)
        throw alphabet_error(std::string(who) + ": more than two distinct symbols");
      if (r.distinct == 1) {
        r.lo = r.hi = s;
      } else {
        r.lo = std::min(r.lo, s);
        r.hi = std::max(r.hi, s);
      }
    }
  }
  return r;
}

struct iota_seq {
  std::size_t operator[](std::size_t i) const { return i; }
};

}  // namespace detail

/// Maximal-run encoding of a binary string (at most two distinct symbols).
inline rle_runs rle(const text& t) {
  detail::classify_binary(t, "rle");
  rle_runs out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!out.runs.empty() && out.runs.back().sym == t[i])
      ++out.runs.back().count;
    else
      out.runs.push_back({t[i], 1});
  }
  return out;
}

/// Inverse of rle().
inline text expand(const rle_runs& r) {
  std::string s;
  for (const auto& run : r.runs) s.append(run.count, static_cast<char>(run.sym));
  return text(std::move(s));
}

/// The exponent list: run counts in text order.
inline std::vector<std::size_t> exponent_list(const rle_runs& r) {
  std::vector<std::size_t> out;
  out.reserve(r.runs.size());
  for (const auto& run : r.runs) out.push_back(run.count);
  return out;
}

/// Split the exponent list into the small-symbol and large-symbol
/// subsequences.
inline projected_encoding project(const rle_runs& r) {
  projected_encoding out;
  if (r.runs.empty()) return out;
  symbol lo = r.runs.front().sym;
  for (const auto& run : r.runs) lo = std::min(lo, run.sym);
  for (const auto& run : r.runs)
    (run.sym == lo ? out.a_exponents : out.b_exponents).push_back(run.count);
  return out;
}

/// Lyndon test for a binary string through its run exponents. A word of
/// length >= 2 must start with the small letter and end with the large one.
/// Given that shape, group the runs into (small-run, large-run) pairs and
/// order pairs by the double order: longer small-run first, ties decided by
/// shorter large-run first. The word is Lyndon iff its pair sequence is a
/// Lyndon word under that order, tested by one Duval scan. A tie between
/// small-run exponents must defer to the large-run exponents of the same
/// pair immediately: the text comparison reaches those symbols before any
/// later small-run difference.
inline bool binary_is_lyndon(const text& t) {
  if (t.empty()) throw std::invalid_argument("binary_is_lyndon: empty text");
  const auto roles = detail::classify_binary(t, "binary_is_lyndon");
  const std::size_t n = t.size();
  if (n == 1) return true;
  if (roles.distinct < 2) return false;  // x^n, n >= 2
  if (t[0] != roles.lo || t[n - 1] != roles.hi) return false;

  std::vector<std::size_t> a_exp, b_exp;
  for (std::size_t i = 0; i < n;) {
    std::size_t p = 0, q = 0;
    while (i < n && t[i] == roles.lo) ++p, ++i;
    while (i < n && t[i] == roles.hi) ++q, ++i;
    a_exp.push_back(p);
    b_exp.push_back(q);
  }
  const std::size_t m = a_exp.size();
  const auto pair_less = [&](std::size_t x, std::size_t y) {
    if (a_exp[x] != a_exp[y]) return a_exp[x] > a_exp[y];
    return b_exp[x] < b_exp[y];
  };
  return detail::longest_lyndon_prefix(detail::iota_seq{}, m, pair_less) == m;
}

/// Per-prefix Lyndon flags for a binary string, from the run structure
/// alone. Maintains the run exponents incrementally together with a Duval
/// scan over (small-run, large-run) pair letters; a prefix ending inside a
/// large-symbol run is Lyndon exactly when its pair sequence is Lyndon
/// under the order "longer small-run first, then shorter large-run first".
/// O(1) amortized per position.
inline std::vector<bool> binary_psi(const text& t) {
  if (t.empty()) throw std::invalid_argument("binary_psi: empty text");
  const auto roles = detail::classify_binary(t, "binary_psi");
  const std::size_t n = t.size();
  std::vector<bool> psi(n, false);
  psi[0] = true;  // a single letter is always Lyndon
  if (n == 1 || roles.distinct < 2 || t[0] == roles.hi) return psi;

  std::vector<std::size_t> pair_a, pair_b;  // committed pair letters
  std::size_t committed = 0, period = 1;
  bool closed = false;  // a committed pair compared below its reference:
                        // no later prefix can be Lyndon

  std::size_t i = 0;
  std::size_t p = 0;
  while (i < n && t[i] == roles.lo) ++p, ++i;
  while (i < n) {
    std::size_t c = 0;
    while (i < n && t[i] == roles.hi) {
      ++c;
      if (closed) {
        psi[i] = false;
      } else if (committed == 0) {
        psi[i] = true;  // a^p b^c is always Lyndon
      } else {
        const std::size_t ref = committed - period;
        // The growing pair (p, c) must compare strictly above its
        // reference for the whole prefix to be Lyndon; a tie means the
        // prefix is periodic at the pair level, hence bordered.
        psi[i] = p < pair_a[ref] || (p == pair_a[ref] && c > pair_b[ref]);
      }
      ++i;
    }
    if (!closed && committed > 0) {
      const std::size_t ref = committed - period;
      if (p == pair_a[ref] && c == pair_b[ref]) {
        // period extends
      } else if (p < pair_a[ref] || (p == pair_a[ref] && c > pair_b[ref])) {
        period = committed + 1;
      } else {
        closed = true;
      }
    }
    pair_a.push_back(p);
    pair_b.push_back(c);
    ++committed;
    p = 0;
    while (i < n && t[i] == roles.lo) ++p, ++i;
  }
  return psi;
}

/// Chen-Fox-Lyndon factorization of a binary string from its run structure:
/// leading large-symbol runs and the trailing small-symbol run split into
/// unit-letter factors, and the remainder factorizes by one Duval pass over
/// (small-run, large-run) pair letters, i.e. small-letter exponents under
/// the reversed order with ties refined by large-letter exponents under the
/// natural order. Equals cfl_factorize on every binary input.
inline factorization binary_cfl(const text& t) {
  if (t.empty()) throw std::invalid_argument("binary_cfl: empty text");
  const auto roles = detail::classify_binary(t, "binary_cfl");
  const std::size_t n = t.size();
  factorization out;

  std::size_t pos = 0;
  if (roles.distinct < 2) {  // x^n: n unit factors
    for (; pos < n; ++pos) out.factors.push_back({pos, 1});
    return out;
  }

  while (pos < n && t[pos] == roles.hi) out.factors.push_back({pos++, 1});

  std::size_t tail = n;
  while (tail > pos && t[tail - 1] == roles.lo) --tail;

  // Middle part [pos, tail) starts with lo and ends with hi.
  if (pos < tail) {
    std::vector<std::size_t> pair_a, pair_b, chunk_start;
    for (std::size_t i = pos; i < tail;) {
      chunk_start.push_back(i);
      std::size_t p = 0, q = 0;
      while (i < tail && t[i] == roles.lo) ++p, ++i;
      while (i < tail && t[i] == roles.hi) ++q, ++i;
      pair_a.push_back(p);
      pair_b.push_back(q);
    }
    chunk_start.push_back(tail);
    const auto pair_less = [&](std::size_t x, std::size_t y) {
      if (pair_a[x] != pair_a[y]) return pair_a[x] > pair_a[y];
      return pair_b[x] < pair_b[y];
    };
    detail::duval_factorize(detail::iota_seq{}, pair_a.size(), pair_less,
                            [&](std::size_t start, std::size_t len) {
                              out.factors.push_back(
                                  {chunk_start[start],
                                   chunk_start[start + len] - chunk_start[start]});
                            });
  }

  for (std::size_t i = tail; i < n; ++i) out.factors.push_back({i, 1});
  return out;
}

/// Sufficient Lyndon conditions readable directly off the run exponents:
/// a single small-run/large-run pair is always Lyndon, and so is any word
/// whose leading small-run is strictly longer than every later one. Returns
/// the verdict when one of those cases applies, nothing otherwise.
inline std::optional<bool> rle_lyndon_quick_check(const rle_runs& r) {
  if (r.runs.empty()) return std::nullopt;
  symbol lo = r.runs.front().sym, hi = lo;
  for (const auto& run : r.runs) {
    lo = std::min(lo, run.sym);
    hi = std::max(hi, run.sym);
  }
  if (lo == hi) return std::nullopt;
  if (r.runs.front().sym != lo || r.runs.back().sym != hi) return std::nullopt;
  if (r.runs.size() == 2) return true;  // a^p b^q
  const std::size_t head = r.runs.front().count;
  bool head_strictly_longest = true;
  for (std::size_t i = 2; i < r.runs.size(); i += 2)
    if (r.runs[i].count >= head) head_strictly_longest = false;
  if (head_strictly_longest) return true;
  return std::nullopt;
}

}  // namespace lyndon
