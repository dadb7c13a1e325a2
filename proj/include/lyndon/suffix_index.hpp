// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "lyndon/text.hpp"

namespace lyndon {

namespace detail {

// SA-IS on s[0..n) over alphabet [0, sigma). s must end with a unique,
// minimal sentinel (s[n-1] == 0, appearing nowhere else). The returned sa
// includes the sentinel suffix at sa[0].
inline void sais_core(const std::vector<std::int32_t>& s,
                      std::vector<std::int32_t>& sa, std::int32_t sigma) {
  const std::int32_t n = static_cast<std::int32_t>(s.size());
  sa.assign(static_cast<std::size_t>(n), -1);
  if (n == 1) {
    sa[0] = 0;
    return;
  }

  std::vector<bool> stype(static_cast<std::size_t>(n));
  stype[n - 1] = true;
  for (std::int32_t i = n - 2; i >= 0; --i)
    stype[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1]);
  const auto is_lms = [&](std::int32_t i) {
    return i > 0 && stype[i] && !stype[i - 1];
  };

  std::vector<std::int32_t> count(sigma, 0);
  for (const std::int32_t v : s) ++count[v];
  std::vector<std::int32_t> bucket(sigma);
  const auto reset_heads = [&] {
    std::int32_t sum = 0;
    for (std::int32_t c = 0; c < sigma; ++c) {
      bucket[c] = sum;
      sum += count[c];
    }
  };
  const auto reset_tails = [&] {
    std::int32_t sum = 0;
    for (std::int32_t c = 0; c < sigma; ++c) {
      sum += count[c];
      bucket[c] = sum;
    }
  };

  const auto induce = [&] {
    reset_heads();
    for (std::int32_t i = 0; i < n; ++i) {
      const std::int32_t j = sa[i];
      if (j > 0 && !stype[j - 1]) sa[bucket[s[j - 1]]++] = j - 1;
    }
    reset_tails();
    for (std::int32_t i = n - 1; i >= 0; --i) {
      const std::int32_t j = sa[i];
      if (j > 0 && stype[j - 1]) sa[--bucket[s[j - 1]]] = j - 1;
    }
  };

  // Sort the LMS substrings by one placement + induction round.
  reset_tails();
  for (std::int32_t i = 1; i < n; ++i)
    if (is_lms(i)) sa[--bucket[s[i]]] = i;
  induce();

  std::int32_t nlms = 0;
  for (std::int32_t i = 0; i < n; ++i)
    if (is_lms(sa[i])) sa[nlms++] = sa[i];

  // Name the sorted LMS substrings; equal substrings share a name. The
  // scratch area sa[nlms..n) is keyed by position/2 (LMS positions are
  // never adjacent).
  std::fill(sa.begin() + nlms, sa.end(), -1);
  const auto lms_equal = [&](std::int32_t a, std::int32_t b) {
    if (s[a] != s[b]) return false;
    for (std::int32_t i = 1;; ++i) {
      const bool alms = is_lms(a + i), blms = is_lms(b + i);
      if (s[a + i] != s[b + i] || alms != blms) return false;
      if (alms) return true;
    }
  };
  std::int32_t names = 0;
  std::int32_t prev = -1;
  for (std::int32_t k = 0; k < nlms; ++k) {
    const std::int32_t p = sa[k];
    if (prev >= 0 && !lms_equal(prev, p)) ++names;
    sa[nlms + p / 2] = names;
    prev = p;
  }
  ++names;

  std::vector<std::int32_t> reduced(nlms), lms_pos(nlms);
  {
    std::int32_t w = 0;
    for (std::int32_t i = 1; i < n; ++i)
      if (is_lms(i)) {
        lms_pos[w] = i;
        reduced[w] = sa[nlms + i / 2];
        ++w;
      }
  }

  std::vector<std::int32_t> sa1;
  if (names < nlms) {
    sais_core(reduced, sa1, names);
  } else {
    sa1.assign(nlms, 0);
    for (std::int32_t k = 0; k < nlms; ++k) sa1[reduced[k]] = k;
  }

  // Final round: seed the buckets with the fully sorted LMS suffixes.
  std::fill(sa.begin(), sa.end(), -1);
  reset_tails();
  for (std::int32_t k = nlms - 1; k >= 0; --k) {
    const std::int32_t p = lms_pos[sa1[k]];
    sa[--bucket[s[p]]] = p;
  }
  induce();
}

}  // namespace detail

/// Suffix array: order[k] is the start position of the k-th smallest
/// suffix. SA-IS construction, worst-case linear for byte alphabets. A
/// unique minimal sentinel is appended internally and never appears in the
/// output.
inline std::vector<std::size_t> suffix_array(const text& t) {
  if (t.empty()) throw std::invalid_argument("suffix_array: empty text");
  const std::size_t n = t.size();
  if (n > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max()) - 2)
    throw std::length_error("suffix_array: input too large");
  std::vector<std::int32_t> s(n + 1);
  for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<std::int32_t>(t[i]) + 1;
  s[n] = 0;
  std::vector<std::int32_t> sa;
  detail::sais_core(s, sa, 257);
  std::vector<std::size_t> order(n);
  for (std::size_t k = 1; k <= n; ++k)
    order[k - 1] = static_cast<std::size_t>(sa[k]);
  return order;
}

/// Inverse permutation of a suffix array: rank[order[k]] = k.
inline std::vector<std::size_t> rank_array(const std::vector<std::size_t>& order) {
  std::vector<std::size_t> rank(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;
  return rank;
}

enum class suffix_type : char { S = 'S', L = 'L' };

/// S/L classification: position i is S when suffix i is smaller than suffix
/// i+1, L when larger; equal leading symbols inherit the successor's type.
/// The last suffix is marked S by convention, but an equal symbol just
/// before it compares L (the shorter suffix is a proper prefix), so the
/// inherited chain starts from L there. One right-to-left pass.
inline std::vector<suffix_type> suffix_types(const text& t) {
  if (t.empty()) throw std::invalid_argument("suffix_types: empty text");
  const std::size_t n = t.size();
  std::vector<suffix_type> types(n, suffix_type::S);
  for (std::size_t i = n - 1; i-- > 0;) {
    if (t[i] < t[i + 1])
      types[i] = suffix_type::S;
    else if (t[i] > t[i + 1])
      types[i] = suffix_type::L;
    else
      types[i] = i + 1 == n - 1 ? suffix_type::L : types[i + 1];
  }
  return types;
}

/// Sparse table answering max-value (and argmax) queries over a static
/// array of distinct values in O(1) after O(n log n) preprocessing.
class range_max_index {
 public:
  struct result {
    std::size_t value;
    std::size_t index;
    friend bool operator==(const result&, const result&) = default;
  };

  explicit range_max_index(std::vector<std::size_t> values)
      : values_(std::move(values)) {
    const std::size_t n = values_.size();
    const std::size_t levels = n == 0 ? 1 : std::bit_width(n);
    argmax_.resize(levels);
    argmax_[0].resize(n);
    for (std::size_t i = 0; i < n; ++i) argmax_[0][i] = i;
    for (std::size_t l = 1; l < levels; ++l) {
      const std::size_t half = std::size_t{1} << (l - 1);
      argmax_[l].resize(n - (half << 1) + 1);
      for (std::size_t i = 0; i + (half << 1) <= n; ++i) {
        const std::size_t a = argmax_[l - 1][i], b = argmax_[l - 1][i + half];
        argmax_[l][i] = values_[a] >= values_[b] ? a : b;
      }
    }
  }

  std::size_t size() const noexcept { return values_.size(); }

  /// Maximum of values[lo..hi) and the index attaining it.
  result query(std::size_t lo, std::size_t hi) const {
    if (lo >= hi || hi > values_.size())
      throw std::out_of_range("range_max_index: empty or invalid range");
    const std::size_t l = std::bit_width(hi - lo) - 1;
    const std::size_t a = argmax_[l][lo];
    const std::size_t b = argmax_[l][hi - (std::size_t{1} << l)];
    const std::size_t best = values_[a] >= values_[b] ? a : b;
    return {values_[best], best};
  }

 private:
  std::vector<std::size_t> values_;
  std::vector<std::vector<std::size_t>> argmax_;
};

inline range_max_index::result range_max(const range_max_index& idx,
                                         std::size_t lo, std::size_t hi) {
  return idx.query(lo, hi);
}

/// Lyndon suffix array via repeated range-maximum extraction: querying the
/// largest order value over a shrinking prefix of the suffix array emits
/// the Lyndon suffixes in reverse lexicographic order. A suffix emitted
/// this way is smaller than every suffix that starts after it, hence a
/// Lyndon word.
inline std::vector<std::size_t> lyndon_suffix_array_rmq(const text& t) {
  const auto order = suffix_array(t);
  const range_max_index idx(order);
  std::vector<std::size_t> out;
  std::size_t hi = order.size();
  while (hi > 0) {
    const auto m = idx.query(0, hi);
    out.push_back(m.value);
    hi = m.index;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

/// Lyndon suffix array via one right-to-left pass over the rank array:
/// position j qualifies exactly when its rank is below every rank to its
/// right. Output is identical to the range-maximum variant.
inline std::vector<std::size_t> lyndon_suffix_array_scan(const text& t) {
  const auto rank = rank_array(suffix_array(t));
  const std::size_t n = rank.size();
  std::vector<std::size_t> out;
  std::size_t min_rank = n;  // ranks are < n
  for (std::size_t j = n; j-- > 0;) {
    if (rank[j] < min_rank) {
      out.push_back(j);
      min_rank = rank[j];
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace lyndon
