// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

namespace lyndon::detail {

// Duval's factorization engine, parameterized by the element order. `seq`
// needs operator[]; `less` is a strict weak order on elements. The same
// engine drives byte strings, exponent lists under the reversed integer
// order, and run-pair sequences.

/// Length of the longest prefix of seq[0..n) that is a Lyndon word
/// under `less`. Returns 0 only when n == 0.
template <typename Seq, typename Less>
std::size_t longest_lyndon_prefix(const Seq& seq, std::size_t n, Less less) {
  if (n == 0) return 0;
  std::size_t i = 0, j = 1;
  while (j < n && !less(seq[j], seq[i])) {
    i = less(seq[i], seq[j]) ? 0 : i + 1;
    ++j;
  }
  return j - i;
}

/// Full Chen-Fox-Lyndon factorization under `less`; calls emit(start, len)
/// once per factor, left to right. Repeated factors are emitted separately.
template <typename Seq, typename Less, typename Emit>
void duval_factorize(const Seq& seq, std::size_t n, Less less, Emit emit) {
  std::size_t k = 0;
  while (k < n) {
    std::size_t i = k, j = k + 1;
    while (j < n && !less(seq[j], seq[i])) {
      i = less(seq[i], seq[j]) ? k : i + 1;
      ++j;
    }
    const std::size_t period = j - i;
    while (k <= i) {
      emit(k, period);
      k += period;
    }
  }
}

}  // namespace lyndon::detail
