// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "lyndon/text.hpp"

namespace lyndon {

/// One factor of a factorization: a contiguous span of the source text.
struct factor_span {
  std::size_t start = 0;
  std::size_t len = 0;
  friend bool operator==(const factor_span&, const factor_span&) = default;
};

/// An ordered list of factor spans covering the text exactly, with no gaps
/// or overlaps. For Chen-Fox-Lyndon decompositions every factor is a Lyndon
/// word and factors are non-increasing in lexicographic order.
struct factorization {
  std::vector<factor_span> factors;
  friend bool operator==(const factorization&, const factorization&) = default;
};

/// View of one factor within its source text.
inline std::string_view factor_view(const text& t, const factor_span& f) {
  return t.view().substr(f.start, f.len);
}

}  // namespace lyndon
