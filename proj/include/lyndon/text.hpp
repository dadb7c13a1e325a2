// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cassert>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lyndon {

/// Alphabet symbol: a raw byte, ordered by its numeric value.
using symbol = unsigned char;

/// Immutable byte string. All positions are 0-based; a "prefix length" l
/// means the first l symbols, 0 <= l <= size().
class text {
 public:
  text() = default;
  explicit text(std::string bytes) : bytes_(std::move(bytes)) {}
  explicit text(std::string_view bytes) : bytes_(bytes) {}
  explicit text(const char* bytes) : bytes_(bytes) {}

  std::size_t size() const noexcept { return bytes_.size(); }
  bool empty() const noexcept { return bytes_.empty(); }

  symbol operator[](std::size_t i) const {
    assert(i < bytes_.size());
    return static_cast<symbol>(bytes_[i]);
  }

  std::string_view view() const noexcept { return bytes_; }

  /// The prefix of the given length as a view.
  std::string_view prefix(std::size_t len) const {
    assert(len <= bytes_.size());
    return std::string_view(bytes_).substr(0, len);
  }

  /// The suffix starting at the given position as a view.
  std::string_view suffix(std::size_t pos) const {
    assert(pos <= bytes_.size());
    return std::string_view(bytes_).substr(pos);
  }

  friend bool operator==(const text&, const text&) = default;
  friend std::strong_ordering operator<=>(const text& a, const text& b) {
    // char_traits::compare works on unsigned values, matching symbol order.
    return a.bytes_ <=> b.bytes_;
  }

 private:
  std::string bytes_;
};

/// Lexicographic comparison: proper prefixes compare less, otherwise the
/// first differing symbol decides.
inline std::strong_ordering lex_compare(const text& a, const text& b) {
  return a <=> b;
}

inline std::strong_ordering lex_compare(std::string_view a, std::string_view b) {
  const int c = a.compare(b);
  return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

/// Cyclic rotation: t[k..n) followed by t[0..k). Requires 0 <= k < n.
inline text rotation(const text& t, std::size_t k) {
  if (k >= t.size()) throw std::out_of_range("rotation: offset out of range");
  std::string out;
  out.reserve(t.size());
  out.append(t.view().substr(k));
  out.append(t.view().substr(0, k));
  return text(std::move(out));
}

}  // namespace lyndon
