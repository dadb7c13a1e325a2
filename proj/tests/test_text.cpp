// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "lyndon/text.hpp"
#include "support/corpus.hpp"

using namespace lyndon;

TEST_SUITE("text") {

TEST_CASE("lex_compare orders by prefix then first difference") {
  CHECK(lex_compare(text("a"), text("ab")) == std::strong_ordering::less);
  CHECK(lex_compare(text("ab"), text("ab")) == std::strong_ordering::equal);
  CHECK(lex_compare(text("aab"), text("ab")) == std::strong_ordering::less);
  CHECK(lex_compare(text(""), text("a")) == std::strong_ordering::less);
  // symbol order is the numeric byte order, not signed char order
  CHECK(lex_compare(text("\x7f"), text("\x80")) == std::strong_ordering::less);
}

TEST_CASE("rotation") {
  CHECK(rotation(text("abaab"), 0) == text("abaab"));
  CHECK(rotation(text("ab"), 1) == text("ba"));
  CHECK(rotation(text("abaab"), 2) == text("aabab"));
  CHECK_THROWS_AS(rotation(text("ab"), 2), std::out_of_range);
  CHECK_THROWS_AS(rotation(text(""), 0), std::out_of_range);
}

TEST_CASE("lex_compare is a total order on short binary strings") {
  std::vector<text> all;
  all.emplace_back("");
  corpus::for_each_string(2, 4, [&](std::string_view s) { all.emplace_back(s); });

  for (const auto& a : all) {
    for (const auto& b : all) {
      const auto ab = lex_compare(a, b);
      const auto ba = lex_compare(b, a);
      if (ab == std::strong_ordering::equal) {
        CHECK(a == b);
        CHECK(ba == std::strong_ordering::equal);
      } else {
        CHECK((ab == std::strong_ordering::less) == (ba == std::strong_ordering::greater));
      }
    }
  }
  std::size_t violations = 0;
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all)
        if (lex_compare(a, b) == std::strong_ordering::less &&
            lex_compare(b, c) == std::strong_ordering::less &&
            lex_compare(a, c) != std::strong_ordering::less)
          ++violations;
  CHECK(violations == 0);
}

TEST_CASE("rotations compose additively") {
  std::size_t violations = 0;
  corpus::for_each_string(2, 6, [&](std::string_view s) {
    const text t(s);
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rotation(rotation(t, i), j) != rotation(t, (i + j) % n)) ++violations;
  });
  CHECK(violations == 0);
}

}  // TEST_SUITE
