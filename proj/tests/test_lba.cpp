// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>
#include <string_view>
#include <vector>

#include "lyndon/lyndon_border_array.hpp"
#include "lyndon/oracle.hpp"
#include "support/corpus.hpp"

using namespace lyndon;
using size_vec = std::vector<std::size_t>;

namespace {

// fast == reference, traversal bound, and the nested-border invariant
std::size_t check_one(const text& t) {
  std::size_t violations = 0;
  lba_stats stats;
  const auto fast = lyndon_border_array_efficient(t, &stats);
  const auto ref = oracle::lyndon_border_array(t);
  if (fast != ref) ++violations;
  if (lyndon_border_array_naive(t) != ref) ++violations;
  if (stats.chain_links_traversed > t.size()) ++violations;
  for (std::size_t i = 0; i < fast.size(); ++i)
    if (fast[i] > 0 && fast[fast[i] - 1] != 0) ++violations;
  return violations;
}

}  // namespace

TEST_SUITE("lba") {

TEST_CASE("values on the running example") {
  const size_vec expected{0, 0, 1, 1, 2, 1, 1, 1, 2, 0, 1, 1, 2, 1, 1, 2};
  CHECK(lyndon_border_array_naive(text("abaabaaabbaabaab")) == expected);
  CHECK(lyndon_border_array_efficient(text("abaabaaabbaabaab")) == expected);
}

TEST_CASE("small cases") {
  CHECK(lyndon_border_array_naive(text("aaa")) == size_vec{0, 1, 1});
  CHECK(lyndon_border_array_naive(text("b")) == size_vec{0});
  CHECK(lyndon_border_array_efficient(text("aaaa")) == size_vec{0, 1, 1, 1});
  CHECK(lyndon_border_array_efficient(text("ba")) == size_vec{0, 0});
  CHECK_THROWS_AS(lyndon_border_array_naive(text("")), std::invalid_argument);
  CHECK_THROWS_AS(lyndon_border_array_efficient(text("")), std::invalid_argument);
}

TEST_CASE("exhaustive equivalence, binary up to 16") {
  std::size_t violations = 0;
  corpus::for_each_string(2, 16, [&](std::string_view s) { violations += check_one(text(s)); });
  CHECK(violations == 0);
}

TEST_CASE("exhaustive equivalence, ternary up to 10") {
  std::size_t violations = 0;
  corpus::for_each_string(3, 10, [&](std::string_view s) { violations += check_one(text(s)); });
  CHECK(violations == 0);
}

TEST_CASE("random byte strings up to 500") {
  std::mt19937 rng(2024);
  std::size_t violations = 0;
  for (int iter = 0; iter < 1000; ++iter)
    violations += check_one(text(corpus::random_string(rng, 500, 256)));
  CHECK(violations == 0);
}

}  // TEST_SUITE
