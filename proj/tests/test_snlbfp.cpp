// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <optional>
#include <random>
#include <string_view>

#include "lyndon/oracle.hpp"
#include "lyndon/snlbfp.hpp"
#include "support/corpus.hpp"

using namespace lyndon;

TEST_SUITE("snlbfp") {

TEST_CASE("examples") {
  const auto r1 = snlbfp(text("abaabaaabbaabaab"));
  CHECK(r1.prefix_len == 10);
  CHECK_FALSE(r1.witness_factor.has_value());  // every factor starts with 'a'

  const auto r2 = snlbfp(text("ba"));
  CHECK(r2.prefix_len == 2);
  CHECK(r2.witness_factor == 1);  // the unit factor "a"

  const auto r3 = snlbfp(text("abaab"));
  CHECK_FALSE(r3.prefix_len.has_value());
  CHECK_FALSE(r3.witness_factor.has_value());

  CHECK_THROWS_AS(snlbfp(text("")), std::invalid_argument);
}

TEST_CASE("agrees with the brute-force scan") {
  std::size_t mismatches = 0;
  corpus::for_each_string(2, 16, [&](std::string_view s) {
    const text t(s);
    if (snlbfp(t).prefix_len != oracle::snlbfp_length(t)) ++mismatches;
  });
  std::mt19937 rng(99);
  for (int iter = 0; iter < 1000; ++iter) {
    const text t(corpus::random_string(rng, 300, 3));
    if (snlbfp(t).prefix_len != oracle::snlbfp_length(t)) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("result separates Lyndon from non-Lyndon border-free prefixes") {
  std::size_t violations = 0;
  corpus::for_each_string(2, 12, [&](std::string_view s) {
    const text t(s);
    const auto beta = oracle::border_array(t);
    const std::size_t r = snlbfp(t).prefix_len.value_or(s.size() + 1);
    for (std::size_t len = 1; len <= s.size(); ++len) {
      if (beta[len - 1] != 0) continue;
      if ((len < r) != oracle::is_lyndon(text(s.substr(0, len)))) ++violations;
    }
  });
  CHECK(violations == 0);
}

TEST_CASE("result always lies past the first factor") {
  std::size_t violations = 0;
  corpus::for_each_string(3, 9, [&](std::string_view s) {
    const text t(s);
    const auto r = snlbfp(t);
    if (r.prefix_len && *r.prefix_len <= cfl_factorize(t).factors.front().len)
      ++violations;
  });
  CHECK(violations == 0);
}

}  // TEST_SUITE
