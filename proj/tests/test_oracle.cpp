#include "checks.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "scd/engine.hpp"
#include "scd/oracle.hpp"

using namespace scd;

TEST_SUITE("oracle") {

TEST_CASE("burnside examples") {
  CHECK(burnside_count(2, 6) == 14);
  CHECK(burnside_count(3, 3) == 11);
  for (std::uint64_t n = 1; n <= 20; ++n) CHECK(burnside_count(1, n) == 1);
  CHECK(burnside_count(4, 4) == 70);
  // 2^70 / 70 still fits in 64 bits; 2^80 / 80 does not.
  CHECK(burnside_count(2, 70).has_value());
  CHECK_FALSE(burnside_count(2, 80).has_value());
  CHECK_FALSE(burnside_count(1ull << 32, 3).has_value());
}

TEST_CASE("burnside agrees with enumeration and the rotation average") {
  for (std::uint64_t k = 1; k <= 4; ++k) {
    for (std::uint64_t n = 1; n <= 12; ++n) {
      const auto count = burnside_count(k, n);
      REQUIRE(count.has_value());
      CHECK(*count == enumerate_necklaces(static_cast<Label>(k), n).size());
      CHECK(*count == ref::burnside_by_rotations(k, n));
    }
  }
}

TEST_CASE("rank census") {
  const auto q = build_power_quotient(chain_poset(2), 6);
  const auto c = rank_census(q.poset);
  CHECK(c.to_text() == "0:1 1:1 2:3 3:4 4:3 5:1 6:1");
  CHECK(c.total() == 14);
  CHECK(c.max_level() == 4);
  CHECK(c.palindromic(6));
  CHECK_FALSE(c.palindromic(5));
}

TEST_CASE("naive quotient examples") {
  const auto q4 = naive_quotient(chain_poset(2), 4);
  CHECK(q4.poset.size() == 6);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = ref::random_ranked(rng, 3, 3);
    const auto q1 = naive_quotient(p, 1);
    CHECK(q1.poset.size() == p.size());
    CHECK(q1.poset.covers().size() == p.covers().size());
  }
  CHECK(ref::error_of([] { naive_quotient(chain_poset(10), 8); }) == ErrorCode::SizeLimitExceeded);
}

TEST_CASE("naive and generated quotients agree") {
  const std::vector<std::size_t> sq{2, 2};
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& p : {chain_poset(2), chain_poset(3), grid_poset(sq)}) {
      const auto r = checks::check_agreement(p, n);
      CHECK_MESSAGE(r.ok, r.detail);
    }
  }
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = ref::random_ranked(rng, 3, 2, 0, 0.6);
    for (std::size_t n = 2; n <= 4; ++n) {
      if (std::pow(p.size(), n) > 5000) break;
      const auto r = checks::check_agreement(p, n);
      CHECK_MESSAGE(r.ok, r.detail);
    }
  }
}

TEST_CASE("exhaustive search") {
  for (std::size_t k = 1; k <= 6; ++k) {
    const auto found = exhaustive_scd_search(chain_poset(k));
    REQUIRE(found.has_value());
    CHECK(found->chains.size() == 1);
    CHECK(found->chains[0].size() == k);
  }
  const std::vector<std::size_t> sq{2, 2};
  const auto grid = exhaustive_scd_search(grid_poset(sq));
  REQUIRE(grid.has_value());
  CHECK(grid->chains.size() == 2);
  CHECK(verify_scd(grid_poset(sq), *grid).ok());

  const auto vee = RankedPoset::validate(3, {{0, 1}, {0, 2}}, {0, 1, 1});
  CHECK_FALSE(exhaustive_scd_search(vee).has_value());

  CHECK(ref::error_of([] { exhaustive_scd_search(chain_poset(40)); }) ==
        ErrorCode::SizeLimitExceeded);
}

TEST_CASE("search results always verify") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = ref::random_ranked(rng, 4, 3, 0, 0.5);
    const auto found = exhaustive_scd_search(p);
    if (found) CHECK(verify_scd(p, *found).ok());
  }
  for (int trial = 0; trial < 50; ++trial) {
    const auto sco = ref::random_sco(rng, 4, 4, 0.3);
    const auto found = exhaustive_scd_search(sco.poset);
    REQUIRE(found.has_value());
    CHECK(found->chains.size() == sco.scd.chains.size());
  }
}

}  // TEST_SUITE
