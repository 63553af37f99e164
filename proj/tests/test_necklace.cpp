#include <cmath>
#include <map>
#include <random>

#include "checks.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "scd/necklace.hpp"
#include "scd/oracle.hpp"

using namespace scd;

TEST_SUITE("necklace") {

TEST_CASE("canonical rotation examples") {
  CHECK(canonical_rotation(Word{1, 0, 0}) == std::pair{Word{0, 0, 1}, std::size_t{1}});
  CHECK(canonical_rotation(Word{0, 0, 0}) == std::pair{Word{0, 0, 0}, std::size_t{0}});
  CHECK(canonical_rotation(Word{2, 1, 0, 2, 1, 0}) ==
        std::pair{Word{0, 2, 1, 0, 2, 1}, std::size_t{2}});
  CHECK(ref::error_of([] { canonical_rotation(Word{}); }) == ErrorCode::EmptyWord);
}

TEST_CASE("period examples") {
  CHECK(period(Word{0, 1, 0, 1}) == 2);
  CHECK(period(Word{0, 0, 0}) == 1);
  CHECK(period(Word{0, 1, 1, 0, 1, 1}) == 3);
  CHECK(period(Word{0, 1, 1}) == 3);
}

TEST_CASE("canonical form and period agree with brute force on random words") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto n = static_cast<std::size_t>(1 + rng() % 12);
    const int k = 1 + static_cast<int>(rng() % 4);
    Word w = ref::random_word(rng, k, n);
    // Bias toward periodic words.
    if (rng() % 3 == 0 && n % 2 == 0) {
      for (std::size_t i = n / 2; i < n; ++i) w[i] = w[i - n / 2];
    }
    const auto [canon, shift] = canonical_rotation(w);
    CHECK(std::pair{canon, shift} == ref::min_rotation(w));
    CHECK(period(w) == ref::period(w));
    CHECK(canonical_word(canon) == canon);
    for (std::size_t s = 0; s < n; ++s) CHECK(canonical_word(ref::rotated(w, s)) == canon);
  }
}

TEST_CASE("enumeration examples") {
  const auto k2n3 = enumerate_necklaces(2, 3);
  std::vector<Word> words;
  for (const auto& x : k2n3) words.push_back(x.word);
  CHECK(words == std::vector<Word>{{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  CHECK(enumerate_necklaces(1, 5).size() == 1);
  CHECK(enumerate_necklaces(2, 6).size() == 14);
}

TEST_CASE("enumeration matches the brute-force orbit set") {
  for (int k = 1; k <= 4; ++k) {
    for (std::size_t n = 1; n <= 8; ++n) {
      if (std::pow(k, n) > 70000) continue;
      const auto brute = ref::necklaces(k, n);
      const auto fast = enumerate_necklaces(k, n);
      std::vector<Word> words;
      for (const auto& x : fast) {
        words.push_back(x.word);
        CHECK(x.period == ref::period(x.word));
      }
      CHECK(words == std::vector<Word>(brute.begin(), brute.end()));
    }
  }
}

TEST_CASE("period stratification") {
  for (int k = 2; k <= 3; ++k) {
    for (std::size_t n = 1; n <= 10; ++n) {
      std::map<std::size_t, std::size_t> by_period;
      for (const auto& x : enumerate_necklaces(k, n)) ++by_period[x.period];
      std::size_t sum = 0;
      for (const auto& [d, c] : by_period) {
        CHECK(n % d == 0);
        sum += c;
        std::size_t aperiodic_d = 0;
        for (const auto& y : enumerate_necklaces(k, d)) aperiodic_d += y.aperiodic();
        CHECK(c == aperiodic_d);
      }
      CHECK(sum == *burnside_count(k, n));
    }
  }
}

TEST_CASE("power quotient examples") {
  const auto c2 = chain_poset(2);
  const auto q1 = build_power_quotient(c2, 1);
  CHECK(q1.poset.size() == 2);
  CHECK(q1.poset.is_cover(0, 1));

  const auto q3 = build_power_quotient(c2, 3);
  CHECK(q3.poset.size() == 4);
  CHECK(ref::census(q3.poset) == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(q3.poset.covers().size() == 3);
  CHECK(q3.find(Word{1, 0, 0}) == q3.find(Word{0, 0, 1}));

  const auto q6 = build_power_quotient(c2, 6);
  CHECK(q6.poset.size() == 14);
  CHECK(ref::census(q6.poset) == std::vector<std::size_t>{1, 1, 3, 4, 3, 1, 1});

  CHECK(ref::error_of([&] { build_power_quotient(c2, 30); }) == ErrorCode::SizeLimitExceeded);
  CHECK(ref::error_of([&] { build_power_quotient(c2, 6, 13); }) == ErrorCode::SizeLimitExceeded);
  CHECK(ref::error_of([&] { build_power_quotient(c2, 0); }) == ErrorCode::InvalidInput);
}

TEST_CASE("power quotient census matches brute-force weight counts") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const auto p = ref::random_ranked(rng, 3, 2, static_cast<int>(rng() % 2));
    const auto n = static_cast<std::size_t>(1 + rng() % 5);
    if (std::pow(p.size(), n) > 50000) continue;
    const auto q = build_power_quotient(p, n);
    std::map<int, std::size_t> expected;
    for (const Word& w : ref::necklaces(static_cast<int>(p.size()), n)) {
      int r = 0;
      for (Label y : w) r += p.rank(y);
      ++expected[r];
    }
    CHECK(rank_census(q.poset).counts == expected);
    CHECK(q.poset.size() == ref::burnside_by_rotations(p.size(), n));
  }
}

TEST_CASE("classify and fold examples") {
  // Two labelled 2-chains: labels 0,1 in class 0 and 2,3 in class 1.
  const std::vector<Label> proj{0, 0, 1, 1};

  const auto constant = classify_fiber(Necklace::from_word(Word{1, 0, 1, 1}), proj);
  CHECK(constant.base.word == Word{0, 0, 0, 0});
  CHECK(constant.period_d == 1);
  const auto same = fold_periodic(Necklace::from_word(Word{1, 0, 1, 1}), constant, proj);
  CHECK(same.blocks == std::vector<Word>{{0}, {1}, {1}, {1}});

  const Necklace x = Necklace::from_word(Word{1, 2, 0, 3});
  const auto key = classify_fiber(x, proj);
  CHECK(key.base.word == Word{0, 1, 0, 1});
  CHECK(key.period_d == 2);
  const auto b = fold_periodic(x, key, proj);
  CHECK(b.blocks == std::vector<Word>{{0, 3}, {1, 2}});
  CHECK(unfold_periodic(b, Word{0, 1}, proj) == x);

  const Necklace y = Necklace::from_word(Word{3, 0, 0, 1});
  const auto ykey = classify_fiber(y, proj);
  CHECK(ykey.period_d == 4);
  const auto single = fold_periodic(y, ykey, proj);
  REQUIRE(single.blocks.size() == 1);
  CHECK(single.blocks[0] == y.word);
  CHECK(unfold_periodic(single, ykey.base.word, proj) == y);

  CHECK(ref::error_of([&] { fold_periodic(y, key, proj); }) == ErrorCode::BaseMismatch);
  CHECK(ref::error_of([&] { unfold_periodic({{{0, 3}, {2, 1}}}, Word{0, 1}, proj); }) ==
        ErrorCode::PatternViolation);
  CHECK(ref::error_of([&] { classify_fiber(Necklace::from_word(Word{7}), proj); }) ==
        ErrorCode::IdOutOfRange);
}

TEST_CASE("fiber partition of two labelled chains at n = 4") {
  const auto lc = checks::labeled_chains({2, 2});
  const auto q = build_power_quotient(lc.poset, 4);
  std::map<Word, std::size_t> sizes;
  for (const auto& w : q.words) ++sizes[classify_fiber(Necklace::from_word(w), lc.projection).base.word];
  std::size_t total = 0;
  for (const auto& [base, count] : sizes) total += count;
  CHECK(total == q.poset.size());
  CHECK(total == 70);
  CHECK(sizes.size() == 6);
}

TEST_CASE("fold and unfold are fiberwise isomorphisms") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto r = checks::check_fold({2, 2}, n);
    CHECK_MESSAGE(r.ok, r.detail);
    const auto s = checks::check_fold({2, 3}, n);
    CHECK_MESSAGE(s.ok, s.detail);
  }
  const auto t = checks::check_fold({1, 2, 2}, 4);
  CHECK_MESSAGE(t.ok, t.detail);
}

TEST_CASE("unfold round trip up to eight beads") {
  const auto lc = checks::labeled_chains({2, 2});
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& x : enumerate_necklaces(4, n)) {
      const auto key = classify_fiber(x, lc.projection);
      const Word beta(key.base.word.begin(),
                      key.base.word.begin() + static_cast<std::ptrdiff_t>(key.period_d));
      CHECK(unfold_periodic(fold_periodic(x, key, lc.projection), beta, lc.projection) == x);
    }
  }
}

TEST_CASE("text form") {
  CHECK(to_text(Word{2, 4}) == "[2,4]");
  CHECK(to_text(Word{}) == "[]");
  CHECK(parse_word(" [ 1, 0 ,2 ] ") == Word{1, 0, 2});
  CHECK(parse_word("[]").empty());
  CHECK(parse_word("[-3]") == Word{-3});
  for (const char* bad : {"", "1,2", "[1,,2]", "[1 2]", "[1,2", "[1,2]x", "[a]"}) {
    CHECK(ref::error_of([&] { parse_word(bad); }) == ErrorCode::ParseError);
  }
}

}  // TEST_SUITE
