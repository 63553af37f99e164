#include "scd/necklace.hpp"

#include <cassert>
#include <cctype>
#include <charconv>
#include <limits>

#include "scd/oracle.hpp"

namespace scd {

Necklace Necklace::from_word(std::span<const Label> word) {
  auto [canon, shift] = canonical_rotation(word);
  (void)shift;
  Necklace x;
  x.period = least_period<Label>(canon);
  x.word = std::move(canon);
  return x;
}

std::pair<Word, std::size_t> canonical_rotation(std::span<const Label> word) {
  if (word.empty()) throw Error(ErrorCode::EmptyWord, "canonical_rotation");
  const std::size_t shift = least_rotation_shift(word);
  return {rotate_left(word, shift), shift};
}

Word canonical_word(std::span<const Label> word) {
  return rotate_left(word, least_rotation_shift(word));
}

std::size_t period(std::span<const Label> word) { return least_period(word); }

void for_each_necklace(Label k, std::size_t n,
                       const std::function<void(const Word&, std::size_t)>& visit) {
  if (k < 1 || n < 1) return;
  Word a(n, 0);
  visit(a, 1);
  while (true) {
    std::size_t i = n;
    while (i > 0 && a[i - 1] == k - 1) --i;
    if (i == 0) return;
    ++a[i - 1];
    for (std::size_t j = i; j < n; ++j) a[j] = a[j - i];
    if (n % i == 0) visit(a, i);
  }
}

std::vector<Necklace> enumerate_necklaces(Label k, std::size_t n) {
  std::vector<Necklace> out;
  for_each_necklace(k, n, [&](const Word& w, std::size_t p) { out.push_back({w, p}); });
  return out;
}

Id QuotientPoset::find(std::span<const Label> word) const {
  const auto it = index.find(canonical_word(word));
  return it == index.end() ? Id{-1} : it->second;
}

QuotientPoset build_power_quotient(const RankedPoset& p, std::size_t n, std::size_t cap) {
  if (p.empty() || n == 0) throw Error(ErrorCode::InvalidInput, "empty poset or n = 0");
  const auto k = static_cast<std::uint64_t>(p.size());
  if (k > static_cast<std::uint64_t>(std::numeric_limits<Label>::max())) {
    throw Error(ErrorCode::SizeLimitExceeded, "label alphabet too large");
  }
  const auto expected = burnside_count(k, n);
  if (!expected || *expected > cap) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "quotient has " + (expected ? std::to_string(*expected) : std::string("> 2^64")) +
                    " elements, cap is " + std::to_string(cap));
  }

  QuotientPoset q;
  q.words.reserve(static_cast<std::size_t>(*expected));
  q.index.reserve(static_cast<std::size_t>(*expected));
  std::vector<int> rank;
  rank.reserve(static_cast<std::size_t>(*expected));
  for_each_necklace(static_cast<Label>(k), n, [&](const Word& w, std::size_t) {
    int r = 0;
    for (Label x : w) r += p.rank(x);
    q.index.emplace(w, static_cast<Id>(q.words.size()));
    q.words.push_back(w);
    rank.push_back(r);
  });

  std::vector<Cover> covers;
  Word scratch(n);
  for (std::size_t id = 0; id < q.words.size(); ++id) {
    const Word& w = q.words[id];
    for (std::size_t i = 0; i < n; ++i) {
      for (Id up : p.up(w[i])) {
        scratch = w;
        scratch[i] = up;
        const auto it = q.index.find(canonical_word(scratch));
        assert(it != q.index.end());
        covers.emplace_back(static_cast<Id>(id), it->second);
      }
    }
  }
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  q.poset = RankedPoset::validate(q.words.size(), std::move(covers), std::move(rank));
  return q;
}

namespace {

Word project(std::span<const Label> word, std::span<const Label> projection) {
  Word out(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    const auto y = word[i];
    if (y < 0 || static_cast<std::size_t>(y) >= projection.size()) {
      throw Error(ErrorCode::IdOutOfRange, "label " + std::to_string(y) + " has no class");
    }
    out[i] = projection[static_cast<std::size_t>(y)];
  }
  return out;
}

BlockNecklace cut_blocks(std::span<const Label> aligned, std::size_t d) {
  std::vector<Word> blocks;
  for (std::size_t at = 0; at < aligned.size(); at += d) {
    blocks.emplace_back(aligned.begin() + static_cast<std::ptrdiff_t>(at),
                        aligned.begin() + static_cast<std::ptrdiff_t>(at + d));
  }
  const std::size_t s = least_rotation_shift<Word>(blocks);
  return {rotate_left<Word>(blocks, s)};
}

}  // namespace

FiberKey classify_fiber(const Necklace& x, std::span<const Label> projection) {
  FiberKey key;
  key.base = Necklace::from_word(project(x.word, projection));
  key.period_d = key.base.period;
  return key;
}

BlockNecklace fold_periodic(const Necklace& x, const FiberKey& key,
                            std::span<const Label> projection) {
  const Word projected = project(x.word, projection);
  const Necklace& base = key.base;
  const std::size_t n = x.size();
  const std::size_t d = key.period_d;
  if (base.size() != n || d == 0 || d != base.period) {
    throw Error(ErrorCode::BaseMismatch, "fiber key does not fit a " + std::to_string(n) + "-bead necklace");
  }

  std::size_t shift = n;
  for (std::size_t s = 0; s < n; ++s) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) match = projected[(s + i) % n] == base.word[i];
    if (match) {
      shift = s;
      break;
    }
  }
  if (shift == n) throw Error(ErrorCode::BaseMismatch, "no rotation aligns with the base");
  const Word aligned = rotate_left<Label>(x.word, shift);
  BlockNecklace out = cut_blocks(aligned, d);
#ifndef NDEBUG
  // Aligned cuts differ by multiples of d and must agree after block canonicalization.
  for (std::size_t s = shift + d; s < n; s += d) {
    assert(cut_blocks(rotate_left<Label>(x.word, s), d) == out);
  }
#endif
  return out;
}

Necklace unfold_periodic(const BlockNecklace& b, std::span<const Label> beta,
                         std::span<const Label> projection) {
  if (b.blocks.empty()) throw Error(ErrorCode::EmptyWord, "unfold_periodic");
  Word flat;
  flat.reserve(b.blocks.size() * beta.size());
  for (const auto& block : b.blocks) {
    if (block.size() != beta.size() || project(block, projection) != Word(beta.begin(), beta.end())) {
      throw Error(ErrorCode::PatternViolation, "block " + to_text(block) +
                                                   " does not project onto " + to_text(beta));
    }
    flat.insert(flat.end(), block.begin(), block.end());
  }
  return Necklace::from_word(flat);
}

std::string to_text(std::span<const Label> word) {
  std::string out = "[";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(word[i]);
  }
  out += ']';
  return out;
}

Word parse_word(std::string_view text) {
  auto fail = [&](const char* why) {
    throw Error(ErrorCode::ParseError, std::string(why) + " in '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '[') fail("expected '['");
  ++i;
  Word out;
  skip_ws();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip_ws();
      Label value = 0;
      const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc{}) fail("expected integer");
      i = static_cast<std::size_t>(ptr - text.data());
      out.push_back(value);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      fail("expected ',' or ']'");
    }
  }
  skip_ws();
  if (i != text.size()) fail("trailing characters");
  return out;
}

}  // namespace scd
