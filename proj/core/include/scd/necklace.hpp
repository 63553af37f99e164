#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "scd/poset.hpp"

namespace scd {

using Label = std::int32_t;
using Word = std::vector<Label>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Label x : w) {
      h ^= static_cast<std::uint32_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// Index of the lexicographically least rotation of `seq`, least index on ties.
/// Linear two-pointer scan; tiny inputs use the direct comparison of all rotations.
template <typename T>
std::size_t least_rotation_shift(std::span<const T> seq) {
  const std::size_t n = seq.size();
  if (n <= 1) return 0;
  if (n <= 4) {
    std::size_t best = 0;
    for (std::size_t s = 1; s < n; ++s) {
      for (std::size_t k = 0; k < n; ++k) {
        const auto& a = seq[(s + k) % n];
        const auto& b = seq[(best + k) % n];
        if (a < b) { best = s; break; }
        if (b < a) break;
      }
    }
    return best;
  }
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const auto& a = seq[(i + k) % n];
    const auto& b = seq[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (b < a) i += k + 1; else j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

/// Left rotation: result[i] = seq[(i + shift) % n].
template <typename T>
std::vector<T> rotate_left(std::span<const T> seq, std::size_t shift) {
  std::vector<T> out(seq.begin(), seq.end());
  if (!out.empty()) {
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()),
                out.end());
  }
  return out;
}

/// Least p dividing |seq| with seq invariant under rotation by p.
template <typename T>
std::size_t least_period(std::span<const T> seq) {
  const std::size_t n = seq.size();
  if (n == 0) return 0;
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && !(seq[i] == seq[k])) k = border[k - 1];
    if (seq[i] == seq[k]) ++k;
    border[i] = k;
  }
  const std::size_t p = n - border[n - 1];
  return n % p == 0 ? p : n;
}

/// Canonical representative of a Z_n-orbit of words: least rotation plus period.
struct Necklace {
  Word word;
  std::size_t period = 0;

  /// Canonicalizes an arbitrary word. Throws EmptyWord.
  static Necklace from_word(std::span<const Label> word);

  std::size_t size() const noexcept { return word.size(); }
  bool aperiodic() const noexcept { return period == word.size(); }

  friend bool operator==(const Necklace&, const Necklace&) = default;
  friend auto operator<=>(const Necklace& a, const Necklace& b) { return a.word <=> b.word; }
};

/// (least rotation, left-rotation count producing it). Throws EmptyWord.
std::pair<Word, std::size_t> canonical_rotation(std::span<const Label> word);

Word canonical_word(std::span<const Label> word);

std::size_t period(std::span<const Label> word);

/// Visits every n-bead necklace over {0..k-1} in ascending lexicographic order
/// (Fredricksen-Kessler-Maiorana). The callback receives the canonical word and
/// its period.
void for_each_necklace(Label k, std::size_t n,
                       const std::function<void(const Word&, std::size_t)>& visit);

std::vector<Necklace> enumerate_necklaces(Label k, std::size_t n);

/// A quotient poset together with its canonical-word element table.
struct QuotientPoset {
  RankedPoset poset;
  std::vector<Word> words;  // id -> canonical word
  std::unordered_map<Word, Id, WordHash> index;

  /// Id of the orbit containing `word` (any rotation), or -1.
  Id find(std::span<const Label> word) const;
};

inline constexpr std::size_t kDefaultSizeCap = 1'000'000;

/// P^n / Z_n with rank = sum of coordinate ranks and covers generated from
/// single-coordinate covers of canonical words. Throws SizeLimitExceeded when
/// the orbit count exceeds `cap`.
QuotientPoset build_power_quotient(const RankedPoset& p, std::size_t n,
                                   std::size_t cap = kDefaultSizeCap);

/// The projected I-necklace of an element together with its period.
struct FiberKey {
  Necklace base;
  std::size_t period_d = 0;

  friend bool operator==(const FiberKey&, const FiberKey&) = default;
};

/// `projection[y]` is the class of label y.
FiberKey classify_fiber(const Necklace& x, std::span<const Label> projection);

/// An element of (Y_b1 x ... x Y_bd)^(n/d) / Z_(n/d), canonical under block rotation.
struct BlockNecklace {
  std::vector<Word> blocks;

  friend bool operator==(const BlockNecklace&, const BlockNecklace&) = default;
};

/// Cuts x at the least rotation whose projection is the canonical base, splits
/// the result into n/d blocks of length d and canonicalizes under block rotation.
/// Throws BaseMismatch when x does not belong to the fiber `key`.
BlockNecklace fold_periodic(const Necklace& x, const FiberKey& key,
                            std::span<const Label> projection);

/// Concatenates the blocks and canonicalizes. Every block must project onto `beta`
/// (PatternViolation otherwise).
Necklace unfold_periodic(const BlockNecklace& b, std::span<const Label> beta,
                         std::span<const Label> projection);

/// "[l1,l2,...]"
std::string to_text(std::span<const Label> word);
/// Inverse of to_text; whitespace is tolerated. Throws ParseError.
Word parse_word(std::string_view text);

}  // namespace scd
