#pragma once

// Brute-force references and random generators for tests. Deliberately
// quadratic or exponential; nothing here calls the library's canonicalizers.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "scd/necklace.hpp"
#include "scd/poset.hpp"

namespace ref {

using scd::Chain;
using scd::Cover;
using scd::Id;
using scd::RankedPoset;
using scd::SymmetricChainDecomposition;
using scd::Word;

inline Word rotated(const Word& w, std::size_t s) {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[(i + s) % w.size()];
  return out;
}

/// Least rotation and the least shift producing it.
inline std::pair<Word, std::size_t> min_rotation(const Word& w) {
  Word best = w;
  std::size_t shift = 0;
  for (std::size_t s = 1; s < w.size(); ++s) {
    Word r = rotated(w, s);
    if (r < best) {
      best = std::move(r);
      shift = s;
    }
  }
  return {best, shift};
}

inline Word canon(const Word& w) { return min_rotation(w).first; }

inline std::size_t period(const Word& w) {
  for (std::size_t p = 1; p <= w.size(); ++p) {
    if (w.size() % p == 0 && rotated(w, p) == w) return p;
  }
  return w.size();
}

/// Calls fn on every word of length n over {0..k-1}.
template <typename Fn>
void for_each_word(int k, std::size_t n, Fn&& fn) {
  Word w(n, 0);
  while (true) {
    fn(w);
    std::size_t i = 0;
    while (i < n && w[i] == k - 1) w[i++] = 0;
    if (i == n) return;
    ++w[i];
  }
}

inline std::set<Word> necklaces(int k, std::size_t n) {
  std::set<Word> out;
  for_each_word(k, n, [&](const Word& w) { out.insert(canon(w)); });
  return out;
}

/// Orbit count as the average number of fixed words over all n rotations.
inline std::uint64_t burnside_by_rotations(std::uint64_t k, std::uint64_t n) {
  std::uint64_t total = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    std::uint64_t fixed = 1;
    for (std::uint64_t j = 0; j < std::gcd(i, n); ++j) fixed *= k;
    total += fixed;
  }
  return total / n;
}

/// All compositions of n up to rotation, as least rotations.
inline std::set<Word> compositions(int n) {
  std::set<Word> out;
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    Word parts;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1u << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.insert(canon(parts));
  }
  return out;
}

/// Partition necklaces obtained by merging one cyclically adjacent pair of parts.
inline std::set<Word> merges(const Word& parts) {
  std::set<Word> out;
  const std::size_t r = parts.size();
  if (r < 2) return out;
  for (std::size_t i = 0; i < r; ++i) {
    Word w;
    const std::size_t j = (i + 1) % r;
    w.push_back(parts[i] + parts[j]);
    for (std::size_t t = 2; t < r; ++t) w.push_back(parts[(i + t) % r]);
    out.insert(canon(w));
  }
  return out;
}

/// Cut positions of a composition laid around a circle of sum(parts) beads.
inline std::vector<int> cut_indicator(const Word& parts) {
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<int> b(static_cast<std::size_t>(n), 0);
  int at = 0;
  for (int p : parts) {
    b[static_cast<std::size_t>(at)] = 1;
    at += p;
  }
  return b;
}

inline Word gaps(const std::vector<int>& b) {
  std::vector<int> ones;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i]) ones.push_back(static_cast<int>(i));
  }
  Word g;
  for (std::size_t i = 0; i < ones.size(); ++i) {
    const int next = i + 1 < ones.size() ? ones[i + 1] : ones[0] + static_cast<int>(b.size());
    g.push_back(next - ones[i]);
  }
  return canon(g);
}

/// Block code through the binary picture: in every cyclic run of cuts keep the first.
/// Requires a part >= 2.
inline Word block_code(const Word& parts) {
  const auto b = cut_indicator(parts);
  const std::size_t n = b.size();
  std::vector<int> kept(n, 0);
  for (std::size_t i = 0; i < n; ++i) kept[i] = b[i] && !b[(i + n - 1) % n];
  return gaps(kept);
}

/// Strict order of a ranked poset from its covers, by depth-first closure.
inline std::vector<std::vector<char>> less_than(const RankedPoset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<char>> lt(n, std::vector<char>(n, 0));
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Id> stack{static_cast<Id>(x)};
    while (!stack.empty()) {
      const Id y = stack.back();
      stack.pop_back();
      for (Id z : p.up(y)) {
        if (!lt[x][static_cast<std::size_t>(z)]) {
          lt[x][static_cast<std::size_t>(z)] = 1;
          stack.push_back(z);
        }
      }
    }
  }
  return lt;
}

inline std::vector<std::size_t> census(const RankedPoset& p) {
  std::vector<std::size_t> out;
  if (p.empty()) return out;
  const int lo = *std::min_element(p.ranks().begin(), p.ranks().end());
  for (int r : p.ranks()) {
    const auto i = static_cast<std::size_t>(r - lo);
    if (out.size() <= i) out.resize(i + 1, 0);
    ++out[i];
  }
  return out;
}

inline std::size_t max_level(const RankedPoset& p) {
  const auto c = census(p);
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end());
}

struct Sco {
  RankedPoset poset;
  SymmetricChainDecomposition scd;
};

/// Disjoint rank-symmetric chains around target/2, optionally glued by extra
/// covers between rank-adjacent elements of different chains.
inline Sco random_sco(std::mt19937_64& rng, int max_target = 4, int max_chains = 3,
                      double glue = 0.3) {
  const int target = std::uniform_int_distribution<int>(0, max_target)(rng);
  const int count = std::uniform_int_distribution<int>(1, max_chains)(rng);
  std::vector<int> rank;
  std::vector<Cover> covers;
  Sco out;
  out.scd.target_rank = target;
  for (int c = 0; c < count; ++c) {
    const int bottom = std::uniform_int_distribution<int>(0, target / 2)(rng);
    Chain chain;
    for (int r = bottom; r <= target - bottom; ++r) {
      const auto id = static_cast<Id>(rank.size());
      if (r > bottom) covers.emplace_back(id - 1, id);
      chain.push_back(id);
      rank.push_back(r);
    }
    out.scd.chains.push_back(std::move(chain));
  }
  std::bernoulli_distribution coin(glue);
  for (std::size_t x = 0; x < rank.size(); ++x) {
    for (std::size_t y = 0; y < rank.size(); ++y) {
      if (rank[y] == rank[x] + 1 && coin(rng)) covers.emplace_back(Id(x), Id(y));
    }
  }
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  const std::size_t size = rank.size();
  out.poset = RankedPoset::validate(size, std::move(covers), std::move(rank));
  return out;
}

/// Random layered poset with the given number of ranks (from base) and covers
/// between consecutive layers.
inline RankedPoset random_ranked(std::mt19937_64& rng, int layers, int max_width, int base = 0,
                                 double density = 0.5) {
  std::vector<int> rank;
  std::vector<std::vector<Id>> level;
  for (int l = 0; l < layers; ++l) {
    const int w = std::uniform_int_distribution<int>(1, max_width)(rng);
    level.emplace_back();
    for (int i = 0; i < w; ++i) {
      level.back().push_back(static_cast<Id>(rank.size()));
      rank.push_back(base + l);
    }
  }
  std::vector<Cover> covers;
  std::bernoulli_distribution coin(density);
  for (int l = 0; l + 1 < layers; ++l) {
    for (Id a : level[static_cast<std::size_t>(l)]) {
      for (Id b : level[static_cast<std::size_t>(l) + 1]) {
        if (coin(rng)) covers.emplace_back(a, b);
      }
    }
  }
  const std::size_t size = rank.size();
  return RankedPoset::validate(size, std::move(covers), std::move(rank));
}

inline Word random_word(std::mt19937_64& rng, int k, std::size_t n) {
  std::uniform_int_distribution<int> pick(0, k - 1);
  Word w(n);
  for (auto& x : w) x = pick(rng);
  return w;
}

/// Code of the scd::Error thrown by fn, or empty if it returns normally.
template <typename Fn>
std::optional<scd::ErrorCode> error_of(Fn&& fn) {
  try {
    fn();
  } catch (const scd::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace ref
