#include "scd/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace scd {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::optional<u128> checked_pow(std::uint64_t base, std::uint64_t exp) {
  u128 acc = 1;
  const u128 limit = static_cast<u128>(1) << 100;
  for (std::uint64_t i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > limit) return std::nullopt;
  }
  return acc;
}

}  // namespace

std::optional<std::uint64_t> burnside_count(std::uint64_t k, std::uint64_t n) {
  if (k == 0 || n == 0) return 0;
  u128 sum = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const auto power = checked_pow(k, n / d);
    if (!power) return std::nullopt;
    sum += static_cast<u128>(euler_phi(d)) * *power;
  }
  const u128 count = sum / n;
  if (count > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return static_cast<std::uint64_t>(count);
}

std::size_t RankCensus::total() const {
  std::size_t t = 0;
  for (const auto& [r, c] : counts) t += c;
  return t;
}

std::size_t RankCensus::max_level() const {
  std::size_t m = 0;
  for (const auto& [r, c] : counts) m = std::max(m, c);
  return m;
}

bool RankCensus::palindromic(int target_rank) const {
  for (const auto& [r, c] : counts) {
    const auto mirror = counts.find(target_rank - r);
    if (mirror == counts.end() || mirror->second != c) return false;
  }
  return true;
}

std::string RankCensus::to_text() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [r, c] : counts) {
    if (!first) out << ' ';
    out << r << ':' << c;
    first = false;
  }
  return out.str();
}

RankCensus rank_census(const RankedPoset& poset) {
  RankCensus census;
  for (int r : poset.ranks()) ++census.counts[r];
  return census;
}

QuotientPoset naive_quotient(const RankedPoset& p, std::size_t n, std::size_t tuple_cap) {
  const std::size_t k = p.size();
  if (k == 0 || n == 0) throw Error(ErrorCode::InvalidInput, "empty poset or n = 0");
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > tuple_cap / k) {
      throw Error(ErrorCode::SizeLimitExceeded, "naive quotient needs more than " +
                                                    std::to_string(tuple_cap) + " tuples");
    }
    total *= k;
  }

  // Tuple codes are base-k numbers with the first coordinate most significant,
  // so the numerically smallest code of an orbit is its lexicographically least word.
  auto decode = [&](std::size_t code) {
    Word w(n);
    for (std::size_t i = n; i-- > 0;) {
      w[i] = static_cast<Label>(code % k);
      code /= k;
    }
    return w;
  };
  auto rotate_code = [&](std::size_t code, std::size_t top) {
    // Moves the leading digit to the end.
    const std::size_t lead = code / top;
    return (code % top) * k + lead;
  };
  const std::size_t top = total / k;

  std::vector<Id> orbit_of(total, -1);
  std::vector<std::size_t> reps;
  for (std::size_t code = 0; code < total; ++code) {
    if (orbit_of[code] >= 0) continue;
    const auto id = static_cast<Id>(reps.size());
    reps.push_back(code);
    std::size_t c = code;
    for (std::size_t r = 0; r < n; ++r) {
      orbit_of[c] = id;
      c = rotate_code(c, top);
    }
  }

  // leq[x * k + y] iff x <= y in P (reflexive-transitive closure of covers).
  std::vector<char> leq(k * k, 0);
  for (std::size_t x = 0; x < k; ++x) {
    std::vector<Id> stack{static_cast<Id>(x)};
    leq[x * k + x] = 1;
    while (!stack.empty()) {
      const Id y = stack.back();
      stack.pop_back();
      for (Id z : p.up(y)) {
        if (!leq[x * k + static_cast<std::size_t>(z)]) {
          leq[x * k + static_cast<std::size_t>(z)] = 1;
          stack.push_back(z);
        }
      }
    }
  }

  QuotientPoset q;
  std::vector<int> rank;
  std::map<int, std::vector<Id>> by_rank;
  for (std::size_t id = 0; id < reps.size(); ++id) {
    Word w = decode(reps[id]);
    int r = 0;
    for (Label y : w) r += p.rank(y);
    rank.push_back(r);
    by_rank[r].push_back(static_cast<Id>(id));
    q.index.emplace(w, static_cast<Id>(id));
    q.words.push_back(std::move(w));
  }

  std::vector<Cover> covers;
  for (const auto& [r, lower] : by_rank) {
    const auto upper_it = by_rank.find(r + 1);
    if (upper_it == by_rank.end()) continue;
    for (Id x : lower) {
      const Word& wx = q.words[static_cast<std::size_t>(x)];
      for (Id y : upper_it->second) {
        const Word& wy = q.words[static_cast<std::size_t>(y)];
        bool comparable = false;
        for (std::size_t s = 0; s < n && !comparable; ++s) {
          bool dominated = true;
          for (std::size_t i = 0; i < n && dominated; ++i) {
            dominated = leq[static_cast<std::size_t>(wx[i]) * k +
                            static_cast<std::size_t>(wy[(i + s) % n])] != 0;
          }
          comparable = dominated;
        }
        if (comparable) covers.emplace_back(x, y);
      }
    }
  }
  q.poset = RankedPoset::validate(q.words.size(), std::move(covers), std::move(rank));
  return q;
}

namespace {

class ScdSearch {
 public:
  ScdSearch(const RankedPoset& p, int target) : p_(p), target_(target), used_(p.size(), 0) {
    order_.resize(p.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Id a, Id b) { return p.rank(a) < p.rank(b); });
  }

  bool run() { return place(); }
  std::vector<Chain> chains() const { return chains_; }

 private:
  bool place() {
    auto next = std::find_if(order_.begin(), order_.end(),
                             [&](Id x) { return !used_[static_cast<std::size_t>(x)]; });
    if (next == order_.end()) return true;
    // The lowest uncovered element must start its chain.
    const Id bottom = *next;
    const int top_rank = target_ - p_.rank(bottom);
    if (top_rank < p_.rank(bottom)) return false;
    Chain chain{bottom};
    used_[static_cast<std::size_t>(bottom)] = 1;
    const bool found = grow(chain, top_rank);
    used_[static_cast<std::size_t>(bottom)] = 0;
    return found;
  }

  bool grow(Chain& chain, int top_rank) {
    if (p_.rank(chain.back()) == top_rank) {
      chains_.push_back(chain);
      if (place()) return true;
      chains_.pop_back();
      return false;
    }
    for (Id up : p_.up(chain.back())) {
      if (used_[static_cast<std::size_t>(up)]) continue;
      used_[static_cast<std::size_t>(up)] = 1;
      chain.push_back(up);
      if (grow(chain, top_rank)) return true;
      chain.pop_back();
      used_[static_cast<std::size_t>(up)] = 0;
    }
    return false;
  }

  const RankedPoset& p_;
  int target_;
  std::vector<char> used_;
  std::vector<Id> order_;
  std::vector<Chain> chains_;
};

}  // namespace

std::optional<SymmetricChainDecomposition> exhaustive_scd_search(const RankedPoset& p,
                                                                 std::size_t cap) {
  if (p.size() > cap) {
    throw Error(ErrorCode::SizeLimitExceeded, "exhaustive search is limited to " +
                                                  std::to_string(cap) + " elements");
  }
  if (p.empty()) return SymmetricChainDecomposition{};
  const int target = poset_rank(p);
  ScdSearch search(p, target);
  if (!search.run()) return std::nullopt;
  return SymmetricChainDecomposition{search.chains(), target};
}

}  // namespace scd
