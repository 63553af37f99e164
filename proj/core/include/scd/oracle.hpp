#pragma once

// Brute-force cross-checks. Nothing in here shares code paths with the
// constructive modules beyond the RankedPoset container itself.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "scd/necklace.hpp"
#include "scd/poset.hpp"

namespace scd {

/// (1/n) * sum_{d | n} phi(d) * k^(n/d). Empty when the sum does not fit in 64 bits.
std::optional<std::uint64_t> burnside_count(std::uint64_t k, std::uint64_t n);

struct RankCensus {
  std::map<int, std::size_t> counts;

  std::size_t total() const;
  std::size_t max_level() const;
  /// counts[r] == counts[target - r] for every r.
  bool palindromic(int target_rank) const;
  /// "0:1 1:1 2:3 ..."
  std::string to_text() const;

  friend bool operator==(const RankCensus&, const RankCensus&) = default;
};

RankCensus rank_census(const RankedPoset& poset);

inline constexpr std::size_t kNaiveTupleCap = 10'000'000;

/// Enumerates all |P|^n tuples, groups them into rotation orbits and derives
/// covers by testing coordinatewise dominance between every pair of
/// rank-adjacent orbits. Element ids follow ascending representative order,
/// the representative being the orbit's smallest tuple.
QuotientPoset naive_quotient(const RankedPoset& p, std::size_t n,
                             std::size_t tuple_cap = kNaiveTupleCap);

inline constexpr std::size_t kSearchCap = 30;

/// Depth-first search over saturated rank-symmetric chains. Chains are grown
/// from the lowest-ranked uncovered element (least id first). Empty when no SCD
/// exists. Throws SizeLimitExceeded above `cap` elements.
std::optional<SymmetricChainDecomposition> exhaustive_scd_search(const RankedPoset& p,
                                                                 std::size_t cap = kSearchCap);

}  // namespace scd
