#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "scd/error.hpp"

namespace scd {

using Id = std::int32_t;
using Cover = std::pair<Id, Id>;
using Chain = std::vector<Id>;

/// A finite ranked poset given by its cover relation. Immutable once built;
/// the only way to obtain one is through validation.
class RankedPoset {
 public:
  RankedPoset() = default;

  /// Checks ids, rank totality, duplicate covers and rank(hi) = rank(lo) + 1.
  /// Throws scd::Error on the first violation.
  static RankedPoset validate(std::size_t n_elements, std::vector<Cover> covers,
                              std::vector<int> rank);

  std::size_t size() const noexcept { return rank_.size(); }
  bool empty() const noexcept { return rank_.empty(); }
  int rank(Id x) const { return rank_[static_cast<std::size_t>(x)]; }
  std::span<const int> ranks() const noexcept { return rank_; }

  /// Covers sorted ascending by (lo, hi).
  std::span<const Cover> covers() const noexcept { return covers_; }
  std::span<const Id> up(Id x) const;
  std::span<const Id> down(Id x) const;
  bool is_cover(Id lo, Id hi) const;

  int min_rank() const;
  int max_rank() const;

  /// Number of elements per rank, indexed from min_rank().
  std::vector<std::size_t> rank_census() const;

 private:
  std::vector<int> rank_;
  std::vector<Cover> covers_;
  std::vector<std::size_t> up_offsets_;
  std::vector<Id> up_;
  std::vector<std::size_t> down_offsets_;
  std::vector<Id> down_;
};

struct SymmetricChainDecomposition {
  std::vector<Chain> chains;
  int target_rank = 0;
};

struct ScdReport {
  bool saturated = true;
  bool disjoint = true;
  bool covering = true;
  bool symmetric = true;
  // Each holds the first counterexample under ascending id / chain order.
  std::optional<std::string> saturated_failure;
  std::optional<std::string> disjoint_failure;
  std::optional<std::string> covering_failure;
  std::optional<std::string> symmetric_failure;

  bool ok() const noexcept { return saturated && disjoint && covering && symmetric; }
  /// Four lines of the form "saturated: OK" / "covering: FAIL at element 5".
  std::string to_text() const;
};

/// Rank-preserving (up to a constant offset) bijection between ranked posets.
struct CoverMorphism {
  RankedPoset source;
  RankedPoset target;
  std::vector<Id> map;  // source id -> target id
  int rank_offset = 0;  // rank_target(map(x)) = rank_source(x) + rank_offset
};

struct MorphismReport {
  bool bijective = true;
  bool rank_preserving = true;
  bool covers_preserved = true;
  std::optional<std::string> bijective_failure;
  std::optional<std::string> rank_failure;
  std::optional<std::string> cover_failure;

  bool ok() const noexcept { return bijective && rank_preserving && covers_preserved; }
  std::string to_text() const;
};

struct InducedSubposet {
  RankedPoset poset;
  std::vector<Id> to_parent;  // new id -> id in the parent poset
};

/// max rank + min rank. Throws EmptyPoset.
int poset_rank(const RankedPoset& poset);

ScdReport verify_scd(const RankedPoset& poset, const SymmetricChainDecomposition& scd);

/// Elements are pairs (x, y) with id x * |Q| + y; ranks add.
RankedPoset product_poset(const RankedPoset& p, const RankedPoset& q);

/// Chain 0 < 1 < ... < length-1 with ranks base_rank, base_rank+1, ...
RankedPoset chain_poset(std::size_t length, int base_rank = 0);

/// Left fold of product_poset over chains of the given lengths (ranks from 0).
/// Element ids are mixed-radix with the first coordinate most significant.
RankedPoset grid_poset(std::span<const std::size_t> lengths);

/// Coordinates of a grid element id, inverse of the grid_poset numbering.
std::vector<std::size_t> grid_coordinates(std::size_t id, std::span<const std::size_t> lengths);

MorphismReport verify_cover_morphism(const CoverMorphism& morphism);

/// Image of a source SCD along a verified morphism. Throws InvalidMorphism or
/// InvalidSourceScd when the preconditions fail.
SymmetricChainDecomposition transfer_scd(const CoverMorphism& morphism,
                                         const SymmetricChainDecomposition& scd);

/// True iff min + max rank over the subset equals poset_rank(poset).
bool is_centered_subposet(const RankedPoset& poset, std::span<const Id> subset);

/// Subset ids are taken in the given order; duplicates are rejected.
InducedSubposet induced_subposet(const RankedPoset& poset, std::span<const Id> subset);

}  // namespace scd
