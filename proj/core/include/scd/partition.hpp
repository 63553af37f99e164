#pragma once

// Partition necklaces: cyclic compositions of n ordered by refinement, their
// binary and (m+1)-ary encodings, and the block-code fibers Q_alpha.

#include <cstddef>
#include <span>
#include <vector>

#include "scd/necklace.hpp"
#include "scd/poset.hpp"

namespace scd {

/// Canonical rotation of a composition of n. Rank is the number of parts.
/// The all-ones composition is not a member of Q(n) and is rejected.
struct PartitionNecklace {
  Word parts;

  /// Canonicalizes and validates: nonempty, every part >= 1, not all ones.
  static PartitionNecklace from_parts(std::span<const Label> parts);

  int sum() const noexcept;
  int rank() const noexcept { return static_cast<int>(parts.size()); }
  bool fundamental() const noexcept;
  bool divisible_by(int m) const noexcept;
  std::size_t period() const { return least_period<Label>(parts); }

  friend bool operator==(const PartitionNecklace&, const PartitionNecklace&) = default;
  friend auto operator<=>(const PartitionNecklace& a, const PartitionNecklace& b) {
    return a.parts <=> b.parts;
  }
};

/// One (1^ones, big) run of the normal form [1^n1, m1, ..., 1^nk, mk], big >= 2.
struct PartBlock {
  int ones = 0;
  int big = 0;
  friend bool operator==(const PartBlock&, const PartBlock&) = default;
};

/// Normal form of a partition necklace: the least rotation (counted from the
/// canonical word) that ends in a part >= 2, cut after each part >= 2.
std::vector<PartBlock> normal_form(const PartitionNecklace& q);

/// Binary necklace (at least one 0 and one 1) -> gaps between consecutive ones.
PartitionNecklace psi_forward(std::span<const Label> binary);
Necklace psi_inverse(const PartitionNecklace& q);

/// Merges each run of ones into the following part >= 2.
PartitionNecklace block_code(const PartitionNecklace& q);

/// (m+1)-ary necklace -> substitute j by 1^j 0^(m-j), then psi on mn beads.
PartitionNecklace psi_nm_forward(std::span<const Label> word, int m);
/// Requires the block code of q to be m-divisible (NotDivisible otherwise).
Necklace psi_nm_inverse(const PartitionNecklace& q, int m);

/// Explicit inverse on a normal form: each block (1^ones, big) becomes
/// m^q, r, 0^t with ones + 1 = m q + r and t = (ones + big) / m - q - 1.
/// The result is an uncanonicalized (m+1)-ary word.
Word expand_blocks(std::span<const PartBlock> blocks, int m);

/// Compositions of n up to rotation with every part >= min_part, sorted
/// ascending. The all-ones composition is included when min_part == 1.
std::vector<Word> composition_necklaces(int n, int min_part = 1);

/// Fundamental partition necklaces of n whose parts are all divisible by m.
std::vector<PartitionNecklace> fundamental_necklaces(int n, int m = 1);

/// Q(n) with refinement covers (split one part in two). Words are canonical
/// part tuples; ids follow ascending word order. Requires n >= 2.
QuotientPoset partition_necklace_poset(int n);

/// Uncanonicalized partition word [1^j1, a1 - j1, ..., 1^jr, ar - jr] for
/// alpha's canonical parts a and offsets 0 <= ji <= ai - 2.
Word fiber_word(std::span<const Label> alpha, std::span<const Label> offsets);

struct FiberElement {
  PartitionNecklace alpha;
  Word offsets;

  PartitionNecklace value() const;
  int rank() const;
};

/// Q_alpha: one offset tuple per element, first in lexicographic offset order.
std::vector<FiberElement> fiber_enumerate(const PartitionNecklace& alpha, int n);

/// Per-part chain lengths a_i - 1 of the grid covering Q_alpha.
std::vector<std::size_t> fiber_chain_lengths(std::span<const Label> alpha);

/// Grid Q_[a1] x ... x Q_[ar] onto the induced fiber inside `q_poset`.
/// Target ids follow fiber_enumerate order. Throws PeriodicAlpha.
CoverMorphism fiber_product_cover(const PartitionNecklace& alpha, const QuotientPoset& q_poset);

/// Block necklaces (Q_[b1] x ... x Q_[bd])^(r/d) / Z_(r/d) onto the induced
/// fiber inside `q_poset`. Throws AperiodicAlpha.
CoverMorphism fiber_periodic_cover(const PartitionNecklace& alpha, const QuotientPoset& q_poset);

}  // namespace scd
