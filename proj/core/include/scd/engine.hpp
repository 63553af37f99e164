#pragma once

// Symmetric chain decompositions of products of chains and of cyclic
// quotients P^n / Z_n, built fiber by fiber and checked before returning.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scd/necklace.hpp"
#include "scd/poset.hpp"

namespace scd {

/// Which rule placed a chain, at the outermost inductive level it passed through.
///  aperiodic: fiber covered by a product of chains
///  binary:    same, inside the binary partition-necklace poset Q(n)
///  fold:      periodic fiber, recursion on a smaller bead count
///  peel:      constant fiber [m,...,m], recursion on a chain two vertices shorter
///  extremes:  the fiber chain of [mn] extended by the bottom and top necklaces
enum class ScdCase { Aperiodic, Binary, Fold, Peel, Extremes };

std::string_view to_string(ScdCase c) noexcept;

struct ChainProvenance {
  std::size_t chain_index = 0;
  ScdCase kind = ScdCase::Aperiodic;
  std::string alpha;  // fiber key at that level, "[..]"
  int depth = 0;      // number of fold/peel recursions below the top call
};

struct ProductScd {
  RankedPoset poset;
  SymmetricChainDecomposition scd;
};

/// A verified SCD of a quotient poset along with the canonical word of every element.
struct ScdCertificate {
  RankedPoset poset;
  std::vector<Word> words;
  SymmetricChainDecomposition scd;
  std::vector<ChainProvenance> provenance;
};

/// Hook rule: chain a_0 < ... < a_p of scd_P and t = 0..min(p, q) give the chain
/// (a_0,c_t) ... (a_(p-t),c_t) (a_(p-t),c_(t+1)) ... (a_(p-t),c_q).
/// Chain ids are x * length + y as in product_poset.
std::vector<Chain> hook_extend(std::span<const Chain> chains, std::size_t length);

/// SCD of P x C where C is a chain with `length` vertices. Throws InvalidInput
/// when scd_P does not verify.
ProductScd scd_times_chain(const RankedPoset& p, const SymmetricChainDecomposition& scd_p,
                           std::size_t length);

/// Left fold of scd_times_chain starting from a single point. Ids match grid_poset.
ProductScd scd_chain_product(std::span<const std::size_t> lengths);

/// SCD of P^n / Z_n from an SCD of P. Throws InvalidSourceScd, SizeLimitExceeded,
/// or VerificationFailure if the assembled decomposition does not verify.
ScdCertificate scd_power_quotient(const RankedPoset& p, const SymmetricChainDecomposition& scd_p,
                                  std::size_t n, std::size_t cap = kDefaultSizeCap);

/// SCD of C^n / Z_n for a chain C with m + 1 vertices, via the (m+1)-ary
/// partition-necklace encoding. Target rank m * n.
ScdCertificate scd_chain_power_quotient(int m, std::size_t n, std::size_t cap = kDefaultSizeCap);

}  // namespace scd
