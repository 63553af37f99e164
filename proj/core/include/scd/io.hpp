#pragma once

// JSON documents exchanged with the CLI and with other implementations:
//   poset:      {"n": int, "rank": [int,...], "covers": [[lo,hi],...]}
//   scd:        {"target_rank": int, "chains": [[id,...],...]}
//   provenance: [{"chain_index": int, "case": "...", "alpha": "[..]", "depth": int}, ...]

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scd/engine.hpp"
#include "scd/poset.hpp"

namespace scd {

/// Parses and validates. Throws ParseError on malformed JSON or wrong shape;
/// validation errors propagate with their own codes.
RankedPoset poset_from_json(std::string_view text);
std::string poset_to_json(const RankedPoset& poset);

SymmetricChainDecomposition scd_from_json(std::string_view text);
std::string scd_to_json(const SymmetricChainDecomposition& scd);

std::string provenance_to_json(std::span<const ChainProvenance> provenance);
std::vector<ChainProvenance> provenance_from_json(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace scd
