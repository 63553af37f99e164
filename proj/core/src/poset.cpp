#include "scd/poset.hpp"

#include <algorithm>
#include <sstream>

namespace scd {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::CoverRankMismatch: return "CoverRankMismatch";
    case ErrorCode::DuplicateCover: return "DuplicateCover";
    case ErrorCode::IdOutOfRange: return "IdOutOfRange";
    case ErrorCode::EmptyPoset: return "EmptyPoset";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::InvalidMorphism: return "InvalidMorphism";
    case ErrorCode::InvalidSourceScd: return "InvalidSourceScd";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::PatternViolation: return "PatternViolation";
    case ErrorCode::ExcludedNecklace: return "ExcludedNecklace";
    case ErrorCode::AllOnes: return "AllOnes";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::PeriodicAlpha: return "PeriodicAlpha";
    case ErrorCode::AperiodicAlpha: return "AperiodicAlpha";
    case ErrorCode::VerificationFailure: return "VerificationFailure";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

void build_adjacency(std::size_t n, std::span<const Cover> covers, bool upward,
                     std::vector<std::size_t>& offsets, std::vector<Id>& targets) {
  offsets.assign(n + 1, 0);
  for (const auto& [lo, hi] : covers) ++offsets[static_cast<std::size_t>(upward ? lo : hi) + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  targets.assign(covers.size(), 0);
  auto cursor = offsets;
  for (const auto& [lo, hi] : covers) {
    const auto from = static_cast<std::size_t>(upward ? lo : hi);
    targets[cursor[from]++] = upward ? hi : lo;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(targets.begin() + static_cast<std::ptrdiff_t>(offsets[i]),
              targets.begin() + static_cast<std::ptrdiff_t>(offsets[i + 1]));
  }
}

std::string pair_text(Id a, Id b) {
  return std::to_string(a) + " -> " + std::to_string(b);
}

}  // namespace

RankedPoset RankedPoset::validate(std::size_t n_elements, std::vector<Cover> covers,
                                  std::vector<int> rank) {
  if (rank.size() != n_elements) {
    throw Error(ErrorCode::IdOutOfRange, "rank table has " + std::to_string(rank.size()) +
                                             " entries for " + std::to_string(n_elements) +
                                             " elements");
  }
  const auto n = static_cast<std::int64_t>(n_elements);
  for (const auto& [lo, hi] : covers) {
    if (lo < 0 || hi < 0 || lo >= n || hi >= n) {
      throw Error(ErrorCode::IdOutOfRange, "cover " + pair_text(lo, hi));
    }
    if (rank[static_cast<std::size_t>(hi)] != rank[static_cast<std::size_t>(lo)] + 1) {
      throw Error(ErrorCode::CoverRankMismatch, "cover " + pair_text(lo, hi));
    }
  }
  std::sort(covers.begin(), covers.end());
  if (auto dup = std::adjacent_find(covers.begin(), covers.end()); dup != covers.end()) {
    throw Error(ErrorCode::DuplicateCover, "cover " + pair_text(dup->first, dup->second));
  }

  RankedPoset p;
  p.rank_ = std::move(rank);
  p.covers_ = std::move(covers);
  build_adjacency(n_elements, p.covers_, true, p.up_offsets_, p.up_);
  build_adjacency(n_elements, p.covers_, false, p.down_offsets_, p.down_);
  return p;
}

std::span<const Id> RankedPoset::up(Id x) const {
  const auto i = static_cast<std::size_t>(x);
  return std::span<const Id>(up_).subspan(up_offsets_[i], up_offsets_[i + 1] - up_offsets_[i]);
}

std::span<const Id> RankedPoset::down(Id x) const {
  const auto i = static_cast<std::size_t>(x);
  return std::span<const Id>(down_).subspan(down_offsets_[i],
                                            down_offsets_[i + 1] - down_offsets_[i]);
}

bool RankedPoset::is_cover(Id lo, Id hi) const {
  if (lo < 0 || static_cast<std::size_t>(lo) >= size()) return false;
  const auto ups = up(lo);
  return std::binary_search(ups.begin(), ups.end(), hi);
}

int RankedPoset::min_rank() const {
  if (rank_.empty()) throw Error(ErrorCode::EmptyPoset, "min_rank of empty poset");
  return *std::min_element(rank_.begin(), rank_.end());
}

int RankedPoset::max_rank() const {
  if (rank_.empty()) throw Error(ErrorCode::EmptyPoset, "max_rank of empty poset");
  return *std::max_element(rank_.begin(), rank_.end());
}

std::vector<std::size_t> RankedPoset::rank_census() const {
  if (rank_.empty()) return {};
  const int lo = min_rank();
  std::vector<std::size_t> census(static_cast<std::size_t>(max_rank() - lo + 1), 0);
  for (int r : rank_) ++census[static_cast<std::size_t>(r - lo)];
  return census;
}

int poset_rank(const RankedPoset& poset) {
  if (poset.empty()) throw Error(ErrorCode::EmptyPoset, "poset_rank of empty poset");
  return poset.max_rank() + poset.min_rank();
}

std::string ScdReport::to_text() const {
  std::ostringstream out;
  auto line = [&](const char* name, bool ok, const std::optional<std::string>& why) {
    out << name << ": " << (ok ? "OK" : "FAIL at " + why.value_or("?")) << '\n';
  };
  line("saturated", saturated, saturated_failure);
  line("disjoint", disjoint, disjoint_failure);
  line("covering", covering, covering_failure);
  line("symmetric", symmetric, symmetric_failure);
  return out.str();
}

ScdReport verify_scd(const RankedPoset& poset, const SymmetricChainDecomposition& scd) {
  ScdReport report;
  const auto n = poset.size();
  // first_owner[x] = index of the first chain containing x, or -1.
  std::vector<std::int64_t> first_owner(n, -1);
  std::optional<Id> first_duplicate;

  for (std::size_t c = 0; c < scd.chains.size(); ++c) {
    const auto& chain = scd.chains[c];
    for (Id x : chain) {
      if (x < 0 || static_cast<std::size_t>(x) >= n) {
        throw Error(ErrorCode::IdOutOfRange,
                    "chain " + std::to_string(c) + " contains element " + std::to_string(x));
      }
    }
    if (chain.empty()) {
      if (report.saturated) {
        report.saturated = false;
        report.saturated_failure = "chain " + std::to_string(c) + " (empty)";
      }
      continue;
    }
    for (std::size_t i = 0; i + 1 < chain.size() && report.saturated; ++i) {
      if (!poset.is_cover(chain[i], chain[i + 1])) {
        report.saturated = false;
        report.saturated_failure = "chain " + std::to_string(c) + " (" +
                                   pair_text(chain[i], chain[i + 1]) + " is not a cover)";
      }
    }
    if (report.symmetric &&
        poset.rank(chain.front()) + poset.rank(chain.back()) != scd.target_rank) {
      report.symmetric = false;
      report.symmetric_failure =
          "chain " + std::to_string(c) + " (endpoint ranks " +
          std::to_string(poset.rank(chain.front())) + " + " +
          std::to_string(poset.rank(chain.back())) + " != " + std::to_string(scd.target_rank) +
          ")";
    }
    for (Id x : chain) {
      auto& owner = first_owner[static_cast<std::size_t>(x)];
      if (owner >= 0) {
        if (!first_duplicate || x < *first_duplicate) first_duplicate = x;
      } else {
        owner = static_cast<std::int64_t>(c);
      }
    }
  }

  if (first_duplicate) {
    report.disjoint = false;
    report.disjoint_failure = "element " + std::to_string(*first_duplicate);
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (first_owner[x] < 0) {
      report.covering = false;
      report.covering_failure = "element " + std::to_string(x);
      break;
    }
  }
  return report;
}

RankedPoset product_poset(const RankedPoset& p, const RankedPoset& q) {
  const auto np = p.size();
  const auto nq = q.size();
  const auto id = [nq](std::size_t x, std::size_t y) { return static_cast<Id>(x * nq + y); };

  std::vector<int> rank(np * nq);
  for (std::size_t x = 0; x < np; ++x) {
    for (std::size_t y = 0; y < nq; ++y) {
      rank[x * nq + y] = p.rank(static_cast<Id>(x)) + q.rank(static_cast<Id>(y));
    }
  }
  std::vector<Cover> covers;
  covers.reserve(p.covers().size() * nq + q.covers().size() * np);
  for (const auto& [lo, hi] : p.covers()) {
    for (std::size_t y = 0; y < nq; ++y) {
      covers.emplace_back(id(static_cast<std::size_t>(lo), y), id(static_cast<std::size_t>(hi), y));
    }
  }
  for (std::size_t x = 0; x < np; ++x) {
    for (const auto& [lo, hi] : q.covers()) {
      covers.emplace_back(id(x, static_cast<std::size_t>(lo)), id(x, static_cast<std::size_t>(hi)));
    }
  }
  return RankedPoset::validate(np * nq, std::move(covers), std::move(rank));
}

RankedPoset chain_poset(std::size_t length, int base_rank) {
  std::vector<int> rank(length);
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < length; ++i) {
    rank[i] = base_rank + static_cast<int>(i);
    if (i > 0) covers.emplace_back(static_cast<Id>(i - 1), static_cast<Id>(i));
  }
  return RankedPoset::validate(length, std::move(covers), std::move(rank));
}

RankedPoset grid_poset(std::span<const std::size_t> lengths) {
  RankedPoset grid = chain_poset(1);
  for (std::size_t len : lengths) grid = product_poset(grid, chain_poset(len));
  return grid;
}

std::vector<std::size_t> grid_coordinates(std::size_t id, std::span<const std::size_t> lengths) {
  std::vector<std::size_t> coords(lengths.size());
  for (std::size_t i = lengths.size(); i-- > 0;) {
    coords[i] = id % lengths[i];
    id /= lengths[i];
  }
  return coords;
}

std::string MorphismReport::to_text() const {
  std::ostringstream out;
  auto line = [&](const char* name, bool ok, const std::optional<std::string>& why) {
    out << name << ": " << (ok ? "OK" : "FAIL at " + why.value_or("?")) << '\n';
  };
  line("bijective", bijective, bijective_failure);
  line("rank-preserving", rank_preserving, rank_failure);
  line("covers-preserved", covers_preserved, cover_failure);
  return out.str();
}

MorphismReport verify_cover_morphism(const CoverMorphism& m) {
  MorphismReport report;
  const auto& src = m.source;
  const auto& dst = m.target;

  if (m.map.size() != src.size() || src.size() != dst.size()) {
    report.bijective = false;
    report.bijective_failure = "size (source " + std::to_string(src.size()) + ", target " +
                               std::to_string(dst.size()) + ", map " +
                               std::to_string(m.map.size()) + ")";
  }
  std::vector<Id> preimage(dst.size(), -1);
  for (std::size_t x = 0; x < m.map.size(); ++x) {
    const Id y = m.map[x];
    if (y < 0 || static_cast<std::size_t>(y) >= dst.size()) {
      if (report.bijective) {
        report.bijective = false;
        report.bijective_failure = "element " + std::to_string(x) + " (image out of range)";
      }
      continue;
    }
    if (preimage[static_cast<std::size_t>(y)] >= 0) {
      if (report.bijective) {
        report.bijective = false;
        report.bijective_failure = "element " + std::to_string(x) + " (image " +
                                   std::to_string(y) + " already hit by " +
                                   std::to_string(preimage[static_cast<std::size_t>(y)]) + ")";
      }
      continue;
    }
    preimage[static_cast<std::size_t>(y)] = static_cast<Id>(x);
    if (report.rank_preserving && x < src.size() &&
        dst.rank(y) != src.rank(static_cast<Id>(x)) + m.rank_offset) {
      report.rank_preserving = false;
      report.rank_failure = "element " + std::to_string(x) + " (rank " +
                            std::to_string(src.rank(static_cast<Id>(x))) + " -> " +
                            std::to_string(dst.rank(y)) + ", offset " +
                            std::to_string(m.rank_offset) + ")";
    }
  }
  if (!report.bijective) return report;

  for (const auto& [lo, hi] : src.covers()) {
    const Id a = m.map[static_cast<std::size_t>(lo)];
    const Id b = m.map[static_cast<std::size_t>(hi)];
    if (!dst.is_cover(a, b)) {
      report.covers_preserved = false;
      report.cover_failure = "cover " + pair_text(lo, hi) + " (image " + pair_text(a, b) + ")";
      break;
    }
  }
  return report;
}

SymmetricChainDecomposition transfer_scd(const CoverMorphism& m,
                                         const SymmetricChainDecomposition& scd) {
  if (auto report = verify_cover_morphism(m); !report.ok()) {
    throw Error(ErrorCode::InvalidMorphism, report.to_text());
  }
  if (auto report = verify_scd(m.source, scd); !report.ok()) {
    throw Error(ErrorCode::InvalidSourceScd, report.to_text());
  }
  SymmetricChainDecomposition out;
  out.target_rank = scd.target_rank + 2 * m.rank_offset;
  out.chains.reserve(scd.chains.size());
  for (const auto& chain : scd.chains) {
    Chain image;
    image.reserve(chain.size());
    for (Id x : chain) image.push_back(m.map[static_cast<std::size_t>(x)]);
    out.chains.push_back(std::move(image));
  }
  return out;
}

bool is_centered_subposet(const RankedPoset& poset, std::span<const Id> subset) {
  if (subset.empty()) throw Error(ErrorCode::EmptySubset, "is_centered_subposet");
  int lo = 0;
  int hi = 0;
  bool first = true;
  for (Id x : subset) {
    if (x < 0 || static_cast<std::size_t>(x) >= poset.size()) {
      throw Error(ErrorCode::IdOutOfRange, "subset element " + std::to_string(x));
    }
    const int r = poset.rank(x);
    lo = first ? r : std::min(lo, r);
    hi = first ? r : std::max(hi, r);
    first = false;
  }
  return lo + hi == poset_rank(poset);
}

InducedSubposet induced_subposet(const RankedPoset& poset, std::span<const Id> subset) {
  std::vector<Id> local(poset.size(), -1);
  std::vector<int> rank;
  rank.reserve(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    const Id x = subset[i];
    if (x < 0 || static_cast<std::size_t>(x) >= poset.size()) {
      throw Error(ErrorCode::IdOutOfRange, "subset element " + std::to_string(x));
    }
    if (local[static_cast<std::size_t>(x)] >= 0) {
      throw Error(ErrorCode::InvalidInput, "subset repeats element " + std::to_string(x));
    }
    local[static_cast<std::size_t>(x)] = static_cast<Id>(i);
    rank.push_back(poset.rank(x));
  }
  // In a ranked poset x < y with rank(y) = rank(x) + 1 holds exactly when
  // (x, y) is a cover, so the rank-adjacent comparabilities are read off the
  // ambient cover lists.
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (Id hi : poset.up(subset[i])) {
      if (const Id j = local[static_cast<std::size_t>(hi)]; j >= 0) {
        covers.emplace_back(static_cast<Id>(i), j);
      }
    }
  }
  return {RankedPoset::validate(subset.size(), std::move(covers), std::move(rank)),
          std::vector<Id>(subset.begin(), subset.end())};
}

}  // namespace scd
