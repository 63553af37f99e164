#include "scd/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace scd {

namespace {

Word gaps_between_ones(std::span<const Label> binary) {
  std::vector<std::size_t> ones;
  for (std::size_t i = 0; i < binary.size(); ++i) {
    if (binary[i] == 1) ones.push_back(i);
  }
  Word parts(ones.size());
  for (std::size_t i = 0; i < ones.size(); ++i) {
    const std::size_t next = i + 1 < ones.size() ? ones[i + 1] : ones[0] + binary.size();
    parts[i] = static_cast<Label>(next - ones[i]);
  }
  return parts;
}

}  // namespace

PartitionNecklace PartitionNecklace::from_parts(std::span<const Label> parts) {
  if (parts.empty()) throw Error(ErrorCode::InvalidInput, "empty partition necklace");
  for (Label a : parts) {
    if (a < 1) throw Error(ErrorCode::InvalidInput, "non-positive part in " + to_text(parts));
  }
  if (std::all_of(parts.begin(), parts.end(), [](Label a) { return a == 1; })) {
    throw Error(ErrorCode::AllOnes, to_text(parts) + " is not a member of Q(n)");
  }
  return PartitionNecklace{canonical_word(parts)};
}

int PartitionNecklace::sum() const noexcept {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

bool PartitionNecklace::fundamental() const noexcept {
  return std::all_of(parts.begin(), parts.end(), [](Label a) { return a >= 2; });
}

bool PartitionNecklace::divisible_by(int m) const noexcept {
  return m > 0 && std::all_of(parts.begin(), parts.end(), [m](Label a) { return a % m == 0; });
}

std::vector<PartBlock> normal_form(const PartitionNecklace& q) {
  const auto r = q.parts.size();
  std::size_t shift = 0;
  while (shift < r && q.parts[(shift + r - 1) % r] < 2) ++shift;
  if (shift == r) throw Error(ErrorCode::AllOnes, to_text(q.parts));
  std::vector<PartBlock> blocks;
  int ones = 0;
  for (std::size_t i = 0; i < r; ++i) {
    const Label a = q.parts[(shift + i) % r];
    if (a == 1) {
      ++ones;
    } else {
      blocks.push_back({ones, a});
      ones = 0;
    }
  }
  return blocks;
}

PartitionNecklace psi_forward(std::span<const Label> binary) {
  bool has_zero = false;
  bool has_one = false;
  for (Label b : binary) {
    if (b != 0 && b != 1) throw Error(ErrorCode::InvalidInput, to_text(binary) + " is not binary");
    has_zero |= b == 0;
    has_one |= b == 1;
  }
  if (!has_zero || !has_one) {
    throw Error(ErrorCode::ExcludedNecklace, to_text(binary) + " is constant");
  }
  return PartitionNecklace::from_parts(gaps_between_ones(binary));
}

Necklace psi_inverse(const PartitionNecklace& q) {
  Word binary;
  for (Label a : q.parts) {
    binary.push_back(1);
    binary.insert(binary.end(), static_cast<std::size_t>(a - 1), 0);
  }
  return Necklace::from_word(binary);
}

PartitionNecklace block_code(const PartitionNecklace& q) {
  Word merged;
  for (const auto& block : normal_form(q)) merged.push_back(block.ones + block.big);
  return PartitionNecklace::from_parts(merged);
}

PartitionNecklace psi_nm_forward(std::span<const Label> word, int m) {
  if (m < 1) throw Error(ErrorCode::InvalidInput, "m must be positive");
  if (word.empty()) throw Error(ErrorCode::EmptyWord, "psi_nm_forward");
  for (Label j : word) {
    if (j < 0 || j > m) {
      throw Error(ErrorCode::InvalidInput,
                  to_text(word) + " has a letter outside 0.." + std::to_string(m));
    }
  }
  const bool all_zero = std::all_of(word.begin(), word.end(), [](Label j) { return j == 0; });
  const bool all_top = std::all_of(word.begin(), word.end(), [m](Label j) { return j == m; });
  if (all_zero || all_top) throw Error(ErrorCode::ExcludedNecklace, to_text(word) + " is extreme");
  Word binary;
  binary.reserve(word.size() * static_cast<std::size_t>(m));
  for (Label j : word) {
    binary.insert(binary.end(), static_cast<std::size_t>(j), 1);
    binary.insert(binary.end(), static_cast<std::size_t>(m - j), 0);
  }
  return PartitionNecklace::from_parts(gaps_between_ones(binary));
}

Word expand_blocks(std::span<const PartBlock> blocks, int m) {
  Word out;
  for (const auto& [ones, big] : blocks) {
    const int q = (ones + 1) / m;
    const int r = (ones + 1) % m;
    const int t = (ones + big) / m - q - 1;
    out.insert(out.end(), static_cast<std::size_t>(q), m);
    out.push_back(r);
    out.insert(out.end(), static_cast<std::size_t>(t), 0);
  }
  return out;
}

Necklace psi_nm_inverse(const PartitionNecklace& q, int m) {
  if (m < 1) throw Error(ErrorCode::InvalidInput, "m must be positive");
  const auto blocks = normal_form(q);
  for (const auto& b : blocks) {
    if ((b.ones + b.big) % m != 0) {
      throw Error(ErrorCode::NotDivisible,
                  "block code of " + to_text(q.parts) + " is not divisible by " + std::to_string(m));
    }
  }
  return Necklace::from_word(expand_blocks(blocks, m));
}

std::vector<Word> composition_necklaces(int n, int min_part) {
  std::vector<Word> out;
  if (n < 1) return out;
  // Binary n-bead necklaces with at least one 1 are in bijection with
  // compositions of n up to rotation via the gaps between consecutive ones.
  for_each_necklace(2, static_cast<std::size_t>(n), [&](const Word& w, std::size_t) {
    Word parts = gaps_between_ones(w);
    if (parts.empty()) return;
    if (std::any_of(parts.begin(), parts.end(), [&](Label a) { return a < min_part; })) return;
    out.push_back(canonical_word(parts));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PartitionNecklace> fundamental_necklaces(int n, int m) {
  std::vector<PartitionNecklace> out;
  if (m < 1 || n < 2 || n % m != 0) return out;
  // Parts m*e with e a composition of n/m; m*e >= 2 forces e >= 2 only when m = 1.
  for (Word e : composition_necklaces(n / m, m == 1 ? 2 : 1)) {
    for (auto& x : e) x *= m;
    out.push_back(PartitionNecklace{std::move(e)});
  }
  return out;
}

QuotientPoset partition_necklace_poset(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidInput, "Q(n) needs n >= 2");
  // Direct enumeration of all compositions with at most n - 1 parts.
  std::set<Word> elements;
  Word current;
  auto extend = [&](auto& self, int remaining) -> void {
    if (remaining == 0) {
      if (current.size() <= static_cast<std::size_t>(n - 1)) elements.insert(canonical_word(current));
      return;
    }
    for (int a = 1; a <= remaining; ++a) {
      current.push_back(a);
      self(self, remaining - a);
      current.pop_back();
    }
  };
  extend(extend, n);

  QuotientPoset q;
  std::vector<int> rank;
  for (const auto& w : elements) {
    q.index.emplace(w, static_cast<Id>(q.words.size()));
    q.words.push_back(w);
    rank.push_back(static_cast<int>(w.size()));
  }
  std::vector<Cover> covers;
  for (std::size_t id = 0; id < q.words.size(); ++id) {
    const Word& w = q.words[id];
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (Label b = 1; b < w[i]; ++b) {
        Word refined;
        refined.reserve(w.size() + 1);
        refined.insert(refined.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        refined.push_back(b);
        refined.push_back(w[i] - b);
        refined.insert(refined.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 1), w.end());
        const auto it = q.index.find(canonical_word(refined));
        if (it != q.index.end()) covers.emplace_back(static_cast<Id>(id), it->second);
      }
    }
  }
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  q.poset = RankedPoset::validate(q.words.size(), std::move(covers), std::move(rank));
  return q;
}

Word fiber_word(std::span<const Label> alpha, std::span<const Label> offsets) {
  if (alpha.size() != offsets.size()) {
    throw Error(ErrorCode::InvalidInput, "offset tuple length differs from alpha");
  }
  Word out;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const Label j = offsets[i];
    if (j < 0 || j > alpha[i] - 2) {
      throw Error(ErrorCode::InvalidInput, "offset " + std::to_string(j) + " out of range for part " +
                                               std::to_string(alpha[i]));
    }
    out.insert(out.end(), static_cast<std::size_t>(j), 1);
    out.push_back(alpha[i] - j);
  }
  return out;
}

PartitionNecklace FiberElement::value() const {
  return PartitionNecklace::from_parts(fiber_word(alpha.parts, offsets));
}

int FiberElement::rank() const {
  return alpha.rank() + std::accumulate(offsets.begin(), offsets.end(), 0);
}

std::vector<std::size_t> fiber_chain_lengths(std::span<const Label> alpha) {
  std::vector<std::size_t> lengths;
  for (Label a : alpha) lengths.push_back(static_cast<std::size_t>(a - 1));
  return lengths;
}

namespace {

void require_fundamental(const PartitionNecklace& alpha) {
  if (alpha.parts.empty() || !alpha.fundamental()) {
    throw Error(ErrorCode::InvalidInput, to_text(alpha.parts) + " is not fundamental");
  }
}

}  // namespace

std::vector<FiberElement> fiber_enumerate(const PartitionNecklace& alpha, int n) {
  require_fundamental(alpha);
  if (alpha.sum() != n) {
    throw Error(ErrorCode::InvalidInput, to_text(alpha.parts) + " does not sum to " + std::to_string(n));
  }
  const auto lengths = fiber_chain_lengths(alpha.parts);
  std::size_t total = 1;
  for (auto len : lengths) total *= len;

  std::vector<FiberElement> out;
  std::set<Word> seen;
  for (std::size_t id = 0; id < total; ++id) {
    const auto coords = grid_coordinates(id, lengths);
    FiberElement e{alpha, Word(coords.begin(), coords.end())};
    if (seen.insert(e.value().parts).second) out.push_back(std::move(e));
  }
  return out;
}

namespace {

struct FiberTarget {
  InducedSubposet induced;
  std::unordered_map<Word, Id, WordHash> local;  // canonical parts -> target id
};

FiberTarget induced_fiber(const PartitionNecklace& alpha, const QuotientPoset& q_poset) {
  std::vector<Id> subset;
  FiberTarget target;
  for (const auto& e : fiber_enumerate(alpha, alpha.sum())) {
    Word value = e.value().parts;
    const Id id = q_poset.find(value);
    if (id < 0) throw Error(ErrorCode::InvalidInput, to_text(value) + " is missing from Q(n)");
    target.local.emplace(std::move(value), static_cast<Id>(subset.size()));
    subset.push_back(id);
  }
  target.induced = induced_subposet(q_poset.poset, subset);
  return target;
}

Id lookup(const FiberTarget& target, std::span<const Label> partition_word) {
  const auto it = target.local.find(canonical_word(partition_word));
  return it == target.local.end() ? Id{-1} : it->second;
}

}  // namespace

CoverMorphism fiber_product_cover(const PartitionNecklace& alpha, const QuotientPoset& q_poset) {
  require_fundamental(alpha);
  if (alpha.period() != alpha.parts.size()) {
    throw Error(ErrorCode::PeriodicAlpha, to_text(alpha.parts) + " is periodic");
  }
  const auto lengths = fiber_chain_lengths(alpha.parts);
  CoverMorphism m;
  m.source = grid_poset(lengths);
  auto target = induced_fiber(alpha, q_poset);
  for (std::size_t id = 0; id < m.source.size(); ++id) {
    const auto coords = grid_coordinates(id, lengths);
    const Word offsets(coords.begin(), coords.end());
    m.map.push_back(lookup(target, fiber_word(alpha.parts, offsets)));
  }
  m.target = std::move(target.induced.poset);
  m.rank_offset = alpha.rank();
  return m;
}

CoverMorphism fiber_periodic_cover(const PartitionNecklace& alpha, const QuotientPoset& q_poset) {
  require_fundamental(alpha);
  const std::size_t r = alpha.parts.size();
  const std::size_t d = alpha.period();
  if (d == r) throw Error(ErrorCode::AperiodicAlpha, to_text(alpha.parts) + " is aperiodic");

  const std::span<const Label> beta(alpha.parts.data(), d);
  const auto lengths = fiber_chain_lengths(beta);
  const auto block_poset = build_power_quotient(grid_poset(lengths), r / d);

  CoverMorphism m;
  auto target = induced_fiber(alpha, q_poset);
  for (const auto& block_word : block_poset.words) {
    Word offsets;
    offsets.reserve(r);
    for (Label g : block_word) {
      for (auto c : grid_coordinates(static_cast<std::size_t>(g), lengths)) {
        offsets.push_back(static_cast<Label>(c));
      }
    }
    m.map.push_back(lookup(target, fiber_word(alpha.parts, offsets)));
  }
  m.source = block_poset.poset;
  m.target = std::move(target.induced.poset);
  m.rank_offset = alpha.rank();
  return m;
}

}  // namespace scd
