#include "scd/engine.hpp"

#include <algorithm>

#include "scd/partition.hpp"

namespace scd {

std::string_view to_string(ScdCase c) noexcept {
  switch (c) {
    case ScdCase::Aperiodic: return "aperiodic";
    case ScdCase::Binary: return "binary";
    case ScdCase::Fold: return "fold";
    case ScdCase::Peel: return "peel";
    case ScdCase::Extremes: return "extremes";
  }
  return "unknown";
}

std::vector<Chain> hook_extend(std::span<const Chain> chains, std::size_t length) {
  const auto q = length - 1;
  const auto id = [length](Id x, std::size_t y) {
    return static_cast<Id>(static_cast<std::size_t>(x) * length + y);
  };
  std::vector<Chain> out;
  for (const auto& a : chains) {
    const auto p = a.size() - 1;
    for (std::size_t t = 0; t <= std::min(p, q); ++t) {
      Chain hook;
      hook.reserve(p + q - 2 * t + 1);
      for (std::size_t i = 0; i <= p - t; ++i) hook.push_back(id(a[i], t));
      for (std::size_t j = t + 1; j <= q; ++j) hook.push_back(id(a[p - t], j));
      out.push_back(std::move(hook));
    }
  }
  return out;
}

ProductScd scd_times_chain(const RankedPoset& p, const SymmetricChainDecomposition& scd_p,
                           std::size_t length) {
  if (length == 0) throw Error(ErrorCode::InvalidInput, "chain factor must be nonempty");
  if (auto report = verify_scd(p, scd_p); !report.ok()) {
    throw Error(ErrorCode::InvalidInput, report.to_text());
  }
  ProductScd out;
  out.poset = product_poset(p, chain_poset(length));
  out.scd.chains = hook_extend(scd_p.chains, length);
  out.scd.target_rank = scd_p.target_rank + static_cast<int>(length) - 1;
  return out;
}

ProductScd scd_chain_product(std::span<const std::size_t> lengths) {
  ProductScd acc{chain_poset(1), {{{0}}, 0}};
  for (std::size_t len : lengths) acc = scd_times_chain(acc.poset, acc.scd, len);
  return acc;
}

namespace {

struct WordChain {
  std::vector<Word> words;
  ScdCase kind = ScdCase::Aperiodic;
  std::string alpha;
  int depth = 0;
};

std::vector<Chain> grid_chains(std::span<const std::size_t> lengths) {
  std::vector<Chain> chains{{0}};
  for (std::size_t len : lengths) chains = hook_extend(chains, len);
  return chains;
}

std::vector<WordChain> chain_power_chains(int m, std::size_t n);

/// Chains of P^n / Z_n as canonical words over P's ids, where `chains` is an
/// SCD of P. Fibers are the necklaces of chain indices, in ascending order.
std::vector<WordChain> power_chains(const std::vector<Chain>& chains, std::size_t n) {
  std::vector<WordChain> out;
  if (n == 1) {
    for (std::size_t i = 0; i < chains.size(); ++i) {
      WordChain wc{{}, ScdCase::Aperiodic, "[" + std::to_string(i) + "]", 0};
      for (Id x : chains[i]) wc.words.push_back({x});
      out.push_back(std::move(wc));
    }
    return out;
  }

  std::size_t n_labels = 0;
  for (const auto& c : chains) n_labels += c.size();
  Word projection(n_labels, 0);
  for (std::size_t i = 0; i < chains.size(); ++i) {
    for (Id x : chains[i]) projection[static_cast<std::size_t>(x)] = static_cast<Label>(i);
  }

  for_each_necklace(static_cast<Label>(chains.size()), n, [&](const Word& alpha, std::size_t d) {
    const auto alpha_text = to_text(alpha);
    if (d == 1) {
      // Constant fiber: C_i^n / Z_n.
      const auto& ci = chains[static_cast<std::size_t>(alpha[0])];
      const Word beta{alpha[0]};
      for (auto& sub : chain_power_chains(static_cast<int>(ci.size()) - 1, n)) {
        for (auto& w : sub.words) {
          BlockNecklace blocks;
          for (Label pos : w) blocks.blocks.push_back({ci[static_cast<std::size_t>(pos)]});
          w = unfold_periodic(blocks, beta, projection).word;
        }
        out.push_back(std::move(sub));
      }
      return;
    }

    // The fiber is covered by (C_b1 x ... x C_bd)^(n/d) / Z_(n/d), beta = alpha[0..d).
    const Word beta(alpha.begin(), alpha.begin() + static_cast<std::ptrdiff_t>(d));
    std::vector<std::size_t> lengths;
    for (Label i : beta) lengths.push_back(chains[static_cast<std::size_t>(i)].size());
    const auto block_of = [&](Label g) {
      const auto coords = grid_coordinates(static_cast<std::size_t>(g), lengths);
      Word block(d);
      for (std::size_t k = 0; k < d; ++k) {
        block[k] = chains[static_cast<std::size_t>(beta[k])][coords[k]];
      }
      return block;
    };

    if (d == n) {
      for (const auto& chain : grid_chains(lengths)) {
        WordChain wc{{}, ScdCase::Aperiodic, alpha_text, 0};
        for (Id g : chain) {
          wc.words.push_back(unfold_periodic({{block_of(g)}}, beta, projection).word);
        }
        out.push_back(std::move(wc));
      }
      return;
    }

    for (auto& sub : power_chains(grid_chains(lengths), n / d)) {
      for (auto& w : sub.words) {
        BlockNecklace blocks;
        for (Label g : w) blocks.blocks.push_back(block_of(g));
        w = unfold_periodic(blocks, beta, projection).word;
      }
      out.push_back({std::move(sub.words), ScdCase::Fold, alpha_text, sub.depth + 1});
    }
  });
  return out;
}

/// Pulls a fiber element of Q(mn, m), given by alpha and its offsets, back to
/// the canonical (m+1)-ary necklace.
Word decode_fiber_element(std::span<const Label> alpha, std::span<const Label> offsets, int m) {
  std::vector<PartBlock> blocks(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) blocks[i] = {offsets[i], alpha[i] - offsets[i]};
  return canonical_word(expand_blocks(blocks, m));
}

/// Chains of C^n / Z_n, C a chain with m + 1 vertices, as canonical words over 0..m.
std::vector<WordChain> chain_power_chains(int m, std::size_t n) {
  if (m == 0) return {{{Word(n, 0)}, ScdCase::Aperiodic, "[]", 0}};
  if (n == 1) {
    WordChain wc{{}, ScdCase::Aperiodic, "[]", 0};
    for (Label j = 0; j <= m; ++j) wc.words.push_back({j});
    return {std::move(wc)};
  }

  std::vector<WordChain> out;
  const int total = m * static_cast<int>(n);
  for (const auto& alpha_nk : fundamental_necklaces(total, m)) {
    const Word& alpha = alpha_nk.parts;
    const auto alpha_text = to_text(alpha);
    const std::size_t s = alpha.size();
    const std::size_t d = alpha_nk.period();

    if (d == s) {
      const auto lengths = fiber_chain_lengths(alpha);
      const ScdCase kind = s == 1 ? ScdCase::Extremes : m == 1 ? ScdCase::Binary : ScdCase::Aperiodic;
      for (const auto& chain : grid_chains(lengths)) {
        WordChain wc{{}, kind, alpha_text, 0};
        if (kind == ScdCase::Extremes) wc.words.push_back(Word(n, 0));
        for (Id g : chain) {
          const auto coords = grid_coordinates(static_cast<std::size_t>(g), lengths);
          wc.words.push_back(decode_fiber_element(alpha, Word(coords.begin(), coords.end()), m));
        }
        if (kind == ScdCase::Extremes) wc.words.push_back(Word(n, m));
        out.push_back(std::move(wc));
      }
      continue;
    }

    if (d == 1) {
      // alpha = [a^s]: Q_[a] is a chain with a - 1 vertices. s < n shrinks the
      // bead count; s == n means alpha = [m^n] and the chain loses two vertices.
      const int a = alpha[0];
      const ScdCase kind = s < n ? ScdCase::Fold : ScdCase::Peel;
      for (auto& sub : chain_power_chains(a - 2, s)) {
        for (auto& w : sub.words) w = decode_fiber_element(alpha, w, m);
        out.push_back({std::move(sub.words), kind, alpha_text, sub.depth + 1});
      }
      continue;
    }

    const Word beta(alpha.begin(), alpha.begin() + static_cast<std::ptrdiff_t>(d));
    const auto lengths = fiber_chain_lengths(beta);
    for (auto& sub : power_chains(grid_chains(lengths), s / d)) {
      for (auto& w : sub.words) {
        Word offsets;
        offsets.reserve(s);
        for (Label g : w) {
          for (auto c : grid_coordinates(static_cast<std::size_t>(g), lengths)) {
            offsets.push_back(static_cast<Label>(c));
          }
        }
        w = decode_fiber_element(alpha, offsets, m);
      }
      out.push_back({std::move(sub.words), ScdCase::Fold, alpha_text, sub.depth + 1});
    }
  }
  return out;
}

ScdCertificate assemble(QuotientPoset quotient, std::vector<WordChain> chains, int target_rank) {
  ScdCertificate cert;
  cert.scd.target_rank = target_rank;
  cert.scd.chains.reserve(chains.size());
  for (std::size_t c = 0; c < chains.size(); ++c) {
    Chain ids;
    ids.reserve(chains[c].words.size());
    for (const auto& w : chains[c].words) {
      const auto it = quotient.index.find(w);
      if (it == quotient.index.end()) {
        throw Error(ErrorCode::VerificationFailure, "chain " + std::to_string(c) +
                                                        " contains unknown element " + to_text(w));
      }
      ids.push_back(it->second);
    }
    cert.scd.chains.push_back(std::move(ids));
    cert.provenance.push_back({c, chains[c].kind, std::move(chains[c].alpha), chains[c].depth});
  }
  if (auto report = verify_scd(quotient.poset, cert.scd); !report.ok()) {
    throw Error(ErrorCode::VerificationFailure, report.to_text());
  }
  cert.poset = std::move(quotient.poset);
  cert.words = std::move(quotient.words);
  return cert;
}

}  // namespace

ScdCertificate scd_power_quotient(const RankedPoset& p, const SymmetricChainDecomposition& scd_p,
                                  std::size_t n, std::size_t cap) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "n must be positive");
  if (p.empty()) throw Error(ErrorCode::InvalidInput, "empty poset");
  if (auto report = verify_scd(p, scd_p); !report.ok()) {
    throw Error(ErrorCode::InvalidSourceScd, report.to_text());
  }
  const int target = static_cast<int>(n) * poset_rank(p);
  auto quotient = build_power_quotient(p, n, cap);
  return assemble(std::move(quotient), power_chains(scd_p.chains, n), target);
}

ScdCertificate scd_chain_power_quotient(int m, std::size_t n, std::size_t cap) {
  if (m < 0) throw Error(ErrorCode::InvalidInput, "m must be non-negative");
  if (n == 0) throw Error(ErrorCode::InvalidInput, "n must be positive");
  auto quotient = build_power_quotient(chain_poset(static_cast<std::size_t>(m) + 1), n, cap);
  return assemble(std::move(quotient), chain_power_chains(m, n), m * static_cast<int>(n));
}

}  // namespace scd
