#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "scd/engine.hpp"
#include "scd/io.hpp"
#include "scd/necklace.hpp"
#include "scd/oracle.hpp"
#include "scd/partition.hpp"
#include "scd/poset.hpp"

namespace scd::cli {

namespace {

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::SizeLimitExceeded:
      return kSizeCap;
    case ErrorCode::VerificationFailure:
      return kCheckFailed;
    default:
      return kInputError;
  }
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidInput, what);
}

void require_inputs(const RunConfig& cfg, std::size_t count, const char* usage) {
  require(cfg.inputs.size() == count, std::string("expected ") + usage);
}

RankedPoset load_poset(const std::string& path) { return poset_from_json(read_file(path)); }

RankedPoset chain_of(std::int64_t k) {
  require(k >= 1, "--k must be at least 1");
  return chain_poset(static_cast<std::size_t>(k));
}

}  // namespace

std::size_t default_cap() {
  if (const char* env = std::getenv("SCD_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultSizeCap;
}

int cmd_quotient_scd(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_inputs(cfg, 2, "POSET SCD");
    require(cfg.n >= 1, "--n must be at least 1");
    const RankedPoset p = load_poset(cfg.inputs[0]);
    const auto scd_p = scd_from_json(read_file(cfg.inputs[1]));

    const auto start = std::chrono::steady_clock::now();
    const ScdCertificate cert = scd_power_quotient(p, scd_p, cfg.n, cfg.cap);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    const ScdReport report = verify_scd(cert.poset, cert.scd);
    const RankCensus census = rank_census(cert.poset);
    out << cert.poset.size() << " elements, " << cert.scd.chains.size() << " chains\n";
    out << "max census: " << census.max_level() << '\n';
    out << "target rank: " << cert.scd.target_rank << '\n';
    out << report.to_text();
    err << "runtime: " << std::fixed << std::setprecision(3) << elapsed.count() << " s\n";

    if (!cfg.out.empty()) write_file(cfg.out, scd_to_json(cert.scd));
    if (!cfg.provenance.empty()) write_file(cfg.provenance, provenance_to_json(cert.provenance));
    if (!cfg.poset_out.empty()) write_file(cfg.poset_out, poset_to_json(cert.poset));
    return report.ok() ? kOk : kCheckFailed;
  });
}

int cmd_encode(const RunConfig& cfg, const std::string& mode, std::istream& in, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    require(mode == "psi" || mode == "psinm" || mode == "blockcode",
            "unknown encoding '" + mode + "'");
    require(!(mode == "blockcode" && cfg.inverse), "blockcode has no inverse");
    require(cfg.m >= 1, "--m must be at least 1");

    auto convert = [&](const std::string& line) -> std::string {
      const Word w = parse_word(line);
      if (mode == "psi") {
        if (cfg.inverse) return to_text(psi_inverse(PartitionNecklace::from_parts(w)).word);
        return to_text(psi_forward(w).parts);
      }
      if (mode == "psinm") {
        if (cfg.inverse) return to_text(psi_nm_inverse(PartitionNecklace::from_parts(w), cfg.m).word);
        return to_text(psi_nm_forward(w, cfg.m).parts);
      }
      return to_text(block_code(PartitionNecklace::from_parts(w)).parts);
    };

    bool failed = false;
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      try {
        out << convert(line) << '\n';
      } catch (const Error& e) {
        out << "error: " << e.what() << '\n';
        failed = true;
      }
    }
    return failed ? kInputError : kOk;
  });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_inputs(cfg, 2, "POSET SCD");
    const RankedPoset p = load_poset(cfg.inputs[0]);
    const auto scd = scd_from_json(read_file(cfg.inputs[1]));
    const ScdReport report = verify_scd(p, scd);
    out << report.to_text();
    return report.ok() ? kOk : kCheckFailed;
  });
}

int cmd_census(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require(cfg.inputs.size() <= 1, "expected at most one POSET");
    require(cfg.n >= 1, "--n must be at least 1");
    const RankedPoset p = cfg.inputs.empty() ? chain_of(cfg.k) : load_poset(cfg.inputs[0]);
    const QuotientPoset q = build_power_quotient(p, cfg.n, cfg.cap);
    out << rank_census(q.poset).to_text() << '\n';
    return kOk;
  });
}

int cmd_oracle(const RunConfig& cfg, const std::string& action, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    if (action == "burnside") {
      require(cfg.k >= 1 && cfg.n >= 1, "--k and --n must be at least 1");
      const auto count = burnside_count(static_cast<std::uint64_t>(cfg.k), cfg.n);
      if (!count) throw Error(ErrorCode::SizeLimitExceeded, "count does not fit in 64 bits");
      out << *count << '\n';
      return kOk;
    }
    if (action == "agree") {
      require(cfg.inputs.size() <= 1, "expected at most one POSET");
      require(cfg.n >= 1, "--n must be at least 1");
      const RankedPoset p = cfg.inputs.empty() ? chain_of(cfg.k) : load_poset(cfg.inputs[0]);
      const QuotientPoset fast = build_power_quotient(p, cfg.n, cfg.cap);
      const QuotientPoset naive = naive_quotient(p, cfg.n);

      std::string mismatch;
      if (fast.poset.size() != naive.poset.size()) {
        mismatch = "sizes " + std::to_string(naive.poset.size()) + " vs " +
                   std::to_string(fast.poset.size());
      }
      std::vector<Id> to_fast(naive.poset.size(), -1);
      for (std::size_t i = 0; i < naive.words.size() && mismatch.empty(); ++i) {
        to_fast[i] = fast.find(naive.words[i]);
        if (to_fast[i] < 0) {
          mismatch = "orbit " + to_text(naive.words[i]) + " missing";
        } else if (fast.poset.rank(to_fast[i]) != naive.poset.rank(static_cast<Id>(i))) {
          mismatch = "rank of " + to_text(naive.words[i]);
        }
      }
      if (mismatch.empty()) {
        std::vector<Cover> mapped;
        for (const auto& [lo, hi] : naive.poset.covers()) {
          mapped.emplace_back(to_fast[static_cast<std::size_t>(lo)],
                              to_fast[static_cast<std::size_t>(hi)]);
        }
        std::sort(mapped.begin(), mapped.end());
        const auto fc = fast.poset.covers();
        if (!std::equal(mapped.begin(), mapped.end(), fc.begin(), fc.end())) {
          mismatch = "cover sets differ (" + std::to_string(mapped.size()) + " vs " +
                     std::to_string(fc.size()) + ")";
        }
      }
      if (mismatch.empty()) {
        out << "naive == fast: OK\n";
        return kOk;
      }
      out << "naive == fast: MISMATCH " << mismatch << '\n';
      return kCheckFailed;
    }
    if (action == "search") {
      require_inputs(cfg, 1, "POSET");
      const RankedPoset p = load_poset(cfg.inputs[0]);
      const auto found = exhaustive_scd_search(p);
      if (!found) {
        out << "no symmetric chain decomposition\n";
        return kCheckFailed;
      }
      out << scd_to_json(*found);
      return kOk;
    }
    throw Error(ErrorCode::InvalidInput, "unknown oracle action '" + action + "'");
  });
}

int cmd_grid(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require(!cfg.inputs.empty(), "expected chain lengths");
    std::vector<std::size_t> lengths;
    for (const auto& s : cfg.inputs) {
      std::size_t pos = 0;
      long long v = 0;
      try {
        v = std::stoll(s, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      require(pos == s.size() && v >= 1, "bad chain length '" + s + "'");
      lengths.push_back(static_cast<std::size_t>(v));
    }
    const ProductScd grid = scd_chain_product(lengths);
    if (cfg.out.empty()) {
      out << poset_to_json(grid.poset);
    } else {
      write_file(cfg.out, poset_to_json(grid.poset));
    }
    if (!cfg.scd_out.empty()) write_file(cfg.scd_out, scd_to_json(grid.scd));
    return kOk;
  });
}

namespace {

struct FuzzCase {
  std::string label;
  RankedPoset poset;
  SymmetricChainDecomposition scd;
};

// Disjoint union of chains whose rank intervals are centered on target / 2.
FuzzCase random_union(std::mt19937_64& rng) {
  const int target = std::uniform_int_distribution<int>(0, 4)(rng);
  const int count = std::uniform_int_distribution<int>(1, 3)(rng);
  std::vector<int> rank;
  std::vector<Cover> covers;
  FuzzCase fc;
  fc.label = "union";
  for (int c = 0; c < count; ++c) {
    const int bottom = std::uniform_int_distribution<int>(0, target / 2)(rng);
    Chain chain;
    for (int r = bottom; r <= target - bottom; ++r) {
      const auto id = static_cast<Id>(rank.size());
      if (r > bottom) covers.emplace_back(id - 1, id);
      chain.push_back(id);
      rank.push_back(r);
    }
    fc.label += "(" + std::to_string(bottom) + ".." + std::to_string(target - bottom) + ")";
    fc.scd.chains.push_back(std::move(chain));
  }
  fc.scd.target_rank = target;
  const std::size_t size = rank.size();
  fc.poset = RankedPoset::validate(size, std::move(covers), std::move(rank));
  return fc;
}

FuzzCase random_grid(std::mt19937_64& rng) {
  const int dims = std::uniform_int_distribution<int>(1, 3)(rng);
  std::vector<std::size_t> lengths;
  std::string label = "grid";
  for (int i = 0; i < dims; ++i) {
    lengths.push_back(std::uniform_int_distribution<std::size_t>(2, 4)(rng));
    label += (i ? "x" : " ") + std::to_string(lengths.back());
  }
  ProductScd g = scd_chain_product(lengths);
  return {label, std::move(g.poset), std::move(g.scd)};
}

}  // namespace

int cmd_fuzz(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::mt19937_64 rng(cfg.seed);
    const std::uint64_t budget = std::min<std::uint64_t>(cfg.cap, 20'000);
    int status = kOk;
    for (std::size_t run = 0; run < cfg.runs; ++run) {
      FuzzCase fc = (rng() & 1) ? random_grid(rng) : random_union(rng);
      std::size_t n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
      while (n > 1 && burnside_count(fc.poset.size(), n).value_or(budget + 1) > budget) --n;

      const ScdCertificate cert = scd_power_quotient(fc.poset, fc.scd, n, cfg.cap);
      const bool ok = verify_scd(cert.poset, cert.scd).ok() &&
                      cert.scd.chains.size() == rank_census(cert.poset).max_level();
      out << "run " << run << ": " << fc.label << " n=" << n << " elements=" << cert.poset.size()
          << " chains=" << cert.scd.chains.size() << (ok ? " OK" : " FAIL") << '\n';
      if (!ok) status = kCheckFailed;
    }
    return status;
  });
}

}  // namespace scd::cli
