#include "scd/io.hpp"

#include <fstream>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace scd {

using nlohmann::json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

template <typename Fn>
auto with_shape_errors(Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

ScdCase case_from_string(const std::string& s) {
  for (auto c : {ScdCase::Aperiodic, ScdCase::Binary, ScdCase::Fold, ScdCase::Peel,
                 ScdCase::Extremes}) {
    if (to_string(c) == s) return c;
  }
  throw Error(ErrorCode::ParseError, "unknown provenance case '" + s + "'");
}

}  // namespace

RankedPoset poset_from_json(std::string_view text) {
  const json doc = parse(text);
  auto [n, rank, covers] = with_shape_errors([&] {
    const auto n = doc.at("n").get<std::int64_t>();
    auto rank = doc.at("rank").get<std::vector<int>>();
    std::vector<Cover> covers;
    for (const auto& c : doc.at("covers")) {
      if (!c.is_array() || c.size() != 2) throw Error(ErrorCode::ParseError, "cover must be [lo,hi]");
      covers.emplace_back(c[0].get<Id>(), c[1].get<Id>());
    }
    return std::tuple{n, std::move(rank), std::move(covers)};
  });
  if (n < 0) throw Error(ErrorCode::ParseError, "negative element count");
  return RankedPoset::validate(static_cast<std::size_t>(n), std::move(covers), std::move(rank));
}

std::string poset_to_json(const RankedPoset& poset) {
  json covers = json::array();
  for (const auto& [lo, hi] : poset.covers()) covers.push_back({lo, hi});
  json doc;
  doc["n"] = poset.size();
  doc["rank"] = std::vector<int>(poset.ranks().begin(), poset.ranks().end());
  doc["covers"] = std::move(covers);
  return doc.dump() + "\n";
}

SymmetricChainDecomposition scd_from_json(std::string_view text) {
  const json doc = parse(text);
  return with_shape_errors([&] {
    SymmetricChainDecomposition scd;
    scd.target_rank = doc.at("target_rank").get<int>();
    scd.chains = doc.at("chains").get<std::vector<Chain>>();
    return scd;
  });
}

std::string scd_to_json(const SymmetricChainDecomposition& scd) {
  json doc;
  doc["target_rank"] = scd.target_rank;
  doc["chains"] = scd.chains;
  return doc.dump() + "\n";
}

std::string provenance_to_json(std::span<const ChainProvenance> provenance) {
  json doc = json::array();
  for (const auto& p : provenance) {
    doc.push_back({{"chain_index", p.chain_index},
                   {"case", std::string(to_string(p.kind))},
                   {"alpha", p.alpha},
                   {"depth", p.depth}});
  }
  return doc.dump(1) + "\n";
}

std::vector<ChainProvenance> provenance_from_json(std::string_view text) {
  const json doc = parse(text);
  return with_shape_errors([&] {
    std::vector<ChainProvenance> out;
    for (const auto& entry : doc) {
      out.push_back({entry.at("chain_index").get<std::size_t>(),
                     case_from_string(entry.at("case").get<std::string>()),
                     entry.at("alpha").get<std::string>(), entry.at("depth").get<int>()});
    }
    return out;
  });
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << contents;
}

}  // namespace scd
