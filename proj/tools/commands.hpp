#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace scd::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kSizeCap = 2,
  kCheckFailed = 3,
};

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::size_t n = 1;
  int m = 1;
  std::int64_t k = 2;
  std::size_t cap = 1'000'000;
  std::string out;
  std::string provenance;
  std::string poset_out;
  std::string scd_out;
  std::uint64_t seed = 1;
  std::size_t runs = 20;
  bool inverse = false;
};

/// Default cap, or SCD_CAP from the environment when it parses as a positive integer.
std::size_t default_cap();

int cmd_quotient_scd(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// mode is one of psi, psinm, blockcode; one necklace per input line.
int cmd_encode(const RunConfig& cfg, const std::string& mode, std::istream& in, std::ostream& out,
               std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_census(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// action is one of burnside, agree, search.
int cmd_oracle(const RunConfig& cfg, const std::string& action, std::ostream& out,
               std::ostream& err);
/// Writes the chain-product poset for cfg.inputs (chain lengths) and its SCD.
int cmd_grid(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// Randomized end-to-end runs over generated symmetric chain orders.
int cmd_fuzz(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace scd::cli
