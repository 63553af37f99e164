#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace scd::cli;

  CLI::App app{"Symmetric chain decompositions of cyclic quotient posets"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.cap = default_cap();
  std::string mode;
  std::string action;

  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", cfg.cap, "Maximum number of quotient elements")
        ->check(CLI::PositiveNumber);
  };

  auto* quotient = app.add_subcommand("quotient-scd", "SCD of P^n/Z_n from an SCD of P");
  quotient->add_option("poset", cfg.inputs, "Poset JSON, then SCD JSON")->expected(2)->required();
  quotient->add_option("--n", cfg.n, "Number of beads")->required();
  quotient->add_option("--out", cfg.out, "Write the quotient SCD here");
  quotient->add_option("--provenance", cfg.provenance, "Write per-chain provenance here");
  quotient->add_option("--poset-out", cfg.poset_out, "Write the quotient poset here");
  add_cap(quotient);

  auto* encode = app.add_subcommand("encode", "Necklace codecs over stdin, one necklace per line");
  encode->add_option("mode", mode, "psi, psinm or blockcode")
      ->required()
      ->check(CLI::IsMember({"psi", "psinm", "blockcode"}));
  encode->add_option("--m", cfg.m, "Alphabet size minus one for psinm");
  encode->add_flag("--inverse", cfg.inverse, "Decode instead of encode");

  auto* verify = app.add_subcommand("verify", "Check an SCD against a poset");
  verify->add_option("poset", cfg.inputs, "Poset JSON, then SCD JSON")->expected(2)->required();

  auto* census = app.add_subcommand("census", "Rank census of P^n/Z_n");
  census->add_option("poset", cfg.inputs, "Poset JSON (default: chain with k vertices)");
  census->add_option("--n", cfg.n, "Number of beads")->required();
  census->add_option("--k", cfg.k, "Chain size when no poset is given");
  add_cap(census);

  auto* oracle = app.add_subcommand("oracle", "Brute-force cross-checks");
  oracle->add_option("action", action, "burnside, agree or search")
      ->required()
      ->check(CLI::IsMember({"burnside", "agree", "search"}));
  oracle->add_option("poset", cfg.inputs, "Poset JSON (agree defaults to a chain with k vertices)");
  oracle->add_option("--n", cfg.n, "Number of beads");
  oracle->add_option("--k", cfg.k, "Alphabet or chain size");
  add_cap(oracle);

  auto* grid = app.add_subcommand("grid", "Product of chains and its SCD");
  grid->add_option("lengths", cfg.inputs, "Chain sizes")->required();
  grid->add_option("--out", cfg.out, "Write the poset here (default: stdout)");
  grid->add_option("--scd-out", cfg.scd_out, "Write the SCD here");

  auto* fuzz = app.add_subcommand("fuzz", "Randomized end-to-end runs");
  fuzz->add_option("--seed", cfg.seed, "Generator seed");
  fuzz->add_option("--runs", cfg.runs, "Number of runs");
  add_cap(fuzz);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  if (*quotient) return cmd_quotient_scd(cfg, std::cout, std::cerr);
  if (*encode) return cmd_encode(cfg, mode, std::cin, std::cout, std::cerr);
  if (*verify) return cmd_verify(cfg, std::cout, std::cerr);
  if (*census) return cmd_census(cfg, std::cout, std::cerr);
  if (*oracle) return cmd_oracle(cfg, action, std::cout, std::cerr);
  if (*grid) return cmd_grid(cfg, std::cout, std::cerr);
  return cmd_fuzz(cfg, std::cout, std::cerr);
}
