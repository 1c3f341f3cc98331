#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gtm/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generalized tournament matrices: minors, clans and reversal certificates"};
  app.require_subcommand(1);

  const gtm::cli::Streams io{std::cout, std::cerr};
  const gtm::cli::Caps caps = gtm::cli::caps_from_env(std::cerr);
  int code = 0;

  std::string path_a, path_b, script_path;

  auto* validate = app.add_subcommand("validate", "Check a matrix file against the GT invariants");
  validate->add_option("matrix", path_a, "Matrix file")->required();
  validate->callback([&] { code = gtm::cli::cmd_validate(path_a, io); });

  std::size_t minors_order = 4;
  auto* minors = app.add_subcommand("minors", "List principal minors in colex order");
  minors->add_option("matrix", path_a, "Matrix file")->required();
  minors->add_option("--max-order", minors_order, "Largest minor order (clamped to n)")
      ->capture_default_str();
  minors->callback([&] { code = gtm::cli::cmd_minors(path_a, minors_order, io); });

  std::size_t compare_order = 4;
  bool compare_all = false;
  auto* compare = app.add_subcommand("compare", "Compare principal minors of two matrices");
  compare->add_option("a", path_a, "First matrix file")->required();
  compare->add_option("b", path_b, "Second matrix file")->required();
  auto* order_opt = compare->add_option("--max-order", compare_order, "Compare orders 2..k")
                        ->capture_default_str();
  compare->add_flag("--all", compare_all, "Compare minors of every order")->excludes(order_opt);
  compare->callback([&] {
    code = gtm::cli::cmd_compare(path_a, path_b, compare_order, compare_all, io, caps);
  });

  auto* clans = app.add_subcommand("clans", "Report decomposability, separability, linearity and clans");
  clans->add_option("matrix", path_a, "Matrix file")->required();
  clans->callback([&] { code = gtm::cli::cmd_clans(path_a, io, caps); });

  std::optional<std::string> out_path;
  auto* certify = app.add_subcommand("certify", "Synthesize a clan-reversal script from A to B");
  certify->add_option("a", path_a, "Source matrix file")->required();
  certify->add_option("b", path_b, "Target matrix file")->required();
  certify->add_option("--out", out_path, "Write the script here instead of stdout");
  certify->callback([&] { code = gtm::cli::cmd_certify(path_a, path_b, out_path, io, caps); });

  auto* apply = app.add_subcommand("apply", "Apply a reversal script and print the result");
  apply->add_option("matrix", path_a, "Matrix file")->required();
  apply->add_option("script", script_path, "Script file (JSON)")->required();
  apply->callback([&] { code = gtm::cli::cmd_apply(path_a, script_path, io); });

  std::string fam_a, fam_b;
  auto* family = app.add_subcommand("family", "Print the 4x4 matrix M_{a,b}");
  family->add_option("--a", fam_a, "Parameter a")->required();
  family->add_option("--b", fam_b, "Parameter b")->required();
  family->callback([&] { code = gtm::cli::cmd_family(fam_a, fam_b, io); });

  gtm::cli::RandomOptions ropt;
  auto* random = app.add_subcommand("random", "Print a seeded random GT matrix");
  random->add_option("--n", ropt.n, "Order")->required();
  random->add_option("--seed", ropt.seed, "Seed")->required();
  random->add_flag("--tournament", ropt.tournament, "0/1 entries only");
  random->add_option("--half-prob", ropt.half_probability, "Probability of a 1/2 entry")
      ->capture_default_str();
  random->add_option("--den-bound", ropt.denominator_bound, "Largest entry denominator")
      ->capture_default_str();
  random->callback([&] { code = gtm::cli::cmd_random(ropt, io); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return code;
}
