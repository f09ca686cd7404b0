#include <iostream>

#include <CLI11.hpp>

#include "pathhom/cli.hpp"

namespace {

void add_job_options(CLI::App& cmd, pathhom::JobSpec& spec, std::string& format) {
  cmd.add_option("--graph", spec.graph, "digraph JSON file")->required();
  cmd.add_option("--alpha", spec.alpha, "odd-degree boundary element JSON file")->required();
  cmd.add_option("--p", spec.p, "parameter p = k(2t+1) + q")->capture_default_str();
  cmd.add_option("--max-n", spec.max_n, "report degrees 0..max_n-1")->capture_default_str();
  cmd.add_option("--field", spec.field, "rational or gf:<odd prime>")->capture_default_str();
  cmd.add_option("--path-cap", spec.path_cap, "per-degree limit on enumerated paths")
      ->capture_default_str();
  cmd.add_flag("--dump-matrices", spec.dump_matrices, "include matrices in the report");
  cmd.add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized path homology of digraphs over exact fields"};
  app.require_subcommand(1);

  pathhom::JobSpec spec;
  std::string format = "json";
  std::filesystem::path beta;
  pathhom::CheckOptions check;

  auto* hom = app.add_subcommand("homology", "Betti numbers, Omega dimensions and generators");
  add_job_options(*hom, spec, format);
  hom->add_flag("--generators", spec.generators, "emit canonical cycle representatives");

  auto* ind = app.add_subcommand("induced", "ranks of the map induced by an even-degree beta");
  add_job_options(*ind, spec, format);
  ind->add_option("--beta", beta, "even-degree element JSON file")->required();

  auto* chk = app.add_subcommand("check", "randomized algebraic property suites");
  chk->add_option("--seed", check.seed)->capture_default_str();
  chk->add_option("--trials", check.trials)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : pathhom::kExitInput;
  }
  spec.format = format == "table" ? pathhom::OutputFormat::Table : pathhom::OutputFormat::Json;

  if (*hom) return pathhom::cmd_homology(spec, std::cout, std::cerr);
  if (*ind) return pathhom::cmd_induced(spec, beta, std::cout, std::cerr);
  return pathhom::cmd_check(check, std::cout, std::cerr);
}
