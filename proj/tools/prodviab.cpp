#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "prodviab/cli.hpp"

namespace {

using namespace prodviab;

auto run(int argc, char** argv) -> int {
  CLI::App app{"Viability analysis of structured production systems"};
  app.require_subcommand(1);

  std::string path;
  auto* validate = app.add_subcommand("validate", "check a system document");
  validate->add_option("path", path, "system document")->required();

  cli::ClassifyArgs ca;
  bool json = false, no_oracle = false;
  std::uint64_t budget = 0;
  auto* classify = app.add_subcommand("classify", "decide every property and print a report");
  classify->add_option("path", ca.path, "system document")->required();
  auto* json_flag = classify->add_flag("--json", json, "JSON report (default)");
  classify->add_flag("--text", ca.text, "text report")->excludes(json_flag);
  auto* oracle_on = classify->add_flag("--fm-oracle", ca.fm_oracle, "cross-check WCV by Fourier-Motzkin projection");
  classify->add_flag("--no-fm-oracle", no_oracle, "skip the projection cross-check")->excludes(oracle_on);
  auto* budget_opt = classify->add_option("--cc-budget", budget, "conversion-cycle enumeration budget");

  cli::FindPriceArgs fa;
  std::string method = "lp", c;
  auto* find = app.add_subcommand("find-price", "find a viable price system");
  find->add_option("path", fa.path, "system document")->required();
  find->add_option("--method", method, "lp, acyclic or pqdd")->check(CLI::IsMember({"lp", "acyclic", "pqdd"}));
  auto* c_opt = find->add_option("--c", c, "comma-separated c >> 0 for method acyclic");

  cli::DeltaArgs da;
  std::string plot;
  auto* delta = app.add_subcommand("delta", "H-representation of the weakly viable price set");
  delta->add_option("path", da.path, "system document")->required();
  delta->add_flag("--vertices", da.vertices, "also enumerate vertices and rays");
  auto* plot_opt = delta->add_option("--plot", plot, "write the (q, p) region to a .csv or .svg file");

  GeneratorConfig gc;
  std::string structure = "allow-cycles";
  auto* gen = app.add_subcommand("generate", "print a random valid system document");
  gen->add_option("--seed", gc.seed, "random seed");
  gen->add_option("--ell-c-min", gc.ell_c_min);
  gen->add_option("--ell-c-max", gc.ell_c_max);
  gen->add_option("--ell-p-min", gc.ell_p_min);
  gen->add_option("--ell-p-max", gc.ell_p_max);
  gen->add_option("--density", gc.density, "input edge probability");
  gen->add_option("--structure", structure, "dag or allow-cycles")->check(CLI::IsMember({"dag", "allow-cycles"}));
  gen->add_flag("--rip", gc.rip, "no good uses a consumption good");
  gen->add_flag("--wrip", gc.wrip, "no consumption good uses a consumption good");
  gen->add_option("--magnitude", gc.magnitude, "bound on numerators of outputs and inputs");
  gen->add_option("--max-population", gc.max_population);
  gen->add_flag("--closed-loop", gc.closed_loop, "plant an isolated loop between two intermediates");

  CrosscheckOptions co;
  auto* cross = app.add_subcommand("crosscheck", "compare every decider on random systems");
  cross->add_option("--count", co.count);
  cross->add_option("--seed", co.seed);
  cross->add_option("--max-ell", co.max_ell);
  cross->add_option("--dump-dir", co.dump_dir, "directory for reproducer documents");
  cross->add_flag("--inject-mutant", co.inject_mutant, "flip a minor sign to self-test the harness");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::UserError;
  }

  auto& out = std::cout;
  auto& err = std::cerr;
  if (*validate) return cli::cmd_validate(path, out, err);
  if (*classify) {
    if (no_oracle) ca.fm_oracle = false;
    if (*budget_opt) ca.cc_budget = budget;
    return cli::cmd_classify(ca, out, err);
  }
  if (*find) {
    fa.method = method == "acyclic" ? cli::PriceMethod::Acyclic
                : method == "pqdd"  ? cli::PriceMethod::Pqdd
                                    : cli::PriceMethod::Lp;
    if (*c_opt) fa.c = c;
    return cli::cmd_find_price(fa, out, err);
  }
  if (*delta) {
    if (*plot_opt) da.plot = plot;
    return cli::cmd_delta(da, out, err);
  }
  if (*gen) {
    gc.structure = structure == "dag" ? Structure::Dag : Structure::AllowCycles;
    return cli::cmd_generate(gc, out, err);
  }
  return cli::cmd_crosscheck(co, out, err);
}

}  // namespace

auto main(int argc, char** argv) -> int { return run(argc, argv); }
