#include "packcover/io.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Lagrangian-relaxation solvers for packing, covering and "
               "zero-sum games over an optimization oracle"};
  app.require_subcommand(1);

  packcover::RunConfig cfg;
  std::uint64_t s_flag = 0;

  const std::vector<std::string> commands = {"game",     "pack",      "cover",
                                             "int-pack", "int-cover", "setcover"};
  for (const auto& name : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("input", cfg.input_path, "instance file")->required();
    sub->add_option("--eps", cfg.eps, "approximation parameter");
    if (name == "pack" || name == "cover")
      sub->add_option("--s", s_flag, "fixed iteration count");
    sub->add_option("--cap-multiplier", cfg.cap_multiplier,
                    "hard iteration cap, times the analytic bound");
    sub->add_option("--delta1", cfg.delta1, "oracle relative error");
    sub->add_option("--delta2", cfg.delta2, "oracle absolute error");
    sub->add_option("--seed", cfg.seed, "oracle perturbation seed");
    sub->add_option("--out", cfg.output_path, "output file (default stdout)");
  }

  CLI11_PARSE(app, argc, argv);

  CLI::App* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  const CLI::Option* s_opt = sub->get_option_no_throw("--s");
  if (s_opt != nullptr && s_opt->count() > 0) cfg.s = s_flag;

  return packcover::run_command(cfg, std::cout, std::cerr);
}
