#include <iostream>

#include "CLI11.hpp"
#include "bvm/cli/commands.hpp"
#include "bvm/error.hpp"

namespace {

enum Exit { kPass = 0, kFail = 1, kInput = 2, kSize = 3 };

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean-valued models and Boolean ultrapowers on finite and symbolic algebras"};
  app.require_subcommand(1);

  std::string scenario_path;
  bvm::cli::Options opt;
  unsigned pool_rank = 0, depth = 0;
  std::uint64_t samples = 0;

  auto add_common = [&](CLI::App* sub, bool needs_scenario) {
    if (needs_scenario) sub->add_option("--scenario", scenario_path, "scenario JSON file")->required();
    sub->add_option("--format", opt.format, "report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--max-atoms", opt.max_atoms, "atom cap for constructed algebras");
    sub->add_option("--pool-rank", pool_rank, "HF rank of the name pool");
    sub->add_option("--depth", depth, "formula depth, or chain depth for demo-omega");
    sub->add_option("--samples", samples, "sampled formulas, or sampled rectangles for demo-omega");
    sub->add_option("--seed", opt.seed, "seed for property sampling");
  };
  auto* eval = app.add_subcommand("eval", "Boolean values of the scenario's formulas");
  auto* ultrapower = app.add_subcommand("ultrapower", "quotient model, Los sweep and ultrapower checks");
  auto* demo = app.add_subcommand("demo-omega", "witnesses for the nonprincipal ultrafilter on UP sets");
  add_common(eval, true);
  add_common(ultrapower, true);
  add_common(demo, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  auto set_if = [](CLI::App* sub, const char* flag, auto value, auto& target) {
    if (sub->count(flag) > 0) target = value;
  };
  CLI::App* active = eval->parsed() ? eval : ultrapower->parsed() ? ultrapower : demo;
  set_if(active, "--pool-rank", pool_rank, opt.pool_rank);
  set_if(active, "--depth", depth, opt.depth);
  set_if(active, "--samples", samples, opt.samples);

  try {
    nlohmann::json report;
    if (active == demo) {
      report = bvm::cli::cmd_demo_omega(opt);
    } else {
      const auto s = bvm::cli::load_scenario(scenario_path, opt.max_atoms);
      report = active == eval ? bvm::cli::cmd_eval(s, opt) : bvm::cli::cmd_ultrapower(s, opt);
    }
    std::cout << bvm::cli::render(report, opt.format);
    return bvm::cli::exit_status(report) == 0 ? kPass : kFail;
  } catch (const bvm::SizeError& e) {
    std::cerr << "size guard: " << e.what() << '\n';
    return kSize;
  } catch (const bvm::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  }
}
