#include <CLI11.hpp>
#include <iostream>

#include "nsym/runner.hpp"

namespace {

std::vector<nsym::Rational> parse_alpha(const std::string& csv) {
  std::vector<nsym::Rational> out;
  std::stringstream ss(csv);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    size_t slash = piece.find('/');
    if (slash == std::string::npos)
      out.push_back(nsym::Rational(std::stoll(piece)));
    else
      out.push_back(
          nsym::Rational(std::stoll(piece.substr(0, slash)), std::stoll(piece.substr(slash + 1))));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nsym: exact engine for vector-valued observables, graded brackets, and their "
               "quantization on frame bundles, the circle bundle over R^2, C^2, and S^3"};
  app.require_subcommand(1);
  app.fallthrough();

  nsym::runner::RunConfig cfg;
  std::string alpha_csv;
  app.add_option("--space", cfg.space, "frame:N | circle | c2 | s3")->capture_default_str();
  app.add_option("--format", cfg.format, "text | json")->capture_default_str();
  app.add_option("--mode", cfg.mode, "sym | antisym (quantize)")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized verify trials")->capture_default_str();
  app.add_option("--trials", cfg.trials, "trial count override (0: defaults)");
  app.add_option("--max-mode", cfg.max_mode, "Fourier mode bound for kernels")
      ->capture_default_str();
  app.add_option("--max-deg", cfg.max_deg, "degree bound for kernels")->capture_default_str();
  app.add_option("--alpha", alpha_csv, "comma-separated rationals for project");

  struct Sub {
    CLI::App* cmd = nullptr;
    std::vector<std::string> args;
  };
  std::map<std::string, Sub> subs;
  auto add = [&](const std::string& name, const std::string& desc, int nargs_min, int nargs_max) {
    Sub& s = subs[name];  // stable node; the option callback keeps a reference
    s.cmd = app.add_subcommand(name, desc);
    if (nargs_max > 0)
      s.cmd->add_option("expr", s.args, "expression(s)")->expected(nargs_min, nargs_max);
  };
  add("bracket", "Poisson bracket of two observables", 2, 2);
  add("hvf", "Hamiltonian vector field of an observable, or of a component-function pair", 1, 2);
  add("quantize", "quantize an observable or generator word", 1, 1);
  add("project", "project a frame observable to the cotangent bundle", 1, 1);
  add("verify", "run a named identity suite (or 'all')", 1, 1);
  add("kernel", "exact kernel of a structure-equation system", 0, 0);

  CLI11_PARSE(app, argc, argv);
  if (!alpha_csv.empty()) cfg.alpha = parse_alpha(alpha_csv);

  try {
    for (auto& [name, sub] : subs) {
      if (!sub.cmd->parsed()) continue;
      nsym::runner::Report rep = nsym::runner::run_command(cfg, name, sub.args);
      if (cfg.format == "json")
        std::cout << rep.json.dump(2) << "\n";
      else
        std::cout << rep.text;
      return rep.ok ? 0 : 1;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
