#include <lojex/cli.hpp>

#include <CLI11.hpp>

#include <iostream>

namespace {

// Flags shared by every subcommand.
void add_common(CLI::App* app, lojex::cli::Request& req) {
  app->add_option("--weights", req.weights, "comma separated positive weights");
  app->add_option("--degree", req.degree, "weighted degree of --function");
  app->add_option("--function", req.function, "polynomial, e.g. x^4+y^2");
  app->add_option("--gens", req.gens, "monomial generators, e.g. x^2,y^3");
  app->add_option("--ideals", req.ideals, "ideal tuple, ideals separated by |");
  app->add_option("--relative-ideal", req.relative_ideal, "monomial ideal J");
  app->add_option("--smax", req.smax, "largest power s in the schedule");
  app->add_option("--seed", req.seed, "seed for generic choices");
  app->add_flag("--assume-isolated", req.assume_isolated, "skip the isolated singularity check");
  app->add_flag("--json", req.json, "print a JSON report");
  app->add_option("--jobs", req.jobs, "worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lojex: Lojasiewicz exponents of monomial ideals and quasihomogeneous singularities"};
  app.require_subcommand(1);
  lojex::cli::Request req;

  auto* exponent = app.add_subcommand("exponent", "exponent of an ideal tuple or of a gradient");
  auto* ideal = app.add_subcommand("ideal", "single monomial ideal operations");
  ideal->add_option("op", req.op, "l0 | colength | multiplicity | newton | order | relative")->required();
  auto* sigma = app.add_subcommand("sigma", "sigma of a tuple");
  auto* matching = app.add_subcommand("matching", "search for a w-matching");
  auto* transform = app.add_subcommand("transform", "coordinate change towards a matching");
  auto* corpus = app.add_subcommand("corpus", "run the worked examples");
  for (auto* sub : {exponent, ideal, sigma, matching, transform, corpus}) add_common(sub, req);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : lojex::cli::input_error;
  }
  req.subcommand = app.get_subcommands().front()->get_name();

  auto rep = lojex::cli::run_command(req);
  if (req.json)
    std::cout << rep.json.dump(2) << "\n";
  else
    (rep.exit_code == lojex::cli::input_error || rep.exit_code == lojex::cli::resource_cap ? std::cerr : std::cout)
        << rep.human;
  return rep.exit_code;
}
