#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"fpmod: finitely presented modules, prime/coprime predicate "
               "analysis, and verification campaigns"};
  app.require_subcommand(1);

  fpm::cli::AnalyzeOptions aopt;
  auto* analyze = app.add_subcommand(
      "analyze", "invariant factors, annihilator, and all predicate verdicts "
                 "for a described module");
  analyze->add_option("file", aopt.file, "module description (JSON)")->required();
  analyze->add_option("--format", aopt.format, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}));
  analyze->add_flag("--emit-input", aopt.emit_input,
                    "re-emit the parsed description and exit");

  fpm::cli::ComputeOptions copt;
  auto* compute = app.add_subcommand(
      "compute", "apply a functor (gamma, lambda, hom, tensor, localize)");
  compute->add_option("file", copt.file, "module description (JSON)")->required();
  compute->add_option("--functor", copt.functor,
                      "gamma|lambda|hom|tensor|localize")->required();
  std::string ideal_name, with_file, prime_token;
  compute->add_option("--ideal", ideal_name, "ideal name from the input file");
  compute->add_option("--with", with_file, "second module description (hom/tensor)");
  compute->add_option("--prime", prime_token, "prime element (localize)");
  compute->add_option("--format", copt.format, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}));

  fpm::cli::VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "run a law verification campaign");
  verify->add_option("law", vopt.law, "law name")->required();
  verify->add_option("--seed", vopt.seed, "campaign seed (u64)");
  verify->add_option("--count", vopt.count, "number of cases");
  verify->add_option("--contexts", vopt.contexts,
                     "context tokens, e.g. Z Z/6 F2 F2/0.0.1 (repeatable)");
  verify->add_option("--profile", vopt.profile, "small|default|large");
  verify->add_option("--format", vopt.format, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}));
  verify->add_option("--max-size", vopt.max_size, "oracle size bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    // CLI11 help exits with 0; real parse errors map to the input-error code
    return code == 0 ? 0 : fpm::cli::kExitInputError;
  }

  if (analyze->parsed())
    return fpm::cli::cmd_analyze(aopt, std::cout, std::cerr);
  if (compute->parsed()) {
    if (!ideal_name.empty()) copt.ideal = ideal_name;
    if (!with_file.empty()) copt.with = with_file;
    if (!prime_token.empty()) copt.prime = prime_token;
    return fpm::cli::cmd_compute(copt, std::cout, std::cerr);
  }
  return fpm::cli::cmd_verify(vopt, std::cout, std::cerr);
}
