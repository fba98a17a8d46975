// canonical-lie: decide, enumerate and verify canonical elements of so(n).

#include <canonical_lie/cli.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

int main(int argc, char** argv) {
  using namespace canonical_lie::cli;

  CLI::App app{"Canonical elements of parabolic subalgebras of so(n)"};
  app.require_subcommand(1);

  CliConfig cfg;
  cfg.threads = threads_from_env();

  const std::map<std::string, Method> methods{
      {"prop3", Method::Prop3}, {"theorem2", Method::Theorem2}, {"both", Method::Both}, {"strict", Method::Strict}};
  const std::map<std::string, Format> formats{{"table", Format::Table}, {"json", Format::Json}};

  auto* check = app.add_subcommand("check", "Decide whether a spectrum or skew matrix is canonical");
  check->add_option("--spectrum", cfg.spectrum, "Spectrum JSON, inline or a file path");
  check->add_option("--matrix", cfg.matrix_path, "Skew-symmetric matrix file (JSON rows or CSV of p/q strings)");
  check->add_option("--method", cfg.method, "prop3 | theorem2 | both | strict")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  check->add_option("--format", cfg.format, "table | json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  auto* enumerate = app.add_subcommand("enumerate", "List every canonical conjugacy class in so(n)");
  enumerate->add_option("--n", cfg.n, "n >= 3")->required();
  enumerate->add_option("--format", cfg.format, "table | json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  auto* verify = app.add_subcommand("verify", "Cross-check both deciders over all bounded half-integral spectra");
  verify->add_option("--max-n", cfg.max_n, "largest n (>= 3)")->required();
  verify->add_option("--max-lambda", cfg.max_lambda, "largest magnitude, a positive half-integer p/q")
      ->default_str("7/2");
  verify->add_option("--format", cfg.format, "table | json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  if (check->parsed()) cfg.command = Command::Check;
  if (enumerate->parsed()) cfg.command = Command::Enumerate;
  if (verify->parsed()) cfg.command = Command::Verify;
  return run(cfg, std::cout, std::cerr);
}
