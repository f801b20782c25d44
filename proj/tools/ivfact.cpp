// ivfact: factorizations of integer-valued polynomials with square-free denominator.

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <map>
#include <string>

#include "ivfact/cli.hpp"

int main(int argc, char** argv) {
  using namespace ivfact;
  CLI::App app{"Irreducibility and factorizations in Int(Z) for square-free denominators"};
  app.require_subcommand(1);

  cli::Options opts;
  std::string input;
  unsigned long long prime = 0;

  const std::map<std::string, std::string> about{
      {"fixed-divisor", "gcd of the numerator's values"},
      {"roots", "root sets of each numerator factor modulo --prime"},
      {"covers", "minimal coverings of the residues modulo --prime"},
      {"image-primitive", "compare the numerator's fixed divisor with the denominator"},
      {"irreducible", "decide irreducibility in Int(Z)"},
      {"factor", "list every factorization into irreducibles"},
      {"lengths", "lengths of all factorizations"},
  };
  for (const auto& name : cli::commands()) {
    auto* sub = app.add_subcommand(name, about.at(name));
    sub->add_option("expression", input, "polynomial such as \"x*(x-1)*(x-2)/6\"; read from stdin if omitted");
    sub->add_option("--prime,-p", prime, "prime for roots/covers");
    sub->add_flag("--json", opts.json, "machine-readable output");
    sub->add_flag("--verify", opts.verify, "cross-check against the brute-force oracle");
    sub->add_flag("--certificates", opts.certificates, "print the covering family behind each factorization");
    sub->add_option("--max-degree", opts.max_degree, "degree bound for factoring over Z")->check(CLI::PositiveNumber);
    sub->add_option("--window", opts.window, "half-width of the oracle evaluation window")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kInputError;
  }

  opts.command = app.get_subcommands().front()->get_name();
  if (prime != 0) opts.prime = prime;
  if (input.empty()) input.assign(std::istreambuf_iterator<char>(std::cin), {});
  opts.input = input;

  const auto result = cli::run(opts);
  (result.exit_code == cli::kInputError ? std::cerr : std::cout) << result.output;
  return result.exit_code;
}
