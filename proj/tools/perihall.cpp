#include <CLI11.hpp>
#include <iostream>

#include "perihall/cli/run.hpp"

int main(int argc, char** argv) {
  using perihall::cli::Format;
  perihall::cli::JobSpec job;
  CLI::App app{"Hall algebras of 3-periodic orbit categories over finite fields"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--quiver", job.quiver, "quiver spec file, or A<n>");
  app.add_option("--p", job.p, "field characteristic (overrides the spec file; default 2)");
  app.add_option("--max-dim", job.max_dim, "per-shift dim bound: one value or one per vertex")->delimiter(',');
  app.add_option("--budget", job.budget, "enumeration cap");
  std::string format = "table";
  app.add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--out", job.out, "write output to this file");
  app.add_option("--samples", job.samples, "sample this many triples or pairs (0 = all)");
  app.add_option("--limit", job.limit, "instance cap for lemma, orbit and decorated symmetry");
  auto* fault = app.add_option("--fault-inject", job.fault, "perturb one structure constant by +1 (test only)")
                    ->expected(0, 1)
                    ->default_str("auto");

  struct Sub {
    const char* name;
    const char* help;
    const char* args;
  };
  const Sub subs[] = {{"objects", "list the bounded objects", ""},
                      {"hom", "Hom between two objects", "X Y"},
                      {"cone", "cone classes of all morphisms X -> Y", "X Y"},
                      {"hall", "structure constant F_{XY}^L", "X Y L"},
                      {"mult", "product u_X * u_Y", "X Y"},
                      {"pbw", "ordered-product expansion", "M"},
                      {"verify", "check an identity over the bounded objects", "orbit|lemma|symmetry|assoc|presentation|classical"},
                      {"catalog", "structure-constant catalogs", "export | import FILE | check FILE"}};
  for (const auto& s : subs) {
    auto* sc = app.add_subcommand(s.name, s.help);
    sc->fallthrough();
    if (*s.args) sc->add_option("args", job.args, s.args)->required();
    sc->callback([&job, name = s.name] { job.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  if (fault->count() && !job.fault) job.fault = "auto";
  job.format = format == "json" ? Format::Json : Format::Table;
  return perihall::cli::run(job, std::cout, std::cerr);
}
