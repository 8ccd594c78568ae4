#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "input.hpp"

using namespace satlink::cli;

int main(int argc, char** argv) {
  CLI::App app{"Concordance-homomorphism obstructions for satellite patterns via lifted linking numbers"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.seed = default_seed();
  std::string format = "text";
  std::string file;

  bool json_input = false;
  auto add_json_input = [&](CLI::App* sub) {
    sub->add_flag("--json", json_input, "input is the JSON mirror of the pattern format (detected anyway)");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* validate = app.add_subcommand("validate", "Parse a pattern or annular word and check the clasp hypotheses");
  validate->add_option("file", file, "input file")->required();
  add_json_input(validate);

  auto* compile = app.add_subcommand("compile", "Compile a pattern to an annular word");
  compile->add_option("file", file, "input file")->required();
  add_json_input(compile);

  auto* cover = app.add_subcommand("cover", "Print the m-fold cyclic cover as an annular word");
  cover->add_option("file", file, "input file")->required();
  add_json_input(cover);
  cover->add_option("--m", cfg.m, "cover degree")->check(CLI::PositiveNumber);

  auto* linkings = app.add_subcommand("linkings", "Linking numbers of the lifted meridian in the m-fold cover");
  linkings->add_option("file", file, "input file")->required();
  add_json_input(linkings);
  linkings->add_option("--m", cfg.m, "cover degree")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  add_format(linkings);

  auto* obstruct = app.add_subcommand("obstruct", "Apply the odd-order / uniform-sign test for each cover degree");
  obstruct->add_option("file", file, "input file")->required();
  add_json_input(obstruct);
  obstruct->add_option("--m-list", cfg.m_list, "cover degrees (default 2,4)")
      ->delimiter(',')
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  obstruct->add_flag("!--no-cross-checks", cfg.cross_checks, "skip the checks that compare covers");
  add_format(obstruct);

  auto* normalize = app.add_subcommand("normalize", "Turn a one-component annular word into a clasp presentation");
  normalize->add_option("file", file, "annular word")->required();
  add_format(normalize);

  auto* selftest = app.add_subcommand("selftest", "Run golden values and seeded invariant sweeps");
  selftest->add_option("--seed", cfg.seed, "seed for the random sweeps (default: $HEDDEN_SEED or built-in)");

  auto* corpus = app.add_subcommand("corpus", "Run obstruct on every pattern / annular file in a directory");
  corpus->add_option("dir", file, "directory")->required();
  corpus->add_option("--m-list", cfg.m_list, "cover degrees (default 2,4)")
      ->delimiter(',')
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  corpus->add_option("--jobs", cfg.jobs, "parallel workers (default: hardware threads)");
  corpus->add_flag("!--no-cross-checks", cfg.cross_checks, "skip the checks that compare covers");
  add_format(corpus);

  CLI11_PARSE(app, argc, argv);

  CLI::App* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  cfg.format = format == "json" ? Format::Json : Format::Text;
  if (!file.empty()) cfg.inputs.push_back(file);

  const std::map<std::string, int (*)(const RunConfig&, std::ostream&, std::ostream&)> table{
      {"validate", cmd_validate}, {"compile", cmd_compile},     {"cover", cmd_cover},       {"linkings", cmd_linkings},
      {"obstruct", cmd_obstruct}, {"normalize", cmd_normalize}, {"selftest", cmd_selftest}, {"corpus", cmd_corpus},
  };
  const auto fn = table.at(cfg.command);
  return guarded(
      [&] {
        if (json_input && read_input(file).kind != InputKind::PatternJson)
          throw std::runtime_error("--json given but '" + file + "' is not a JSON pattern");
        return fn(cfg, std::cout, std::cerr);
      },
      std::cerr);
}
