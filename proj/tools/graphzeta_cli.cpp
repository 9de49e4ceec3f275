#include "graphzeta/commands.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

struct CliOptions {
  std::string input_path;
  std::string scheme;
  std::string eval_q;
  std::string format = "human";
  graphzeta::CommandConfig config;
};

void add_common_options(CLI::App* sub, CliOptions& o, bool needs_input) {
  if (needs_input)
    sub->add_option("--input", o.input_path, "instance document (JSON)")->required();
  sub->add_option("--scheme", o.scheme,
                  "preset override: GENERAL, IHARA, BOWEN_LANFORD, MIZUNO_SATO, SATO, BARTHOLDI");
  sub->add_option("--eval-q", o.eval_q, "evaluate BARTHOLDI at this rational q");
  sub->add_option("-T,--truncation", o.config.truncation, "series/path truncation order");
  sub->add_option("--format", o.format, "output format: human, coeffs, json")
      ->check(CLI::IsMember({"human", "coeffs", "json"}));
  sub->add_option("--max-paths", o.config.max_paths,
                  "candidate budget for closed-path enumeration");
  sub->add_flag("--reduced", o.config.reduced, "restrict to backtrack-free closed paths");
}

int emit(const graphzeta::CommandResult& result) {
  if (result.exit_code == graphzeta::kExitOk || result.exit_code == graphzeta::kExitMismatch)
    std::cout << result.output;
  else
    std::cerr << result.output;
  return result.exit_code;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact zeta expressions of weighted digraphs"};
  app.require_subcommand(1);

  CliOptions o;

  CLI::App* hashimoto = app.add_subcommand("hashimoto", "arc-side determinant polynomial");
  CLI::App* ihara = app.add_subcommand("ihara", "vertex-side expression polynomial");
  CLI::App* verify = app.add_subcommand("verify", "compare both sides of the main identity");
  CLI::App* series = app.add_subcommand("series", "exp/euler/determinant series to order T");
  CLI::App* nm = app.add_subcommand("nm", "weighted closed-path counts N_1..N_T");
  CLI::App* lyndon = app.add_subcommand("lyndon", "Lyndon words over an n-letter alphabet");
  CLI::App* classical = app.add_subcommand("classical", "classical closed form for a graph input");

  add_common_options(hashimoto, o, true);
  add_common_options(ihara, o, true);
  add_common_options(verify, o, true);
  add_common_options(series, o, true);
  add_common_options(nm, o, true);
  add_common_options(classical, o, true);
  lyndon->add_option("-n,--alphabet", o.config.alphabet, "alphabet size")->required();
  lyndon->add_option("-T,--truncation", o.config.truncation, "maximum word length");
  lyndon->add_option("--format", o.format, "output format: human, coeffs, json")
      ->check(CLI::IsMember({"human", "coeffs", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return graphzeta::kExitUsage;
  }

  if (hashimoto->parsed()) o.config.command = graphzeta::Command::Hashimoto;
  if (ihara->parsed()) o.config.command = graphzeta::Command::Ihara;
  if (verify->parsed()) o.config.command = graphzeta::Command::Verify;
  if (series->parsed()) o.config.command = graphzeta::Command::Series;
  if (nm->parsed()) o.config.command = graphzeta::Command::Nm;
  if (lyndon->parsed()) o.config.command = graphzeta::Command::Lyndon;
  if (classical->parsed()) o.config.command = graphzeta::Command::Classical;

  if (o.format == "coeffs") o.config.format = graphzeta::OutputFormat::Coeffs;
  if (o.format == "json") o.config.format = graphzeta::OutputFormat::Json;

  if (o.config.command == graphzeta::Command::Lyndon)
    return emit(graphzeta::run_lyndon(o.config));

  graphzeta::ParseOverrides overrides;
  if (!o.scheme.empty()) {
    auto preset = graphzeta::preset_from_name(o.scheme);
    if (!preset) {
      std::cerr << "error: unknown scheme '" << o.scheme << "'\n";
      return graphzeta::kExitUsage;
    }
    overrides.preset = preset;
  }
  if (!o.eval_q.empty()) {
    auto q = graphzeta::Rational::parse(o.eval_q);
    if (!q) {
      std::cerr << "error: --eval-q expects an exact rational like 2/3\n";
      return graphzeta::kExitUsage;
    }
    overrides.eval_q = q;
  }

  std::ifstream in(o.input_path);
  if (!in) {
    std::cerr << "error: cannot open input file '" << o.input_path << "'\n";
    return graphzeta::kExitUsage;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();

  graphzeta::ParsedInput input;
  try {
    input = graphzeta::parse_spec(buffer.str(), overrides);
  } catch (const graphzeta::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return graphzeta::kExitUsage;
  }

  return emit(graphzeta::run_command(o.config, input));
}
