// bxp: query and survey partition-preserving transformation semigroups.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "bxp/commands.hpp"

using namespace bxp::cli;

int main(int argc, char** argv) {
  CLI::App app{"Green's relations and regularity in B(X,P)"};
  app.require_subcommand(1);

  std::map<std::string, Format> const formats{
      {"text", Format::text}, {"structured", Format::structured}};
  std::string relation = "L";

  CheckOptions check;
  auto*        check_cmd = app.add_subcommand(
      "check", "decide a Green's relation or preorder between two maps");
  check_cmd->add_option("file", check.file, "instance file")->required();
  check_cmd->add_option("f", check.f, "name of the first map")->required();
  check_cmd->add_option("g", check.g, "name of the second map")->required();
  check_cmd->add_option("--relation", relation)
      ->check(CLI::IsMember({"L", "R", "H", "D", "J", "leqL", "leqR", "leqJ"}))
      ->capture_default_str();
  check_cmd->add_option("--format", check.format)
      ->transform(CLI::CheckedTransformer(formats))
      ->option_text("text|structured");

  WitnessOptions witness;
  auto*          witness_cmd
      = app.add_subcommand("witness", "construct g with fgf = f");
  witness_cmd->add_option("file", witness.file, "instance file")->required();
  witness_cmd->add_option("f", witness.f, "name of the map")->required();
  witness_cmd->add_flag("--unit", witness.unit, "require g to be a unit");
  witness_cmd->add_option("--format", witness.format)
      ->transform(CLI::CheckedTransformer(formats))
      ->option_text("text|structured");

  SweepOptions survey;
  auto*        survey_cmd = app.add_subcommand(
      "survey", "cross-check every characterization against the oracle");
  SweepOptions conjecture;
  auto*        conjecture_cmd = app.add_subcommand(
      "conjecture", "per-element size-profile conditions and D_f = J_f");
  for (auto [cmd, opts] : {std::pair{survey_cmd, &survey},
                           std::pair{conjecture_cmd, &conjecture}}) {
    cmd->add_option("partition", opts->partition, "blocks, e.g. [[0,1],[2,3]]")
        ->required();
    cmd->add_option("--cap", opts->cap, "maximum |B(X,P)|")
        ->capture_default_str();
    cmd->add_option("--threads", opts->threads, "worker threads (0 = auto)");
    cmd->add_option("--format", opts->format)
        ->transform(CLI::CheckedTransformer(formats))
        ->option_text("text|structured");
  }

  DumpOptions dump;
  auto*       dump_cmd
      = app.add_subcommand("dump", "write the enumerated table as JSON");
  dump_cmd->add_option("partition", dump.partition, "blocks")->required();
  dump_cmd->add_option("--cap", dump.cap)->capture_default_str();
  dump_cmd->add_option("-o,--output", dump.output, "output file (- for stdout)");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : exit_input_error;
  }

  if (*check_cmd) {
    check.relation = *parse_relation(relation);
    return cmd_check(check, std::cout, std::cerr);
  }
  if (*witness_cmd) {
    return cmd_witness(witness, std::cout, std::cerr);
  }
  if (*survey_cmd) {
    return cmd_survey(survey, std::cout, std::cerr);
  }
  if (*conjecture_cmd) {
    return cmd_conjecture(conjecture, std::cout, std::cerr);
  }
  return cmd_dump(dump, std::cout, std::cerr);
}
