// lifter: check induct-method arguments against LiFtEr heuristics.
//
//   lifter assert   --case F --args ID --heuristic H [--witness]
//   lifter test-all --case F --args ID [--heuristics DIR] [--include-h7] [--witness]
//   lifter extract  --corpus DIR --out F [--heuristics DIR] [--include-h7]

#include <iostream>

#include "CLI11.hpp"
#include "lifter/cli.hpp"

#ifndef LIFTER_DEFAULT_HEURISTICS_DIR
#define LIFTER_DEFAULT_HEURISTICS_DIR "heuristics"
#endif

int main(int argc, char** argv) {
  CLI::App app{"Evaluate LiFtEr induction heuristics against proof goals and induct arguments"};
  app.require_subcommand(1);

  lifter::AssertOptions assert_opt;
  CLI::App* assert_cmd = app.add_subcommand("assert", "Evaluate one heuristic file");
  assert_cmd->add_option("--case", assert_opt.case_file, "case file (.case)")->required();
  assert_cmd->add_option("--args", assert_opt.args_id, "argument set id within the case")->required();
  assert_cmd->add_option("--heuristic", assert_opt.heuristic_file, "heuristic file (.lifter)")->required();
  assert_cmd->add_flag("--witness", assert_opt.witness, "print a witness for each top-level EX on stderr");

  lifter::TestAllOptions test_opt;
  test_opt.heuristics_dir = LIFTER_DEFAULT_HEURISTICS_DIR;
  CLI::App* test_cmd = app.add_subcommand("test-all", "Evaluate every canonical heuristic");
  test_cmd->add_option("--case", test_opt.case_file, "case file (.case)")->required();
  test_cmd->add_option("--args", test_opt.args_id, "argument set id within the case")->required();
  test_cmd->add_option("--heuristics", test_opt.heuristics_dir, "heuristics directory");
  test_cmd->add_flag("--include-h7", test_opt.include_extended, "also run the extended heuristics");
  test_cmd->add_flag("--witness", test_opt.witness, "print witnesses on stderr");

  lifter::ExtractOptions extract_opt;
  extract_opt.heuristics_dir = LIFTER_DEFAULT_HEURISTICS_DIR;
  CLI::App* extract_cmd = app.add_subcommand("extract", "Write a boolean feature table for a corpus");
  extract_cmd->add_option("--corpus", extract_opt.corpus_dir, "directory of .case files")->required();
  extract_cmd->add_option("--out", extract_opt.out_file, "output CSV file")->required();
  extract_cmd->add_option("--heuristics", extract_opt.heuristics_dir, "heuristics directory");
  extract_cmd->add_flag("--include-h7", extract_opt.include_extended, "also run the extended heuristics");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : lifter::kExitError;
  }

  if (*assert_cmd) return lifter::cmd_assert(assert_opt, std::cout, std::cerr);
  if (*test_cmd) return lifter::cmd_test_all(test_opt, std::cout, std::cerr);
  return lifter::cmd_extract(extract_opt, std::cout, std::cerr);
}
