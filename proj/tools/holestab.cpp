// Command-line front end: one subcommand per report, text or JSON output.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "holestab/commands.hpp"

namespace {

int emit(const std::vector<holestab::RunReport>& reports, bool json) {
  bool ok = true, errored = false;
  if (json) {
    if (reports.size() == 1) {
      std::cout << holestab::to_json(reports.front()).dump(2) << '\n';
    } else {
      holestab::Json all = holestab::Json::array();
      for (const auto& r : reports) all.push_back(holestab::to_json(r));
      std::cout << all.dump(2) << '\n';
    }
  }
  for (const auto& r : reports) {
    if (!json) std::cout << holestab::to_text(r);
    ok = ok && r.ok();
    errored = errored || r.error.has_value();
  }
  if (errored) return 2;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hole stabilizers, puzzle sets and codes of 4-hypergraphs"};
  app.require_subcommand(1);

  bool json = false;
  holestab::CommandOptions opt;
  app.add_flag("--json", json, "Emit the report as JSON (schema holestab-report/1)");
  app.add_option("--seed", opt.seed, "Seed for every sampled check");
  app.add_option("--cap", opt.puzzle_cap, "Largest puzzle set to build")->envname("HOLESTAB_CAP");
  app.add_option("--enum-cap", opt.enumeration_cap, "Largest group enumerated for the exact minimal degree")
      ->envname("HOLESTAB_ENUM_CAP");

  std::string source;
  auto add_source = [&](CLI::App* sub) {
    sub->add_option("source", source, "gallery:<id>[:<param>] or a design file")->required();
  };
  auto add_hole = [&](CLI::App* sub) { sub->add_option("--hole", opt.hole, "Hole point (default 0)"); };

  auto* check = app.add_subcommand("check", "Validate a design and report its parameters");
  add_source(check);

  auto* stabilizer = app.add_subcommand("stabilizer", "Classify the hole stabilizer");
  add_source(stabilizer);
  add_hole(stabilizer);

  std::string table;
  auto* reproduce = app.add_subcommand("reproduce", "Recompute published values and compare");
  std::vector<std::string> tables = holestab::reproducible_tables();
  tables.push_back("all");
  reproduce->add_option("table", table, "Which comparison to run")->required()->check(CLI::IsMember(tables));

  auto* puzzle = app.add_subcommand("puzzle-set", "Build the set of all move-sequence evaluations");
  add_source(puzzle);
  add_hole(puzzle);

  holestab::Point from = 0, to = 0;
  auto* transport = app.add_subcommand("transport", "Walk between two holes and conjugate their stabilizers");
  add_source(transport);
  transport->add_option("from", from)->required();
  transport->add_option("to", to)->required();

  auto* audit = app.add_subcommand("audit", "Check the partial-group and objectivity axioms on bounded words");
  add_source(audit);
  audit->add_option("--max-word-len", opt.audit.max_word_len, "Letters per word")->capture_default_str();
  audit->add_option("--letter-points", opt.audit.letter_points, "Points per letter")->capture_default_str();
  audit->add_option("--full-limit", opt.audit.full_limit, "Enumerate every word up to this many")
      ->capture_default_str();
  audit->add_option("--samples", opt.audit.samples, "Words sampled above the limit")->capture_default_str();

  auto* boolean = app.add_subcommand("boolean", "Run the Boolean recognizer and the trivial-stabilizer check");
  add_source(boolean);
  add_hole(boolean);

  auto* code = app.add_subcommand("code", "Binary code of the incidence matrix with punctured and shortened codes");
  add_source(code);
  code->add_option("--coordinate", opt.coordinate, "Coordinate to puncture and shorten")->capture_default_str();
  code->add_flag("--sweep", opt.sweep, "Repeat at every coordinate and compare");

  app.add_subcommand("gallery", "List the built-in designs");

  std::string generators;
  std::vector<holestab::Point> block;
  auto* orbit = app.add_subcommand("orbit-design", "Lines from the orbit of a 4-set under a permutation group");
  orbit->add_option("generators", generators, "Generator file, one image list per line")->required();
  orbit->add_option("block", block, "Four base-block points")->required()->expected(4);

  CLI11_PARSE(app, argc, argv);

  std::vector<holestab::RunReport> reports;
  if (check->parsed()) reports.push_back(holestab::cmd_check(source));
  if (stabilizer->parsed()) reports.push_back(holestab::cmd_stabilizer(source, opt));
  if (reproduce->parsed()) {
    if (table == "all")
      for (const auto& t : holestab::reproducible_tables()) reports.push_back(holestab::cmd_reproduce(t, opt));
    else
      reports.push_back(holestab::cmd_reproduce(table, opt));
  }
  if (puzzle->parsed()) reports.push_back(holestab::cmd_puzzle_set(source, opt));
  if (transport->parsed()) reports.push_back(holestab::cmd_transport(source, from, to, opt));
  if (audit->parsed()) reports.push_back(holestab::cmd_audit(source, opt));
  if (boolean->parsed()) reports.push_back(holestab::cmd_boolean(source, opt));
  if (code->parsed()) reports.push_back(holestab::cmd_code(source, opt));
  if (app.got_subcommand("gallery")) reports.push_back(holestab::cmd_gallery_list());
  if (orbit->parsed()) reports.push_back(holestab::cmd_orbit_design(generators, {block[0], block[1], block[2], block[3]}, opt));
  return emit(reports, json);
}
