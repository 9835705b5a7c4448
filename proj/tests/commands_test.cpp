#include <gtest/gtest.h>

#include "holestab/commands.hpp"

using namespace holestab;

namespace {

const std::string kData = HOLESTAB_DATA_DIR;

bool all_pass(const RunReport& r) {
  for (const auto& c : r.checks)
    if (!c.pass) return false;
  return !r.checks.empty();
}

}  // namespace

TEST(Report, JsonRoundTrip) {
  RunReport r;
  r.command = "demo";
  r.inputs = {"gallery:p3"};
  r.seed = 17;
  r.results["order"] = order_json(Order(95040));
  r.results["big"] = order_json(factorial(25));
  r.check("equal", 1, 1);
  r.check("differs", "a", "b");
  r.violations.push_back({"rule", "witness"});
  r.elapsed_ms = 1.5;
  const Json j = to_json(r);
  EXPECT_EQ(j.at("schema"), kReportSchema);
  EXPECT_EQ(j.at("results").at("order"), 95040);
  EXPECT_EQ(j.at("results").at("big"), "15511210043330985984000000");
  EXPECT_FALSE(j.at("ok").get<bool>());
  const RunReport back = report_from_json(Json::parse(j.dump()));
  EXPECT_EQ(to_json(back), j);
  EXPECT_THROW(report_from_json(Json{{"schema", "other"}}), Error);
}

TEST(Report, TextAndErrors) {
  const RunReport ok = run_command("noop", {}, 0, [](RunReport& r) { r.check("one", 1, 1); });
  EXPECT_TRUE(ok.ok());
  EXPECT_NE(to_text(ok).find("PASS one"), std::string::npos);
  const RunReport bad = run_command("boom", {}, 0, [](RunReport&) { throw Error("broken"); });
  EXPECT_FALSE(bad.ok());
  EXPECT_EQ(bad.error, "broken");
  EXPECT_NE(to_text(bad).find("ERROR broken"), std::string::npos);
}

TEST(Commands, CheckReportsDesignCounts) {
  const auto p3 = cmd_check("gallery:p3");
  ASSERT_TRUE(p3.ok()) << to_text(p3);
  EXPECT_EQ(p3.results.at("lambda"), 1);
  EXPECT_EQ(p3.results.at("lines"), 13);
  EXPECT_EQ(cmd_check("gallery:boolean:4").results.at("lambda"), 7);
  const auto bad = cmd_check(kData + "/malformed.design");
  ASSERT_TRUE(bad.error.has_value());
  EXPECT_NE(bad.error->find("line 4"), std::string::npos) << *bad.error;
  EXPECT_TRUE(cmd_check(kData + "/fano_complement.design").ok());
  EXPECT_TRUE(cmd_check("/nonexistent/file").error.has_value());
}

TEST(Commands, Stabilizer) {
  const auto p3 = cmd_stabilizer("gallery:p3");
  ASSERT_TRUE(p3.ok()) << to_text(p3);
  const Json& g = p3.results.at("group");
  EXPECT_EQ(g.at("order"), 95040);
  EXPECT_EQ(g.at("primitive"), true);
  EXPECT_EQ(g.at("max_transitivity"), 5);
  EXPECT_EQ(g.at("label"), "M12 (evidence)");
  const auto ten = cmd_stabilizer("gallery:10-4-2");
  EXPECT_EQ(ten.results.at("group").at("order"), 72);
  EXPECT_EQ(ten.results.at("group").at("primitive"), true);
  EXPECT_EQ(cmd_stabilizer("gallery:boolean:3").results.at("group").at("order"), 1);
  CommandOptions opt;
  opt.hole = 3;
  const auto file = cmd_stabilizer(kData + "/fano_complement.design", opt);
  EXPECT_TRUE(file.ok()) << to_text(file);
  EXPECT_EQ(file.results.at("group").at("order"), 720);
}

TEST(Commands, PuzzleSetTransportBooleanCode) {
  const auto ps = cmd_puzzle_set("gallery:10-4-2");
  ASSERT_TRUE(ps.ok()) << to_text(ps);
  EXPECT_EQ(ps.results.at("size"), 720);
  EXPECT_EQ(ps.results.at("is_group"), true);
  EXPECT_EQ(ps.results.at("primitive"), true);

  const auto tr = cmd_transport("gallery:p3", 0, 7);
  EXPECT_TRUE(all_pass(tr)) << to_text(tr);

  EXPECT_TRUE(all_pass(cmd_boolean("gallery:boolean:3")));
  EXPECT_EQ(cmd_boolean("gallery:p3").results.at("boolean"), false);

  CommandOptions opt;
  opt.sweep = true;
  const auto code = cmd_code("gallery:10-4-2", opt);
  EXPECT_TRUE(all_pass(code)) << to_text(code);
  EXPECT_EQ(code.results.at("row"), (Json{10, 2, 5, 3, 3, 2, 2, 3, 5}));
}

TEST(Commands, AuditOrbitDesignGallery) {
  CommandOptions opt;
  opt.audit.max_word_len = 2;
  opt.audit.letter_points = 2;
  const auto audit = cmd_audit("gallery:7-4-2", opt);
  EXPECT_TRUE(audit.ok()) << to_text(audit);
  EXPECT_EQ(audit.results.at("objectivity").at("sampled"), false);

  const auto orbit = cmd_orbit_design(kData + "/z13_shift.gens", {0, 1, 3, 9});
  ASSERT_TRUE(orbit.ok()) << to_text(orbit);
  EXPECT_EQ(orbit.results.at("design").at("lambda"), 1);
  EXPECT_EQ(orbit.results.at("not_a_2_design"), false);

  EXPECT_GE(cmd_gallery_list().results.at("designs").size(), 7u);
}

TEST(Commands, ReproduceEveryTable) {
  for (const auto& table : reproducible_tables()) {
    const auto r = cmd_reproduce(table);
    EXPECT_TRUE(r.ok()) << to_text(r);
    EXPECT_TRUE(all_pass(r)) << table;
  }
  EXPECT_TRUE(cmd_reproduce("nope").error.has_value());
}

TEST(Commands, ReportsAreDeterministic) {
  CommandOptions opt;
  opt.seed = 5;
  opt.audit.max_word_len = 2;
  opt.audit.full_limit = 100;
  opt.audit.samples = 200;
  auto a = to_json(cmd_audit("gallery:boolean:3", opt));
  auto b = to_json(cmd_audit("gallery:boolean:3", opt));
  a.erase("elapsed_ms");
  b.erase("elapsed_ms");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.at("results").at("partial_group").at("sampled"), true);
}
