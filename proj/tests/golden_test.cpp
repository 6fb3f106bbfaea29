#include <gtest/gtest.h>

#include "golden.hpp"

namespace fpred::golden {
namespace {

using nlohmann::json;

TEST(Golden, CliCases) {
  const auto results = run_cases(FPRED_GOLDEN_DIR);
  ASSERT_FALSE(results.empty());
  for (const auto& r : results) EXPECT_TRUE(r.pass) << r.name << ": " << r.message;
}

TEST(Golden, SchemaAcceptsWellFormedOutput) {
  EXPECT_EQ(validate_json("error", json{{"ok", false}}), "");
  EXPECT_EQ(validate_json("check", json{{"ok", true}, {"type", "(tvar 0)"}}), "");
  EXPECT_EQ(validate_json("normalize", json{{"ok", true},
                                            {"type", "(tvar 0)"},
                                            {"normal_form", "(var 0)"},
                                            {"steps", 3}}),
            "");
  EXPECT_EQ(validate_json("hsubst", json{{"ok", true}, {"normal_form", "(var 0)"}}), "");
  EXPECT_EQ(validate_json("measure", json::parse(R"({"ok":true,"measure":{"kinds":[[0,2],[3,1]],"depth":5}})")),
            "");
}

TEST(Golden, SchemaRejectsMalformedOutput) {
  EXPECT_NE(validate_json("error", json{{"ok", true}}), "");
  EXPECT_NE(validate_json("check", json{{"ok", true}}), "");
  EXPECT_NE(validate_json("check", json{{"ok", true}, {"type", "(tvar"}}), "");
  EXPECT_NE(validate_json("check", json{{"ok", true}, {"type", "(tvar 0)"}, {"extra", 1}}), "");
  EXPECT_NE(validate_json("normalize", json{{"ok", true}, {"type", "(tvar 0)"}}), "");
  EXPECT_NE(validate_json("normalize", json{{"ok", true},
                                            {"type", "(tvar 0)"},
                                            {"normal_form", "(var 0)"},
                                            {"steps", -1}}),
            "");
  EXPECT_NE(validate_json("measure", json::parse(R"({"ok":true,"measure":{"kinds":[[3,1],[0,2]],"depth":5}})")),
            "");
  EXPECT_NE(validate_json("measure", json::parse(R"({"ok":true,"measure":{"kinds":[[0,0]],"depth":1}})")),
            "");
  EXPECT_NE(validate_json("measure", json::parse(R"({"ok":true,"measure":{"kinds":[],"depth":0}})")),
            "");
}

}  // namespace
}  // namespace fpred::golden
