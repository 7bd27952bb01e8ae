#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "ivgen/ivgen.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Session {
  ivg_context* ctx = nullptr;
  Session() { REQUIRE(ivg_context_new(&ctx) == IVG_OK); }
  ~Session() { ivg_context_free(ctx); }

  json run(const std::string& command, const json& args, int* exit_code = nullptr) {
    ivg_report* report = nullptr;
    const auto status = ivg_run(ctx, command.c_str(), args.dump().c_str(), &report);
    INFO(ivg_last_error(ctx));
    REQUIRE(status == IVG_OK);
    auto out = json::parse(ivg_report_json(report, 0, -1));
    if (exit_code) *exit_code = ivg_report_exit_code(report);
    ivg_report_free(report);
    return out;
  }

  ivg_status fail(const std::string& command, const char* args) {
    ivg_report* report = nullptr;
    const auto status = ivg_run(ctx, command.c_str(), args, &report);
    CHECK(report == nullptr);
    return status;
  }
};

std::string source_path(const std::string& rel) { return std::string(IVGEN_SOURCE_DIR) + "/" + rel; }

void check_golden(const std::string& name, const json& actual) {
  const auto path = source_path("tests/golden/" + name + ".json");
  if (std::getenv("IVGEN_UPDATE_GOLDEN")) {
    std::ofstream(path) << actual.dump(2) << "\n";
    return;
  }
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
  const auto expected = json::parse(in);
  INFO(name);
  CHECK(expected == actual);
}

void check_schema(const json& r) {
  REQUIRE(r.is_object());
  CHECK(r.at("schema") == "ivgen.report/1");
  CHECK(r.at("command").is_string());
  CHECK(r.at("status").is_string());
  const auto& s = r.at("summary");
  std::size_t pass = 0, fail = 0, skip = 0;
  for (const auto& c : r.at("claims")) {
    CHECK(c.at("id").is_string());
    CHECK(c.at("details").is_object());
    CHECK_FALSE(c.contains("elapsed_ms"));
    const auto status = c.at("status").get<std::string>();
    if (status == "PASS") ++pass;
    if (status == "FAIL") {
      ++fail;
      CHECK(c.contains("witness"));
    }
    if (status == "SKIP") {
      ++skip;
      CHECK(c.contains("reason"));
    }
  }
  CHECK(s.at("pass") == pass);
  CHECK(s.at("fail") == fail);
  CHECK(s.at("skip") == skip);
  CHECK(r.at("status") == (fail ? "FAIL" : "PASS"));
}

}  // namespace

TEST_CASE("command list") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ivg_command_count(); ++i) names.emplace_back(ivg_command_name(i));
  for (const char* required : {"invgen", "alternating", "mathieu", "coset-homology", "brown-euler", "smith-check", "zsigmondy",
                               "table2", "table1", "lemma6", "corpus"}) {
    CHECK(std::find(names.begin(), names.end(), required) != names.end());
  }
  CHECK(ivg_command_name(ivg_command_count()) == nullptr);
}

TEST_CASE("coset homology of S3 from the group file") {
  // P(S3, -1) = 1 - 3*3 - 1*2 + 3*6 = 8 from the Mobius values 1, -1 (x3), -1, 3.
  Session s;
  int code = -1;
  const auto r = s.run("coset-homology", {{"group", source_path("data/s3.grp")}, {"field", "Q"}}, &code);
  check_schema(r);
  CHECK(code == 0);
  const auto& d = r["claims"][0]["details"];
  CHECK(d["homology"]["euler"] == -8);
  CHECK(d["zeta_at_minus_one"] == 8);
  CHECK(d["homology"]["betti"] == json::array({0, 0, 8}));
  check_golden("coset_homology_s3", r);
}

TEST_CASE("zsigmondy reports") {
  Session s;
  const auto none = s.run("zsigmondy", {{"q", 2}, {"e", 6}});
  check_schema(none);
  CHECK(none["claims"][0]["details"]["primes"].empty());
  CHECK(none["claims"][0]["details"]["exception"] == true);
  check_golden("zsigmondy_2_6", none);

  // Phi_5(3) = 81 + 27 + 9 + 3 + 1 = 121 = 11^2
  const auto eleven = s.run("zsigmondy", {{"q", 3}, {"e", 5}});
  CHECK(eleven["claims"][0]["details"]["primes"] == json::array({11}));
  CHECK(eleven["claims"][0]["details"]["cyclotomic_value"] == "121");
  check_golden("zsigmondy_3_5", eleven);
}

TEST_CASE("invgen on A5") {
  Session s;
  int code = -1;
  const auto yes = s.run("invgen", {{"named", "A5"}, {"left_order", 5}, {"right_order", 3}}, &code);
  check_schema(yes);
  CHECK(code == 0);
  const auto& v = yes["claims"][0]["details"]["verdict"];
  CHECK(v["holds"] == true);
  CHECK(v["witness_cycles"].is_null());
  CHECK(v.contains("scanned"));
  check_golden("invgen_a5", yes);

  const auto no = s.run("invgen", {{"named", "A5"}, {"left", {"(0 1 2)"}}, {"right", {"(0 1 2)"}}}, &code);
  check_schema(no);
  CHECK(code == 1);
  CHECK(no["claims"][0]["details"]["verdict"]["witness_cycles"] == "()");
}

TEST_CASE("single-row reports are pinned") {
  Session s;
  check_golden("lemma6", s.run("lemma6", json::object()));
  check_golden("table1_m11", s.run("table1", {{"name", "M11"}}));
  check_golden("table2_e8_2", s.run("table2", {{"family", "E8"}, {"rank", 8}, {"q", 2}}));
  check_golden("alternating_5", s.run("alternating", {{"n", "5"}}));
  const auto b = s.run("brown-euler", {{"named", "A4"}, {"normal_order", 4}});
  check_schema(b);
  CHECK(b["summary"]["pass"] == 3);
  check_golden("brown_euler_a4", b);
}

TEST_CASE("reports are deterministic single-threaded") {
  Session s;
  const json args{{"named", "S4"}, {"field", "F2"}};
  CHECK(s.run("coset-homology", args) == s.run("coset-homology", args));
}

TEST_CASE("error codes") {
  Session s;
  CHECK(s.fail("frobnicate", nullptr) == IVG_ERR_INVALID_ARGUMENT);
  CHECK(std::string(ivg_last_error(s.ctx)).find("frobnicate") != std::string::npos);
  CHECK(s.fail("zsigmondy", "{not json") == IVG_ERR_PARSE);
  CHECK(s.fail("zsigmondy", R"({"q": 2})") == IVG_ERR_INVALID_ARGUMENT);
  CHECK(s.fail("zsigmondy", R"({"q": "two", "e": 3})") == IVG_ERR_INVALID_ARGUMENT);
  CHECK(s.fail("coset-homology", R"({"group": "/definitely/missing.grp"})") == IVG_ERR_IO);
  CHECK(s.fail("table1", R"({"name": "M13"})") == IVG_ERR_NOT_FOUND);

  const json bad_file{{"group", source_path("tests/golden/malformed.grp")}};
  CHECK(s.fail("coset-homology", bad_file.dump().c_str()) == IVG_ERR_PARSE);

  ivg_report* report = nullptr;
  CHECK(ivg_run(nullptr, "lemma6", nullptr, &report) == IVG_ERR_NULL_POINTER);
  CHECK(ivg_run(s.ctx, nullptr, nullptr, &report) == IVG_ERR_NULL_POINTER);
  CHECK(ivg_context_new(nullptr) == IVG_ERR_NULL_POINTER);
}

TEST_CASE("a cap that is hit turns the claim into SKIP") {
  Session s;
  int code = -1;
  const auto r = s.run("coset-homology", {{"named", "A5"}, {"cap_lattice", 5}}, &code);
  check_schema(r);
  CHECK(code == 0);
  CHECK(r["claims"][0]["status"] == "SKIP");
  CHECK(r["claims"][0]["reason"].get<std::string>().find("cap exceeded") == 0);
}

TEST_CASE("group handles") {
  Session s;
  ivg_group* g = nullptr;
  REQUIRE(ivg_group_named(s.ctx, "M11", &g) == IVG_OK);
  CHECK(ivg_group_order(g) == 7920);
  CHECK(ivg_group_degree(g) == 11);
  const std::string text = ivg_group_text(g);
  ivg_group_free(g);

  g = nullptr;
  REQUIRE(ivg_group_parse(s.ctx, text.c_str(), &g) == IVG_OK);
  CHECK(ivg_group_order(g) == 7920);
  ivg_group_free(g);

  g = nullptr;
  CHECK(ivg_group_named(s.ctx, "M13", &g) == IVG_ERR_NOT_FOUND);
  CHECK(g == nullptr);
  CHECK(ivg_group_parse(s.ctx, "degree 3\n(0 1 5)\n", &g) != IVG_OK);
  CHECK(ivg_named_group_count() > 0);
}
