// Exercises the shared library through its C header only.

#include <gtest/gtest.h>

#include <cstring>
#include <string>

#include "starricci/starricci.h"

namespace {

struct Session {
  sr_session* s = nullptr;
  Session() { EXPECT_EQ(sr_session_create(&s), SR_OK); }
  ~Session() { sr_session_destroy(s); }
};

std::string render(const sr_report* r, sr_format f) {
  char* text = nullptr;
  EXPECT_EQ(sr_report_render(r, f, &text), SR_OK);
  std::string out = text ? text : "";
  sr_string_free(text);
  return out;
}

TEST(CApi, VersionAndStatusStrings) {
  EXPECT_STREQ(sr_version(), "1.0.0");
  EXPECT_STREQ(sr_status_string(SR_OK), "ok");
  EXPECT_STREQ(sr_status_string(SR_ERR_DOMAIN), "domain error");
  EXPECT_STREQ(sr_status_string(static_cast<sr_status>(99)), "unknown status");
}

TEST(CApi, NullArguments) {
  EXPECT_EQ(sr_session_create(nullptr), SR_ERR_INVALID_ARGUMENT);
  EXPECT_NE(std::strstr(sr_last_error_message(), "null"), nullptr);
  sr_report* r = nullptr;
  EXPECT_EQ(sr_prove(nullptr, "all", nullptr, &r), SR_ERR_INVALID_ARGUMENT);
  Session s;
  EXPECT_EQ(sr_prove(s.s, nullptr, nullptr, &r), SR_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(sr_check(s.s, "ricci", "parallel", "hopf", nullptr, 1, nullptr, &r), SR_ERR_INVALID_ARGUMENT);
  const char* bad[] = {nullptr};
  EXPECT_EQ(sr_expr_eval(s.s, "1", bad, 1, &r), SR_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(sr_report_render(nullptr, SR_FORMAT_TEXT, nullptr), SR_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(sr_report_passed(nullptr), 0);
  sr_session_destroy(nullptr);
  sr_report_destroy(nullptr);
  sr_string_free(nullptr);
}

TEST(CApi, ProveAllAndJsonRoundTrip) {
  Session s;
  sr_report* r = nullptr;
  ASSERT_EQ(sr_prove(s.s, "all", nullptr, &r), SR_OK);
  EXPECT_STREQ(sr_last_error_message(), "");
  EXPECT_EQ(sr_report_passed(r), 1);
  const std::string text = render(r, SR_FORMAT_TEXT);
  EXPECT_NE(text.find("Main Theorem verified at desk scale"), std::string::npos);
  const std::string json = render(r, SR_FORMAT_JSON);

  sr_report* back = nullptr;
  ASSERT_EQ(sr_report_parse_json(json.c_str(), &back), SR_OK);
  EXPECT_EQ(render(back, SR_FORMAT_JSON), json);
  EXPECT_EQ(render(back, SR_FORMAT_TEXT), text);
  EXPECT_EQ(sr_report_passed(back), 1);
  EXPECT_EQ(sr_report_render(r, static_cast<sr_format>(7), nullptr), SR_ERR_INVALID_ARGUMENT);
  sr_report_destroy(r);
  sr_report_destroy(back);

  EXPECT_EQ(sr_report_parse_json("{not json", &back), SR_ERR_PARSE);
  EXPECT_EQ(sr_report_parse_json("{\"schema\": \"x\"}", &back), SR_ERR_PARSE);
}

TEST(CApi, CheckWithAssumptionsAndL) {
  Session s;
  sr_report* r = nullptr;
  const char* assume[] = {"c=-4"};
  ASSERT_EQ(sr_check(s.s, "star-ricci", "pseudo-parallel", "hopf", assume, 1, "L", &r), SR_OK);
  const std::string text = render(r, SR_FORMAT_TEXT);
  EXPECT_NE(text.find("L = L"), std::string::npos);
  EXPECT_NE(text.find("assumptions: c = -4"), std::string::npos);
  sr_report_destroy(r);
  EXPECT_EQ(sr_check(s.s, "star-ricci", "parallel", "hopf", nullptr, 0, "1/0", &r), SR_ERR_DIVISION_BY_ZERO);
  EXPECT_EQ(sr_check(s.s, "star-ricci", "parallel", "hopf", nullptr, 0, "zeta", &r), SR_ERR_UNKNOWN_SYMBOL);
  EXPECT_EQ(sr_check(s.s, "star-ricci", "parallel", "hopf", nullptr, 0, "(", &r), SR_ERR_PARSE);
}

TEST(CApi, SweepErrorsMapToCodes) {
  Session s;
  sr_report* r = nullptr;
  EXPECT_EQ(sr_sweep(s.s, "nosuch", 0.1, 0.2, 2, "parallel", 0, &r), SR_ERR_CATALOG);
  EXPECT_NE(std::strstr(sr_last_error_message(), "nosuch"), nullptr);
  EXPECT_EQ(sr_sweep(s.s, "cp2-a1", 0.5, 2.0, 5, "parallel", 0, &r), SR_ERR_DOMAIN);
  EXPECT_EQ(sr_sweep(s.s, "cp2-a1", 0.5, 1.0, 1, "parallel", 0, &r), SR_ERR_INVALID_ARGUMENT);
  ASSERT_EQ(sr_sweep(s.s, "cp2-a1", 0.5, 1.0, 4, "parallel", 0, &r), SR_OK);
  EXPECT_EQ(sr_report_passed(r), 1);
  sr_report_destroy(r);
}

TEST(CApi, SessionSettings) {
  Session s;
  EXPECT_EQ(sr_session_set_tolerances(s.s, 0, 1e-6), SR_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(sr_session_set_tolerances(s.s, 1e-10, 1e-3), SR_OK);
  EXPECT_EQ(sr_session_set_samples(s.s, 1), SR_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(sr_session_set_samples(s.s, 20), SR_OK);
  EXPECT_EQ(sr_session_load_catalog(s.s, "/nonexistent/catalog.txt"), SR_ERR_IO);

  sr_report* r = nullptr;
  ASSERT_EQ(sr_sweep(s.s, "ch2-a0", 0, 1, 2, "parallel", 0, &r), SR_OK);
  EXPECT_NE(render(r, SR_FORMAT_TEXT).find("witness tolerance 0.001"), std::string::npos);
  sr_report_destroy(r);
}

TEST(CApi, ExprCommands) {
  Session s;
  sr_report* r = nullptr;
  const char* b[] = {"x=3"};
  ASSERT_EQ(sr_expr_eval(s.s, "x^2 - 1", b, 1, &r), SR_OK);
  EXPECT_NE(render(r, SR_FORMAT_JSON).find("\"value\": \"8\""), std::string::npos);
  sr_report_destroy(r);
  ASSERT_EQ(sr_expr_solve(s.s, "x^2 - 2", "x", &r), SR_OK);
  EXPECT_NE(render(r, SR_FORMAT_TEXT).find("discriminant: 8"), std::string::npos);
  sr_report_destroy(r);
  EXPECT_EQ(sr_expr_solve(s.s, "3", "x", &r), SR_ERR_INCONSISTENT);
  EXPECT_EQ(sr_expr_eval(s.s, "1/(x-x)", nullptr, 0, &r), SR_ERR_DIVISION_BY_ZERO);
}

}  // namespace
