#include <doctest.h>

#include <cstdlib>

#include "edgepow/survey.hpp"

using namespace edgepow;

TEST_CASE("check names") {
  CHECK(parse_survey_checks("all").size() == 7);
  CHECK(parse_survey_checks("ex2,ex1") == std::vector<SurveyCheck>{SurveyCheck::Ex1, SurveyCheck::Ex2});
  CHECK(survey_check_name(SurveyCheck::Cor16) == "cor16");
  CHECK_THROWS_AS(parse_survey_checks("ex4"), ParseError);
}

TEST_CASE("cap from the environment") {
  ::unsetenv("EDGEPOW_MAX_N");
  CHECK(survey_cap_from_env() == kSurveyCap);
  ::setenv("EDGEPOW_MAX_N", "9", 1);
  CHECK(survey_cap_from_env() == 9);
  ::setenv("EDGEPOW_MAX_N", "nine", 1);
  CHECK_THROWS_AS(survey_cap_from_env(), ParseError);
  ::unsetenv("EDGEPOW_MAX_N");
}

TEST_CASE("cap is enforced") {
  SurveyOptions o;
  o.max_n = 9;
  o.checks = parse_survey_checks("ex1");
  CHECK_THROWS_AS(run_survey(o), std::invalid_argument);
}

TEST_CASE("small survey is clean and independent of worker count") {
  SurveyOptions o;
  o.max_n = 5;
  o.checks = parse_survey_checks("all");
  const SurveyResult one = run_survey(o);
  CHECK(one.discrepancies.empty());
  CHECK(one.summaries.size() == 7);
  o.workers = 3;
  const SurveyResult three = run_survey(o);
  CHECK(three.summaries == one.summaries);
  CHECK(three.graphs == one.graphs);
  const Json j = survey_to_json(one);
  CHECK(j["discrepancies"].empty());
  CHECK(j["corpus"]["graphs"] == one.graphs);
}

TEST_CASE("bipartite corpus sizes") {
  SurveyOptions o;
  o.max_n = 4;
  o.bipartite = true;
  o.include_isolated = true;
  o.checks = parse_survey_checks("ex1");
  const SurveyResult r = run_survey(o);
  CHECK(r.graphs_per_n.at(4) == 41);
  CHECK(r.graphs_per_n.at(1) == 1);
}
