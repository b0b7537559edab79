#include <doctest.h>

#include "placement/config.hpp"

using namespace placement;

TEST_SUITE("config") {
  TEST_CASE("defaults") {
    const Config c = parse_config("{}");
    CHECK(c == Config{});
    CHECK(c.matchWeights == MatchWeights{0.6, 0.2, 0.2});
    CHECK(c.objectiveWeights.wMatch == 1.0);
    CHECK(c.objectiveWeights.wInterest == 0.25);
    CHECK(c.objectiveWeights.wUnassigned == 2.0);
    CHECK(c.objectiveWeights.penalty == 10.0);
    CHECK(c.gaParams.populationSize == 100);
    CHECK(c.gaParams.generations == 500);
    CHECK(c.gaParams.stagnationLimit == 50);
    CHECK(c.gaParams.tournamentSize == 3);
    CHECK(c.gaParams.crossoverRate == 0.9);
    CHECK(c.gaParams.elitism == 2);
    CHECK(c.gaParams.seed == 42);
    CHECK(c.thresholds.theta1 == 0.8);
    CHECK(c.thresholds.theta2Mark == 12);
    CHECK(c.thresholds.theta3Proto == 0.85);
    CHECK(c.thresholds.theta3Risk == 0.2);
    CHECK(c.thresholds.theta4 == 14);
    CHECK(c.thresholds.theta5 == 0.7);
    CHECK(c.thresholds.theta6Skill == 0.4);
    CHECK(c.thresholds.theta6Autonomy == 14);
    CHECK(c.clustering.kMin == 2);
    CHECK(c.clustering.kMax == 8);
    CHECK_FALSE(c.clustering.k.has_value());
    CHECK(c.locale == "en");
    CHECK(c.argument_locale() == Locale::En);
    CHECK_FALSE(c.authToken.has_value());
  }

  TEST_CASE("partial documents keep the other defaults") {
    const Config c = parse_config(R"({"gaParams": {"seed": 7}, "locale": "fr", "clustering": {"k": 3}})");
    CHECK(c.gaParams.seed == 7);
    CHECK(c.gaParams.populationSize == 100);
    CHECK(c.argument_locale() == Locale::Fr);
    CHECK(c.clustering.k == 3);
    CHECK(c.matchWeights == MatchWeights{});
  }

  TEST_CASE("round trip") {
    Config c;
    c.authToken = "secret";
    c.gaParams.mutationRate = 0.05;
    c.clustering.k = 4;
    c.listen.port = 0;
    CHECK(parse_config(json(c).dump()) == c);
  }

  TEST_CASE("rejections") {
    CHECK_THROWS_AS(parse_config("{"), SchemaError);
    CHECK_THROWS_AS(parse_config("[]"), SchemaError);
    CHECK_THROWS_AS(parse_config(R"({"colour": 1})"), SchemaError);
    CHECK_THROWS_AS(parse_config(R"({"gaParams": {"seeds": 1}})"), SchemaError);
    CHECK_THROWS_AS(parse_config(R"({"gaParams": {"seed": "x"}})"), SchemaError);
    CHECK_THROWS_AS(parse_config(R"({"matchWeights": {"alpha": 0.5, "beta": 0.2, "gamma": 0.2}})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_config(R"({"thresholds": {"theta1": 1.5}})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config(R"({"thresholds": {"theta4": 21}})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config(R"({"gaParams": {"populationSize": 1}})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config(R"({"objectiveWeights": {"penalty": -1}})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config(R"({"clustering": {"kMin": 5, "kMax": 2}})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config(R"({"clustering": {"k": 0}})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config(R"({"locale": "de"})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config(R"({"listen": {"port": 70000}})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config(R"({"storage": {"storeFile": ""}})"), std::invalid_argument);
  }
}
