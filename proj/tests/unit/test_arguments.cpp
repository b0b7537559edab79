#include <doctest.h>

#include <set>

#include "argument_fixtures.hpp"
#include "match_fixture.hpp"
#include "placement/arguments.hpp"

using namespace placement;

namespace {

std::set<ArgumentCode> codes(const ArgumentReport& r) {
  std::set<ArgumentCode> out;
  for (const Argument& a : r.arguments) out.insert(a.code);
  return out;
}

const Argument* find(const ArgumentReport& r, ArgumentCode code) {
  for (const Argument& a : r.arguments)
    if (a.code == code) return &a;
  return nullptr;
}

}  // namespace

TEST_SUITE("arguments") {
  TEST_CASE("each rule fires on its fixture and not on the twin") {
    const auto cases = testkit::argument_cases();
    REQUIRE(cases.size() == 12);
    for (const auto& c : cases) {
      const ArgumentReport r = testkit::evaluate_case(c);
      CHECK_MESSAGE(testkit::has_code(r, c.code) == c.fires, c.name);
    }
  }

  TEST_CASE("fixtures reach several distinct subsets") {
    std::set<std::set<ArgumentCode>> subsets;
    for (const auto& c : testkit::argument_cases()) subsets.insert(codes(testkit::evaluate_case(c)));
    CHECK(subsets.size() >= 4);
  }

  TEST_CASE("A1 evidence names the past student") {
    const auto cases = testkit::argument_cases();
    const ArgumentReport r = testkit::evaluate_case(cases[0]);
    const Argument* a1 = find(r, ArgumentCode::A1);
    REQUIRE(a1);
    CHECK(a1->evidence.at("pastStudentId") == "alum");
    CHECK(a1->evidence.at("pastMissionId") == "p1");
    CHECK(a1->evidence.at("cosine").get<double>() == doctest::Approx(1.0));
    CHECK(a1->evidence.at("threshold").get<double>() == 0.8);
  }

  TEST_CASE("A2 evidence lists each concept with its best course") {
    const auto cases = testkit::argument_cases();
    const ArgumentReport report = testkit::evaluate_case(cases[2]);
    const Argument* a2 = find(report, ArgumentCode::A2);
    REQUIRE(a2);
    const json& concepts = a2->evidence.at("concepts");
    REQUIRE(concepts.size() == 2);
    CHECK(concepts[0].at("conceptId") == "a1");
    CHECK(concepts[0].at("mark") == 15);
    CHECK(concepts[1].at("courseId") == "cd");
  }

  TEST_CASE("A2 with an empty competency list is not evaluated") {
    testkit::StoreKit kit = testkit::argument_base();
    kit.store.missions[0].competencies.clear();
    kit.store.missions[0].activityAreas = {"s1"};
    kit.mark("st", "cs", 20);
    const KnowledgeBase kb = testkit::single_cluster_kb(kit.store);
    const Matcher matcher(kit.store, kb);
    const ArgumentReport r = generate_arguments(matcher, "st", "m1", matcher.score("st", "m1"), {});
    CHECK_FALSE(testkit::has_code(r, ArgumentCode::A2));
    CHECK(std::count(r.notes.begin(), r.notes.end(), "A2 not evaluated: mission has no competencies") == 1);
  }

  TEST_CASE("A6 stays silent on a good skill match or a missing candidate record") {
    testkit::StoreKit kit = testkit::argument_base();
    kit.mark("st", "cad", 20);
    kit.store.students[0].candidateRecord->autonomy = 20;
    const KnowledgeBase kb = testkit::single_cluster_kb(kit.store);
    MatchScore score;
    score.skillCos = 0.9;
    const ArgumentReport r = generate_arguments(kit.store.students[0], kit.store.missions[0], kb, score, kit.store, {});
    CHECK_FALSE(testkit::has_code(r, ArgumentCode::A6));

    kit.store.students[0].candidateRecord.reset();
    score.skillCos = 0;
    const ArgumentReport noRecord =
        generate_arguments(kit.store.students[0], kit.store.missions[0], kb, score, kit.store, {});
    CHECK_FALSE(testkit::has_code(noRecord, ArgumentCode::A6));
    CHECK(std::count(noRecord.notes.begin(), noRecord.notes.end(),
                     "A6 not evaluated: student has no candidate record") == 1);
  }

  TEST_CASE("A4 without marks leaves a note") {
    testkit::StoreKit kit = testkit::argument_base();
    const KnowledgeBase kb = testkit::single_cluster_kb(kit.store);
    const ArgumentReport r =
        generate_arguments(kit.store.students[0], kit.store.missions[0], kb, {}, kit.store, {});
    CHECK_FALSE(testkit::has_code(r, ArgumentCode::A4));
    CHECK(std::count(r.notes.begin(), r.notes.end(), "A4 not evaluated: student has no marks") == 1);
  }

  TEST_CASE("arguments come sorted and deterministic") {
    for (const auto& c : testkit::argument_cases()) {
      const ArgumentReport a = testkit::evaluate_case(c);
      CHECK(a == testkit::evaluate_case(c));
      for (std::size_t i = 1; i < a.arguments.size(); ++i)
        CHECK(a.arguments[i - 1].code < a.arguments[i].code);
    }
  }

  TEST_CASE("rendering") {
    Argument a5{ArgumentCode::A5, {{"interestScore", 0.75}, {"threshold", 0.7}}, ""};
    CHECK(render_argument(a5, Locale::En) == "The student is motivated: interest match 0.75 ≥ 0.70.");
    const std::string fr = render_argument(a5, Locale::Fr);
    CHECK(fr == "L'étudiant est motivé : correspondance des intérêts 0.75 ≥ 0.70.");
    Argument a1{ArgumentCode::A1,
                {{"pastStudentId", "s7"}, {"pastMissionId", "p3"}, {"cosine", 0.91}, {"cluster", 0}, {"threshold", 0.8}},
                ""};
    for (Locale l : {Locale::En, Locale::Fr}) {
      const std::string text = render_argument(a1, l);
      CHECK(text.find("s7") != std::string::npos);
      CHECK(text.find("0.91") != std::string::npos);
    }
  }

  TEST_CASE("thresholds are range checked") {
    ArgumentThresholds t;
    CHECK_NOTHROW(t.validate());
    t.theta2Mark = 21;
    CHECK_THROWS_AS(t.validate(), std::invalid_argument);
    t = {};
    t.theta1 = 1.5;
    CHECK_THROWS_AS(t.validate(), std::invalid_argument);
  }

  TEST_CASE("raising theta1 never adds A1") {
    const double steps[] = {0.0, 0.2, 0.4, 0.6, 0.8, 0.9, 0.95, 0.99, 1.0};
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      const testkit::MatchFixture f = testkit::random_match_fixture(seed);
      const Matcher matcher(f.store, f.kb);
      for (const auto& sid : f.studentIds)
        for (const auto& mid : f.missionIds) {
          const MatchScore score = matcher.score(sid, mid);
          bool previous = true;
          for (double theta : steps) {
            ArgumentThresholds t;
            t.theta1 = theta;
            const bool now = testkit::has_code(generate_arguments(matcher, sid, mid, score, t), ArgumentCode::A1);
            CHECK(!(now && !previous));
            previous = now;
          }
        }
    }
  }

  TEST_CASE("A2 and A6 exclude each other when only required courses are marked") {
    Rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
      testkit::StoreKit kit;
      for (int i = 0; i < 3; ++i) {
        kit.term("a" + std::to_string(i), Category::Action);
        kit.term("d" + std::to_string(i), Category::DomainAction);
        kit.course("ca" + std::to_string(i), {"a" + std::to_string(i)});
        kit.course("cd" + std::to_string(i), {"d" + std::to_string(i)});
      }
      kit.company("c1");
      std::vector<Competency> comps;
      for (int c = 0, n = 1 + static_cast<int>(rng.below(2)); c < n; ++c)
        comps.push_back({"a" + std::to_string(rng.below(3)), "d" + std::to_string(rng.below(3))});
      kit.mission("m1", "c1", comps);
      kit.student("st").candidateRecord->autonomy = 20;
      std::set<std::string> marked;
      for (const Competency& c : comps)
        for (const std::string& course : {"c" + c.action, "c" + c.domainAction})
          if (marked.insert(course).second) kit.mark("st", course, 12 + static_cast<double>(rng.below(9)));
      const KnowledgeBase kb = testkit::single_cluster_kb(kit.store);
      const Matcher matcher(kit.store, kb);
      const ArgumentReport r = generate_arguments(matcher, "st", "m1", matcher.score("st", "m1"), {});
      CHECK(testkit::has_code(r, ArgumentCode::A2));
      CHECK_FALSE(testkit::has_code(r, ArgumentCode::A6));
    }
  }

  TEST_CASE("json round trip") {
    const ArgumentReport r = testkit::evaluate_case(testkit::argument_cases()[2]);
    for (const Argument& a : r.arguments) CHECK(parse_as<Argument>(json(a)) == a);
    CHECK(parse_as<ArgumentThresholds>(json(ArgumentThresholds{})) == ArgumentThresholds{});
  }
}
