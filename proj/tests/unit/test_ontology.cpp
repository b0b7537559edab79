#include <doctest.h>

#include <algorithm>

#include "placement/store_io.hpp"
#include "placement/validate.hpp"
#include "store_kit.hpp"

using namespace placement;
using testkit::StoreKit;

namespace {

bool has_violation(const ValidationReport& r, const std::string& entity, const std::string& message) {
  return std::any_of(r.begin(), r.end(), [&](const Violation& v) {
    return v.entityId == entity && v.message == message;
  });
}

StoreKit small_store() {
  StoreKit kit;
  kit.term("a1", Category::Action).term("d1", Category::DomainAction);
  kit.term("s1", Category::ActivityArea).term("k1", Category::SkillKeyword);
  kit.company("c1", "Acme");
  kit.mission("m1", "c1", {{"a1", "d1"}}, {"s1"});
  kit.student("st1");
  kit.course("co1", {"a1", "d1"}, 2).mark("st1", "co1", 14);
  return kit;
}

}  // namespace

TEST_SUITE("ontology") {
  TEST_CASE("empty store is valid") { CHECK(validate_store(InstanceStore{}).empty()); }

  TEST_CASE("small fixture is valid") { CHECK(validate_store(small_store().store).empty()); }

  TEST_CASE("mark above 20 is reported") {
    StoreKit kit = small_store();
    kit.store.marks[0].value = 25;
    CHECK(has_violation(validate_store(kit.store), "mark:st1:co1", "value out of [0,20]"));
  }

  TEST_CASE("dangling past placement mission is reported") {
    StoreKit kit = small_store();
    kit.past("m99", "st1");
    CHECK(has_violation(validate_store(kit.store), "placement:m99:st1", "unresolved missionId m99"));
  }

  TEST_CASE("every violation is listed") {
    StoreKit kit = small_store();
    kit.store.marks[0].value = -1;
    kit.store.missions[0].capacity = 0;
    kit.store.students[0].administrative.email.clear();
    kit.past("m99", "nobody");
    const ValidationReport r = validate_store(kit.store);
    CHECK(r.size() >= 5);
    CHECK(has_violation(r, "m1", "capacity < 1"));
    CHECK(has_violation(r, "st1", "empty email"));
    CHECK(has_violation(r, "placement:m99:nobody", "unresolved studentId nobody"));
  }

  TEST_CASE("validation is idempotent and leaves the store untouched") {
    StoreKit kit = small_store();
    kit.store.marks[0].value = 30;
    kit.store.missions[0].history = {1, 2, 5};
    const InstanceStore before = kit.store;
    const ValidationReport a = validate_store(kit.store);
    const ValidationReport b = validate_store(kit.store);
    CHECK(a == b);
    CHECK(kit.store == before);
  }

  TEST_CASE("type invariants") {
    StoreKit kit = small_store();
    Mission& m = kit.store.missions[0];
    m.maxStudentsProposed = 0;
    m.durationWeeks = 0;
    m.tasks.push_back({"t", "2024-03-02", "2024-03-01"});
    m.tasks.push_back({"u", "2024-02-30", "2024-03-01"});
    m.competencies.push_back({"d1", "a1"});
    kit.store.students[0].candidateRecord->autonomy = 21;
    kit.store.constraints.push_back({std::string("m1"), std::string("c1"), 2, 1});
    const ValidationReport r = validate_store(kit.store);
    CHECK(has_violation(r, "m1", "maxStudentsProposed < minStudentsProposed"));
    CHECK(has_violation(r, "m1", "durationWeeks <= 0"));
    CHECK(has_violation(r, "m1", "task 't' ends before it starts"));
    CHECK(has_violation(r, "m1", "task 'u' has a malformed date"));
    CHECK(has_violation(r, "m1", "competency action d1 is not an Action concept"));
    CHECK(has_violation(r, "st1", "autonomy out of [0,20]"));
    CHECK(has_violation(r, "constraint:0", "exactly one of missionId/companyId must be set"));
    CHECK(has_violation(r, "constraint:0", "maxProposed < minProposed"));
  }

  TEST_CASE("an un-annotated mission needs posting text") {
    StoreKit kit = small_store();
    kit.store.missions[0].competencies.clear();
    kit.store.missions[0].activityAreas.clear();
    CHECK(has_violation(validate_store(kit.store), "m1", "no annotations and no rawText to annotate"));
    kit.store.missions[0].rawText = "Develop dashboards";
    CHECK(validate_store(kit.store).empty());
  }

  TEST_CASE("identifiers are unique across entities") {
    StoreKit kit = small_store();
    kit.company("m1");
    CHECK_FALSE(validate_store(kit.store).empty());
    CHECK(valid_identifier("m.web-1:a_b"));
    CHECK_FALSE(valid_identifier("has space"));
    CHECK_FALSE(valid_identifier(""));
  }

  TEST_CASE("a synonym may not map to two concepts of one category") {
    Lexicon lex;
    lex.entries.push_back(testkit::concept_entry("a1", "develop", Category::Action, {"build"}));
    lex.entries.push_back(testkit::concept_entry("a2", "construct", Category::Action, {"Build"}));
    CHECK(validate_lexicon(lex).size() == 1);
    lex.entries[1].category = Category::DomainAction;
    CHECK(validate_lexicon(lex).empty());
  }

  TEST_CASE("lookup folds case and reads synonyms") {
    Lexicon lex;
    lex.entries.push_back(testkit::concept_entry("a1", "develop", Category::Action));
    lex.entries.push_back(testkit::concept_entry("d7", "tableau de bord", Category::DomainAction, {"dashboard"}));
    CHECK(lookup_concept(lex, Category::Action, "Develop") == "a1");
    CHECK_FALSE(lookup_concept(lex, Category::Action, "fly").has_value());
    CHECK(lookup_concept(lex, Category::DomainAction, "dashboard") == "d7");
    CHECK(lookup_concept(lex, Category::DomainAction, "Tableau  de BORD") == "d7");
    CHECK_FALSE(lookup_concept(lex, Category::Action, "dashboard").has_value());
    for (int i = 0; i < 3; ++i) CHECK(lookup_concept(lex, Category::DomainAction, "DASHBOARD") == "d7");
  }

  TEST_CASE("proposal bounds tighten by scope") {
    StoreKit kit = small_store();
    kit.store.missions[0].maxStudentsProposed = 5;
    kit.store.missions[0].capacity = 5;
    kit.store.constraints.push_back({std::nullopt, std::string("c1"), 2, 4});
    kit.store.constraints.push_back({std::string("m1"), std::nullopt, 0, 3});
    const ProposalBounds b = effective_bounds(kit.store, kit.store.missions[0]);
    CHECK(b.minProposed == 2);
    CHECK(b.maxProposed == 3);
  }

  TEST_CASE("history members are split from open offers and the cohort") {
    StoreKit kit = small_store();
    kit.mission("p1", "c1", {{"a1", "d1"}});
    kit.student("alum");
    kit.past("p1", "alum");
    REQUIRE(kit.store.open_missions().size() == 1);
    CHECK(kit.store.open_missions()[0]->id == "m1");
    REQUIRE(kit.store.cohort().size() == 1);
    CHECK(kit.store.cohort()[0]->id == "st1");
  }
}

TEST_SUITE("store_io") {
  TEST_CASE("json round trip is exact") {
    const InstanceStore s = small_store().store;
    const std::string text = dump_json(json(s));
    CHECK(parse_store(text) == s);
    CHECK(dump_json(json(parse_store(text))) == text);
  }

  TEST_CASE("unknown fields are rejected") {
    json j = small_store().store;
    j["missions"][0]["salary"] = 1000;
    CHECK_THROWS_AS(parse_store(j.dump()), SchemaError);
    json k = small_store().store;
    k["extra"] = true;
    CHECK_THROWS_AS(parse_store(k.dump()), SchemaError);
  }

  TEST_CASE("wrong types and bad enums are rejected") {
    json j = small_store().store;
    j["missions"][0]["capacity"] = "three";
    CHECK_THROWS_AS(parse_store(j.dump()), SchemaError);
    json k = small_store().store;
    k["lexicon"]["entries"][0]["category"] = "Verb";
    CHECK_THROWS_AS(parse_store(k.dump()), SchemaError);
    CHECK_THROWS_AS(parse_store("{not json"), SchemaError);
  }

  TEST_CASE("top-level keys") {
    const json j = InstanceStore{};
    for (const char* key : {"lexicon", "companies", "missions", "students", "university", "marks",
                            "pastPlacements", "constraints"})
      CHECK(j.contains(key));
  }

  TEST_CASE("atomic write replaces content") {
    const auto dir = std::filesystem::temp_directory_path() / "placement_store_io_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    write_file_atomic(dir / "f.json", "one");
    write_file_atomic(dir / "f.json", "two");
    CHECK(read_file(dir / "f.json") == "two");
    CHECK_FALSE(std::filesystem::exists(dir / "f.json.tmp"));
    std::filesystem::remove_all(dir);
  }
}
