#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "generators.hpp"
#include "placement/vsm.hpp"
#include "store_kit.hpp"

using namespace placement;
using testkit::StoreKit;

namespace {

StoreKit vocabulary() {
  StoreKit kit;
  kit.term("a1", Category::Action).term("d1", Category::DomainAction);
  kit.term("d2", Category::DomainAction).term("s1", Category::ActivityArea);
  kit.term("k1", Category::SkillKeyword);
  kit.company("c1");
  return kit;
}

}  // namespace

TEST_SUITE("vsm") {
  TEST_CASE("mission vector uses set semantics") {
    StoreKit kit = vocabulary();
    const Mission& m1 = kit.mission("m1", "c1", {{"a1", "d1"}}, {"s1"});
    CHECK(mission_vector(m1, kit.store.lexicon) == ConceptVector{{"a1", 1}, {"d1", 1}, {"s1", 1}});
    const Mission& m2 = kit.mission("m2", "c1", {{"a1", "d1"}, {"a1", "d2"}});
    CHECK(mission_vector(m2, kit.store.lexicon) == ConceptVector{{"a1", 1}, {"d1", 1}, {"d2", 1}});
  }

  TEST_CASE("mission vector needs annotations") {
    StoreKit kit = vocabulary();
    const Mission& m = kit.mission("m1", "c1", {});
    CHECK_THROWS_AS(mission_vector(m, kit.store.lexicon), PreconditionError);
  }

  TEST_CASE("student vector sums mark times coefficient") {
    StoreKit kit = vocabulary();
    kit.course("co1", {"a1"}, 2).course("co2", {"d1"}, 1).course("co3", {"d1"}, 1);
    const StudentProfile& s = kit.student("st1");
    kit.mark("st1", "co1", 10);
    CHECK(student_vector(s, kit.store.university, kit.store.marks) == ConceptVector{{"a1", 1.0}});
    kit.store.marks.clear();
    kit.mark("st1", "co2", 20).mark("st1", "co3", 10);
    CHECK(student_vector(s, kit.store.university, kit.store.marks) == ConceptVector{{"d1", 1.5}});
    kit.store.marks.clear();
    CHECK(student_vector(s, kit.store.university, kit.store.marks).empty());
  }

  TEST_CASE("student vector ignores other students and filters to the mission space") {
    StoreKit kit = vocabulary();
    kit.course("co1", {"a1", "k1"}, 1);
    kit.student("st1");
    kit.student("st2");
    kit.mark("st1", "co1", 20).mark("st2", "co1", 10);
    const auto& s = kit.store.students[0];
    CHECK(student_vector(s, kit.store.university, kit.store.marks) == ConceptVector{{"a1", 1}, {"k1", 1}});
    CHECK(student_vector(s, kit.store.university, kit.store.marks, &kit.store.lexicon) ==
          ConceptVector{{"a1", 1}});
  }

  TEST_CASE("removing a course removes exactly its contribution") {
    StoreKit kit = vocabulary();
    kit.course("co1", {"a1", "d1"}, 3).course("co2", {"d1", "s1"}, 2);
    const auto& s = kit.student("st1");
    kit.mark("st1", "co1", 13).mark("st1", "co2", 7);
    const ConceptVector both = student_vector(s, kit.store.university, kit.store.marks);
    const std::vector<Mark> only2{kit.store.marks[1]};
    const ConceptVector one = student_vector(s, kit.store.university, only2);
    CHECK(both.get("a1") == doctest::Approx(13.0 / 20 * 3));
    CHECK(one.get("a1") == 0);
    CHECK(both.get("d1") - one.get("d1") == doctest::Approx(13.0 / 20 * 3));
    CHECK(both.get("s1") == one.get("s1"));
  }

  TEST_CASE("unresolved training") {
    StoreKit kit = vocabulary();
    StudentProfile& s = kit.student("st1");
    s.academic.trainingId = "nope";
    CHECK_THROWS_AS(student_vector(s, kit.store.university, kit.store.marks), NotFoundError);
  }

  TEST_CASE("cosine examples") {
    const ConceptVector ad{{"a1", 1}, {"d1", 1}};
    CHECK(cosine(ad, ad) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(cosine(ConceptVector{{"a1", 1}}, ConceptVector{{"d1", 1}}) == 0.0);
    CHECK(cosine(ad, ConceptVector{{"a1", 1}, {"s1", 1}}) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(cosine(ad, ConceptVector{}) == 0.0);
    CHECK(cosine(ConceptVector{}, ConceptVector{}) == 0.0);
  }

  TEST_CASE("zero weights are not stored and negatives are rejected") {
    ConceptVector v;
    v.set("a", 0);
    CHECK(v.empty());
    CHECK_THROWS_AS(v.set("a", -1), std::invalid_argument);
    CHECK_THROWS_AS(v.set("a", std::nan("")), std::invalid_argument);
  }

  TEST_CASE("cosine properties on random sparse vectors") {
    Rng rng(2024);
    for (int i = 0; i < 1000; ++i) {
      const ConceptVector u = testkit::random_sparse_vector(rng, 12, 0.4);
      const ConceptVector v = testkit::random_sparse_vector(rng, 12, 0.4);
      const double c = cosine(u, v);
      CHECK(c == cosine(v, u));
      CHECK(c >= 0.0);
      CHECK(c <= 1.0);
      CHECK(std::abs(c - testkit::reference_cosine(u, v)) <= 1e-12);
      const double scale = 1e-3 + 1e3 * rng.uniform();
      CHECK(std::abs(cosine(u.scaled(scale), v) - c) <= 1e-12);
    }
  }

  TEST_CASE("uniform scaling keeps the argmax") {
    Rng rng(77);
    for (int trial = 0; trial < 100; ++trial) {
      const ConceptVector mission = testkit::random_sparse_vector(rng, 10, 0.5);
      std::vector<ConceptVector> students;
      for (int s = 0; s < 10; ++s) students.push_back(testkit::random_sparse_vector(rng, 10, 0.4));
      const double scale = 0.01 + 100 * rng.uniform();
      auto order = [&](double f) {
        std::vector<int> idx(students.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
          return cosine(students[a].scaled(f), mission) > cosine(students[b].scaled(f), mission);
        });
        return idx;
      };
      CHECK(order(1.0).front() == order(scale).front());
    }
  }

  TEST_CASE("json round trip") {
    const ConceptVector v{{"a1", 0.25}, {"d1", 3}};
    CHECK(parse_as<ConceptVector>(json(v)) == v);
    CHECK_THROWS_AS(parse_as<ConceptVector>(json{{"a1", -1}}), SchemaError);
  }
}
