#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "placement/annotate.hpp"
#include "placement/random.hpp"
#include "placement/validate.hpp"
#include "store_kit.hpp"

using namespace placement;

namespace {

const testkit::Corpus& corpus() {
  static const testkit::Corpus c = testkit::load_corpus(PLACEMENT_FIXTURE_DIR "/annotation_corpus.json");
  return c;
}

Lexicon sales_lexicon() {
  Lexicon lex;
  lex.entries.push_back(testkit::concept_entry("a1", "develop", Category::Action));
  lex.entries.push_back(testkit::concept_entry("d1", "dashboard", Category::DomainAction));
  lex.entries.push_back(testkit::concept_entry("s1", "sales", Category::ActivityArea));
  return lex;
}

Mission draft(const std::string& text) {
  Mission m;
  m.id = "m1";
  m.rawText = text;
  return m;
}

}  // namespace

TEST_SUITE("annotate") {
  TEST_CASE("sales dashboard example") {
    const AnnotationResult r = extract_concepts(tokenize("develop a sales dashboard"), sales_lexicon());
    CHECK(r.competencies == std::vector<Competency>{{"a1", "d1"}});
    CHECK(r.activityAreas == std::vector<ConceptId>{"s1"});
    CHECK(r.unmatchedKeywords.empty());
  }

  TEST_CASE("domain action before action does not pair") {
    const AnnotationResult r = extract_concepts(tokenize("dashboard develop"), sales_lexicon());
    CHECK(r.competencies.empty());
    CHECK(r.unmatchedKeywords == std::vector<std::string>{"dashboard", "develop"});
    CHECK(r.evidence.size() == 2);
  }

  TEST_CASE("empty stream") {
    const AnnotationResult r = extract_concepts({}, sales_lexicon());
    CHECK(r == AnnotationResult{});
  }

  TEST_CASE("pairing window is six tokens after the action") {
    CHECK(extract_concepts(tokenize("develop x x x x x dashboard"), sales_lexicon()).competencies.size() == 1);
    CHECK(extract_concepts(tokenize("develop x x x x x x dashboard"), sales_lexicon()).competencies.empty());
  }

  TEST_CASE("annotate_mission fills and deduplicates") {
    AnnotatedMission a = annotate_mission("develop a sales dashboard", sales_lexicon(), draft(""));
    CHECK(a.mission.competencies == std::vector<Competency>{{"a1", "d1"}});
    CHECK(a.mission.activityAreas == std::vector<ConceptId>{"s1"});
    Mission pre = draft("");
    pre.competencies.push_back({"a1", "d1"});
    a = annotate_mission("develop a sales dashboard", sales_lexicon(), pre);
    CHECK(a.mission.competencies == std::vector<Competency>{{"a1", "d1"}});
  }

  TEST_CASE("manual annotations stay first") {
    Lexicon lex = sales_lexicon();
    lex.entries.push_back(testkit::concept_entry("a2", "audit", Category::Action));
    Mission pre = draft("");
    pre.competencies.push_back({"a2", "d1"});
    const AnnotatedMission a = annotate_mission("develop dashboard", lex, pre);
    CHECK(a.mission.competencies == std::vector<Competency>{{"a2", "d1"}, {"a1", "d1"}});
  }

  TEST_CASE("text without hits leaves the mission unchanged") {
    const Mission pre = draft("nothing here");
    const AnnotatedMission a = annotate_mission("nothing here", sales_lexicon(), pre);
    CHECK(a.mission == pre);
    CHECK(a.annotation.empty());
    const json log = annotation_log_entry("m1", a.annotation);
    CHECK(log.at("missionId") == "m1");
    CHECK(log.at("concepts").empty());
    CHECK(log.at("unmatched").empty());
  }

  TEST_CASE("unpaired keywords reach the annotation log") {
    const AnnotatedMission a = annotate_mission("dashboard develop", sales_lexicon(), draft(""));
    const json log = annotation_log_entry("m1", a.annotation);
    CHECK(log.at("unmatched") == json::array({"dashboard", "develop"}));
    CHECK(log.at("concepts") == json::array({"d1", "a1"}));
    CHECK(log.at("evidence").size() == 2);
  }

  TEST_CASE("invalid lexicon is refused") {
    Lexicon lex = sales_lexicon();
    lex.entries.push_back(testkit::concept_entry("a9", "Develop", Category::Action));
    CHECK_THROWS_AS(annotate_mission("develop", lex, draft("")), ValidationError);
  }

  TEST_CASE("annotate_mission is idempotent") {
    for (const auto& g : corpus().postings) {
      const AnnotatedMission once = annotate_mission(g.text, corpus().lexicon, draft(g.text));
      const AnnotatedMission twice = annotate_mission(g.text, corpus().lexicon, once.mission);
      CHECK_MESSAGE(twice.mission == once.mission, g.id);
    }
  }

  TEST_CASE("golden corpus") {
    REQUIRE(corpus().postings.size() >= 20);
    REQUIRE(validate_lexicon(corpus().lexicon).empty());
    for (const auto& g : corpus().postings) {
      const AnnotationResult r = extract_concepts(tokenize(g.text), corpus().lexicon);
      CHECK_MESSAGE(testkit::golden_mismatch(g, r).empty(), g.id << testkit::golden_mismatch(g, r));
      CHECK(extract_concepts(tokenize(g.text), corpus().lexicon) == r);
    }
  }

  TEST_CASE("evidence spans are sound") {
    const Lexicon& lex = corpus().lexicon;
    for (const auto& g : corpus().postings) {
      const AnnotationResult r = extract_concepts(tokenize(g.text), lex);
      for (const Evidence& ev : r.evidence) {
        REQUIRE(ev.end <= g.text.size());
        REQUIRE(ev.begin < ev.end);
        const std::string span = g.text.substr(ev.begin, ev.end - ev.begin);
        CHECK_MESSAGE(lookup_concept(lex, ev.category, span) == ev.conceptId, g.id << ": " << span);
      }
      for (const Competency& c : r.competencies) {
        auto has = [&](const ConceptId& id) {
          return std::any_of(r.evidence.begin(), r.evidence.end(),
                             [&](const Evidence& e) { return e.conceptId == id; });
        };
        CHECK(has(c.action));
        CHECK(has(c.domainAction));
      }
    }
  }

  TEST_CASE("growing the lexicon with unrelated entries never loses a surface") {
    Rng rng(9);
    for (int round = 0; round < 50; ++round) {
      Lexicon grown = corpus().lexicon;
      const int extra = 1 + static_cast<int>(rng.below(5));
      for (int i = 0; i < extra; ++i) {
        const std::string word = "zq" + std::to_string(round) + "w" + std::to_string(i);
        grown.entries.push_back(testkit::concept_entry("new." + word, word,
                                                       static_cast<Category>(rng.below(4))));
      }
      for (const auto& g : corpus().postings) {
        const std::string text = g.text + " zq" + std::to_string(round) + "w0";
        const AnnotationResult before = extract_concepts(tokenize(text), corpus().lexicon);
        const AnnotationResult after = extract_concepts(tokenize(text), grown);
        for (const Evidence& e : before.evidence) {
          const bool kept = std::any_of(after.evidence.begin(), after.evidence.end(), [&](const Evidence& x) {
            return x.conceptId == e.conceptId && x.begin == e.begin && x.end == e.end;
          });
          CHECK_MESSAGE(kept, g.id);
        }
      }
    }
  }
}
