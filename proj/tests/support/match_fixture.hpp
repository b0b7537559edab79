#pragma once

#include <string>
#include <vector>

#include "placement/match.hpp"
#include "placement/random.hpp"
#include "store_kit.hpp"

namespace testkit {

struct MatchFixture {
  InstanceStore store;
  KnowledgeBase kb;
  std::vector<std::string> studentIds;  // cohort
  std::vector<std::string> missionIds;  // open missions
};

// Random store with open missions, a cohort, a few successful alumni on past
// missions, and a knowledge base clustered over every mission.
inline MatchFixture random_match_fixture(std::uint64_t seed) {
  Rng rng(seed);
  StoreKit kit;
  for (int i = 0; i < 4; ++i) kit.term("a" + std::to_string(i), Category::Action);
  for (int i = 0; i < 4; ++i) kit.term("d" + std::to_string(i), Category::DomainAction);
  for (int i = 0; i < 2; ++i) kit.term("s" + std::to_string(i), Category::ActivityArea);
  for (int i = 0; i < 2; ++i) kit.term("k" + std::to_string(i), Category::SkillKeyword);
  const std::vector<std::string> places{"Paris", "Lyon", "Lille"};
  for (int i = 0; i < 3; ++i) kit.company("c" + std::to_string(i));

  auto concept_of = [&](char cat, int n) { return std::string(1, cat) + std::to_string(rng.below(n)); };
  for (int i = 0; i < 6; ++i) {
    std::vector<ConceptId> kws{concept_of('a', 4), concept_of('d', 4)};
    if (rng.chance(0.4)) kws.push_back(concept_of('s', 2));
    if (rng.chance(0.3)) kws.push_back(concept_of('k', 2));
    kit.course("co" + std::to_string(i), kws, 1 + static_cast<double>(rng.below(3)));
  }

  auto add_mission = [&](const std::string& id) {
    std::vector<Competency> comps;
    for (int c = 0, n = 1 + static_cast<int>(rng.below(2)); c < n; ++c)
      comps.push_back({concept_of('a', 4), concept_of('d', 4)});
    std::vector<ConceptId> areas;
    if (rng.chance(0.5)) areas.push_back(concept_of('s', 2));
    Mission& m = kit.mission(id, "c" + std::to_string(rng.below(3)), comps, areas,
                             1 + static_cast<int>(rng.below(2)));
    m.location = places[rng.below(places.size())];
    if (rng.chance(0.5)) m.rawText = "Knowledge of k" + std::to_string(rng.below(2));
  };
  auto add_student = [&](const std::string& id) {
    StudentProfile& s = kit.student(id);
    if (rng.chance(0.5)) s.interests.missionKeywords.push_back(concept_of('k', 2));
    if (rng.chance(0.3)) s.interests.missionKeywords.push_back(concept_of('s', 2));
    if (rng.chance(0.5)) s.interests.preferredLocations.push_back(places[rng.below(places.size())]);
    if (rng.chance(0.4)) s.interests.preferredCompanies.push_back("c" + std::to_string(rng.below(3)));
    for (int c = 0; c < 6; ++c)
      if (rng.chance(0.6)) kit.mark(id, "co" + std::to_string(c), static_cast<double>(rng.below(21)));
  };

  MatchFixture f;
  const int open = 1 + static_cast<int>(rng.below(4));
  for (int i = 0; i < open; ++i) {
    add_mission("m" + std::to_string(i));
    f.missionIds.push_back("m" + std::to_string(i));
  }
  const int cohort = 1 + static_cast<int>(rng.below(5));
  for (int i = 0; i < cohort; ++i) {
    add_student("s" + std::to_string(i));
    f.studentIds.push_back("s" + std::to_string(i));
  }
  for (int i = 0, n = static_cast<int>(rng.below(4)); i < n; ++i) {
    add_mission("p" + std::to_string(i));
    add_student("alum" + std::to_string(i));
    kit.past("p" + std::to_string(i), "alum" + std::to_string(i),
             rng.chance(0.75) ? Outcome::Success : Outcome::Difficulty);
  }

  std::map<std::string, ConceptVector> vectors;
  for (const Mission& m : kit.store.missions) vectors[m.id] = mission_vector(m, kit.store.lexicon);
  const int k = std::min<int>(static_cast<int>(vectors.size()), 1 + static_cast<int>(rng.below(3)));
  f.store = kit.store;
  f.kb = build_knowledge_base(f.store, kmeans(vectors, k, seed));
  return f;
}

}  // namespace testkit
