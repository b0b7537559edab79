#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "placement/cluster.hpp"
#include "placement/json_util.hpp"
#include "placement/ontology.hpp"
#include "placement/vsm.hpp"

namespace placement {

struct MatchWeights {
  double alpha = 0.6;  // skill cosine
  double beta = 0.2;   // similarity to past successful profiles
  double gamma = 0.2;  // interest score

  // Throws std::invalid_argument unless all weights are >= 0 and sum to 1.
  void validate() const;
  bool operator==(const MatchWeights&) const = default;
};

struct MatchScore {
  double total = 0;
  double skillCos = 0;
  double prototypeCos = 0;
  double interestScore = 0;
  MatchWeights weights;

  bool operator==(const MatchScore&) const = default;
};

struct SuccessProfile {
  std::string studentId;
  std::string missionId;
  ConceptVector vector;

  bool operator==(const SuccessProfile&) const = default;
};

struct SkippedPlacement {
  std::string missionId;
  std::string studentId;
  std::string reason;

  bool operator==(const SkippedPlacement&) const = default;
};

struct KnowledgeBase {
  ClusterModel clusterModel;
  std::vector<std::vector<SuccessProfile>> successProfiles;  // by cluster index
  std::vector<ConceptVector> standardPrototype;              // by cluster index
  std::vector<SkippedPlacement> skipped;

  bool operator==(const KnowledgeBase&) const = default;
};

// Files every Success placement's student vector under its mission's cluster.
// Placements whose mission is absent from the model (not annotated) or whose
// student vector cannot be built are listed in `skipped`.
KnowledgeBase build_knowledge_base(const InstanceStore& store, const ClusterModel& clusterModel);

// Concepts a mission offers to interest matching: its mission-space
// annotations plus any SkillKeyword concepts found in its posting text.
std::set<ConceptId> mission_concepts(const Mission& mission, const Lexicon& lexicon);

// Mean of the keyword, location, company and salary sub-scores. An empty
// preference list scores 1.
double interest_score(const StudentProfile& student, const Mission& mission, const Company& company,
                      const std::set<ConceptId>& missionConcepts);
double interest_score(const StudentProfile& student, const Mission& mission, const Company& company);

enum class RankDirection { CandidatesForMission, MissionsForStudent };

struct RankedEntry {
  std::string id;  // student id or mission id, depending on direction
  MatchScore score;

  bool operator==(const RankedEntry&) const = default;
};

struct RankedList {
  RankDirection direction = RankDirection::CandidatesForMission;
  std::string anchorId;  // the mission (or student) being ranked against
  int cluster = 0;       // cluster of the mission for candidate lists
  std::vector<RankedEntry> entries;

  bool operator==(const RankedList&) const = default;
};

// Precomputes the vectors of one store so that scoring many pairs stays
// cheap. Holds references: the store and knowledge base must outlive it.
class Matcher {
 public:
  Matcher(const InstanceStore& store, const KnowledgeBase& kb, MatchWeights weights = {});

  const InstanceStore& store() const { return store_; }
  const KnowledgeBase& knowledge_base() const { return kb_; }
  const MatchWeights& weights() const { return weights_; }

  // Throws NotFoundError for unknown ids, PreconditionError for
  // un-annotated missions.
  const ConceptVector& student_vector(const std::string& studentId) const;
  const ConceptVector& mission_vector(const std::string& missionId) const;
  ClusterAssignment mission_cluster(const std::string& missionId) const;

  MatchScore score(const std::string& studentId, const std::string& missionId) const;

  RankedList rank_candidates(const std::string& missionId,
                             const std::vector<std::string>& studentIds) const;
  RankedList rank_missions(const std::string& studentId,
                           const std::vector<std::string>& missionIds) const;

 private:
  const InstanceStore& store_;
  const KnowledgeBase& kb_;
  MatchWeights weights_;
  std::map<std::string, ConceptVector> students_;
  std::map<std::string, std::string> studentErrors_;
  std::map<std::string, ConceptVector> missions_;
  std::map<std::string, ClusterAssignment> clusters_;
  std::map<std::string, std::set<ConceptId>> missionConcepts_;
};

RankedList rank_candidates(const Mission& mission, const std::vector<const StudentProfile*>& students,
                           const KnowledgeBase& kb, const MatchWeights& weights,
                           const InstanceStore& store);
RankedList rank_missions(const StudentProfile& student, const std::vector<const Mission*>& missions,
                         const KnowledgeBase& kb, const MatchWeights& weights,
                         const InstanceStore& store);

void to_json(json& j, const MatchWeights& w);
void to_json(json& j, const MatchScore& s);
void to_json(json& j, const SuccessProfile& p);
void to_json(json& j, const SkippedPlacement& p);
void to_json(json& j, const KnowledgeBase& kb);
void to_json(json& j, const RankedList& l);
void read(const json& j, const std::string& path, MatchWeights& out);
void read(const json& j, const std::string& path, MatchScore& out);
void read(const json& j, const std::string& path, SuccessProfile& out);
void read(const json& j, const std::string& path, SkippedPlacement& out);
void read(const json& j, const std::string& path, KnowledgeBase& out);
void read(const json& j, const std::string& path, RankedList& out);

}  // namespace placement
