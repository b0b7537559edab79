#include "placement/match.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "placement/annotate.hpp"
#include "placement/store_io.hpp"
#include "placement/text.hpp"

namespace placement {

void MatchWeights::validate() const {
  for (double w : {alpha, beta, gamma})
    if (!std::isfinite(w) || w < 0) throw std::invalid_argument("match weights must be >= 0");
  if (std::abs(alpha + beta + gamma - 1.0) > 1e-9)
    throw std::invalid_argument("match weights must sum to 1");
}

KnowledgeBase build_knowledge_base(const InstanceStore& store, const ClusterModel& clusterModel) {
  KnowledgeBase kb;
  kb.clusterModel = clusterModel;
  kb.successProfiles.assign(clusterModel.centroids.size(), {});
  kb.standardPrototype = clusterModel.centroids;

  for (const PastPlacement& p : store.pastPlacements) {
    if (p.outcome != Outcome::Success) continue;
    const int cluster = clusterModel.cluster_of(p.missionId);
    if (cluster < 0) {
      kb.skipped.push_back({p.missionId, p.studentId, "mission not in the cluster model (not annotated)"});
      continue;
    }
    const StudentProfile* student = store.find_student(p.studentId);
    if (!student) {
      kb.skipped.push_back({p.missionId, p.studentId, "unknown student"});
      continue;
    }
    try {
      const std::vector<Mark> marks = store.marks_of(student->id);
      kb.successProfiles[cluster].push_back(
          {student->id, p.missionId, student_vector(*student, store.university, marks, &store.lexicon)});
    } catch (const NotFoundError& e) {
      kb.skipped.push_back({p.missionId, p.studentId, e.what()});
    }
  }
  return kb;
}

std::set<ConceptId> mission_concepts(const Mission& mission, const Lexicon& lexicon) {
  std::set<ConceptId> out;
  for (const Competency& c : mission.competencies) {
    out.insert(c.action);
    out.insert(c.domainAction);
  }
  out.insert(mission.activityAreas.begin(), mission.activityAreas.end());
  if (!mission.rawText.empty()) {
    const AnnotationResult r = extract_concepts(tokenize(mission.rawText), lexicon);
    for (const Evidence& e : r.evidence)
      if (e.category == Category::SkillKeyword) out.insert(e.conceptId);
  }
  return out;
}

double interest_score(const StudentProfile& student, const Mission& mission, const Company& company,
                      const std::set<ConceptId>& missionConcepts) {
  const Interests& in = student.interests;

  double keyword = 1.0;
  if (!in.missionKeywords.empty()) {
    std::set<ConceptId> wanted(in.missionKeywords.begin(), in.missionKeywords.end());
    std::size_t hit = 0;
    for (const ConceptId& k : wanted) hit += missionConcepts.contains(k) ? 1 : 0;
    keyword = static_cast<double>(hit) / static_cast<double>(std::max<std::size_t>(1, wanted.size()));
  }

  double location = 1.0;
  if (!in.preferredLocations.empty()) {
    const std::string where = normalize_phrase(mission.location);
    location = 0.0;
    for (const std::string& pref : in.preferredLocations) {
      const std::string p = normalize_phrase(pref);
      if (!p.empty() && where.find(p) != std::string::npos) {
        location = 1.0;
        break;
      }
    }
  }

  double companyScore = 1.0;
  if (!in.preferredCompanies.empty()) {
    const auto& pc = in.preferredCompanies;
    companyScore = std::find(pc.begin(), pc.end(), company.id) != pc.end() ? 1.0 : 0.0;
  }

  // Postings carry no salary, so the salary preference cannot be violated.
  const double salary = 1.0;

  return (keyword + location + companyScore + salary) / 4.0;
}

double interest_score(const StudentProfile& student, const Mission& mission, const Company& company) {
  std::set<ConceptId> concepts;
  for (const Competency& c : mission.competencies) {
    concepts.insert(c.action);
    concepts.insert(c.domainAction);
  }
  concepts.insert(mission.activityAreas.begin(), mission.activityAreas.end());
  return interest_score(student, mission, company, concepts);
}

// --- Matcher -----------------------------------------------------------------

Matcher::Matcher(const InstanceStore& store, const KnowledgeBase& kb, MatchWeights weights)
    : store_(store), kb_(kb), weights_(weights) {
  weights_.validate();
  for (const StudentProfile& s : store.students) {
    try {
      students_.emplace(s.id, placement::student_vector(s, store.university, store.marks_of(s.id),
                                                        &store.lexicon));
    } catch (const NotFoundError& e) {
      studentErrors_.emplace(s.id, e.what());
    }
  }
  for (const Mission& m : store.missions) {
    if (!m.annotated()) continue;
    ConceptVector v = placement::mission_vector(m, store.lexicon);
    if (!kb.clusterModel.centroids.empty() && !v.empty())
      clusters_.emplace(m.id, assign_to_cluster(v, kb.clusterModel));
    missions_.emplace(m.id, std::move(v));
    missionConcepts_.emplace(m.id, mission_concepts(m, store.lexicon));
  }
}

const ConceptVector& Matcher::student_vector(const std::string& studentId) const {
  auto it = students_.find(studentId);
  if (it != students_.end()) return it->second;
  auto err = studentErrors_.find(studentId);
  if (err != studentErrors_.end()) throw NotFoundError(err->second);
  throw NotFoundError("unknown student " + studentId);
}

const ConceptVector& Matcher::mission_vector(const std::string& missionId) const {
  auto it = missions_.find(missionId);
  if (it != missions_.end()) return it->second;
  if (store_.find_mission(missionId))
    throw PreconditionError("mission " + missionId + " has no annotations; annotate it first");
  throw NotFoundError("unknown mission " + missionId);
}

ClusterAssignment Matcher::mission_cluster(const std::string& missionId) const {
  mission_vector(missionId);
  auto it = clusters_.find(missionId);
  return it == clusters_.end() ? ClusterAssignment{0, 0.0} : it->second;
}

MatchScore Matcher::score(const std::string& studentId, const std::string& missionId) const {
  const ConceptVector& sv = student_vector(studentId);
  const ConceptVector& mv = mission_vector(missionId);
  const Mission& mission = *store_.find_mission(missionId);
  const StudentProfile& student = *store_.find_student(studentId);
  const Company* company = store_.find_company(mission.companyId);
  if (!company) throw NotFoundError("mission " + missionId + ": unknown company " + mission.companyId);

  MatchScore s;
  s.weights = weights_;
  s.skillCos = cosine(sv, mv);

  auto cl = clusters_.find(missionId);
  if (cl != clusters_.end()) {
    const auto c = static_cast<std::size_t>(cl->second.index);
    if (c < kb_.successProfiles.size() && !kb_.successProfiles[c].empty()) {
      for (const SuccessProfile& p : kb_.successProfiles[c])
        s.prototypeCos = std::max(s.prototypeCos, cosine(sv, p.vector));
    } else if (c < kb_.standardPrototype.size()) {
      s.prototypeCos = cosine(sv, kb_.standardPrototype[c]);
    }
  }

  s.interestScore = interest_score(student, mission, *company, missionConcepts_.at(missionId));
  s.total = weights_.alpha * s.skillCos + weights_.beta * s.prototypeCos +
            weights_.gamma * s.interestScore;
  return s;
}

namespace {

void sort_entries(std::vector<RankedEntry>& entries) {
  std::sort(entries.begin(), entries.end(), [](const RankedEntry& a, const RankedEntry& b) {
    if (a.score.total != b.score.total) return a.score.total > b.score.total;
    return a.id < b.id;
  });
}

std::vector<std::string> distinct(const std::vector<std::string>& ids) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const std::string& id : ids)
    if (seen.insert(id).second) out.push_back(id);
  return out;
}

}  // namespace

RankedList Matcher::rank_candidates(const std::string& missionId,
                                    const std::vector<std::string>& studentIds) const {
  RankedList list;
  list.direction = RankDirection::CandidatesForMission;
  list.anchorId = missionId;
  list.cluster = mission_cluster(missionId).index;
  for (const std::string& sid : distinct(studentIds)) list.entries.push_back({sid, score(sid, missionId)});
  sort_entries(list.entries);
  return list;
}

RankedList Matcher::rank_missions(const std::string& studentId,
                                  const std::vector<std::string>& missionIds) const {
  RankedList list;
  list.direction = RankDirection::MissionsForStudent;
  list.anchorId = studentId;
  list.cluster = -1;
  student_vector(studentId);
  for (const std::string& mid : distinct(missionIds)) list.entries.push_back({mid, score(studentId, mid)});
  sort_entries(list.entries);
  return list;
}

RankedList rank_candidates(const Mission& mission, const std::vector<const StudentProfile*>& students,
                           const KnowledgeBase& kb, const MatchWeights& weights,
                           const InstanceStore& store) {
  Matcher m(store, kb, weights);
  std::vector<std::string> ids;
  for (const StudentProfile* s : students) ids.push_back(s->id);
  return m.rank_candidates(mission.id, ids);
}

RankedList rank_missions(const StudentProfile& student, const std::vector<const Mission*>& missions,
                         const KnowledgeBase& kb, const MatchWeights& weights,
                         const InstanceStore& store) {
  Matcher m(store, kb, weights);
  std::vector<std::string> ids;
  for (const Mission* x : missions) ids.push_back(x->id);
  return m.rank_missions(student.id, ids);
}

// --- JSON --------------------------------------------------------------------

void to_json(json& j, const MatchWeights& w) {
  j = {{"alpha", w.alpha}, {"beta", w.beta}, {"gamma", w.gamma}};
}

void read(const json& j, const std::string& path, MatchWeights& out) {
  ObjectReader r(j, path);
  r.field("alpha", out.alpha).field("beta", out.beta).field("gamma", out.gamma).finish();
}

void to_json(json& j, const MatchScore& s) {
  j = {{"total", s.total},
       {"skillCos", s.skillCos},
       {"prototypeCos", s.prototypeCos},
       {"interestScore", s.interestScore},
       {"weights", s.weights}};
}

void read(const json& j, const std::string& path, MatchScore& out) {
  ObjectReader r(j, path);
  r.field("total", out.total)
      .field("skillCos", out.skillCos)
      .field("prototypeCos", out.prototypeCos)
      .field("interestScore", out.interestScore)
      .field("weights", out.weights)
      .finish();
}

void to_json(json& j, const SuccessProfile& p) {
  j = {{"studentId", p.studentId}, {"missionId", p.missionId}, {"vector", p.vector}};
}

void read(const json& j, const std::string& path, SuccessProfile& out) {
  ObjectReader r(j, path);
  r.field("studentId", out.studentId).field("missionId", out.missionId).field("vector", out.vector)
      .finish();
}

void to_json(json& j, const SkippedPlacement& p) {
  j = {{"missionId", p.missionId}, {"studentId", p.studentId}, {"reason", p.reason}};
}

void read(const json& j, const std::string& path, SkippedPlacement& out) {
  ObjectReader r(j, path);
  r.field("missionId", out.missionId).field("studentId", out.studentId).field("reason", out.reason)
      .finish();
}

void to_json(json& j, const KnowledgeBase& kb) {
  j = {{"clusterModel", kb.clusterModel},
       {"successProfiles", kb.successProfiles},
       {"standardPrototype", kb.standardPrototype},
       {"skipped", kb.skipped}};
}

void read(const json& j, const std::string& path, KnowledgeBase& out) {
  ObjectReader r(j, path);
  r.field("clusterModel", out.clusterModel)
      .field("successProfiles", out.successProfiles)
      .field("standardPrototype", out.standardPrototype)
      .field("skipped", out.skipped)
      .finish();
}

void to_json(json& j, const RankedList& l) {
  const bool candidates = l.direction == RankDirection::CandidatesForMission;
  const char* entryKey = candidates ? "studentId" : "missionId";
  json entries = json::array();
  for (const RankedEntry& e : l.entries) entries.push_back({{entryKey, e.id}, {"score", e.score}});
  j = {{"direction", candidates ? "candidates" : "missions"},
       {candidates ? "missionId" : "studentId", l.anchorId},
       {"entries", std::move(entries)}};
  if (candidates) j["cluster"] = l.cluster;
}

void read(const json& j, const std::string& path, RankedList& out) {
  ObjectReader r(j, path);
  std::string direction;
  r.field("direction", direction);
  if (direction != "candidates" && direction != "missions")
    throw SchemaError(path + ".direction: expected candidates or missions");
  const bool candidates = direction == "candidates";
  out.direction = candidates ? RankDirection::CandidatesForMission : RankDirection::MissionsForStudent;
  r.field(candidates ? "missionId" : "studentId", out.anchorId);
  out.cluster = candidates ? 0 : -1;
  if (candidates) r.field("cluster", out.cluster);
  json entries = json::array();
  r.field("entries", entries);
  r.finish();
  if (!entries.is_array()) throw SchemaError(path + ".entries: expected array");
  const char* entryKey = candidates ? "studentId" : "missionId";
  out.entries.clear();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    RankedEntry e;
    ObjectReader er(entries[i], path + ".entries[" + std::to_string(i) + "]");
    er.field(entryKey, e.id).field("score", e.score).finish();
    out.entries.push_back(std::move(e));
  }
}

}  // namespace placement
