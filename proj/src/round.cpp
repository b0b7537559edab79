#include "placement/round.hpp"

#include <algorithm>

#include "placement/store_io.hpp"
#include "placement/validate.hpp"

namespace placement {

std::string_view to_string(RoundStatus s) {
  switch (s) {
    case RoundStatus::Draft: return "Draft";
    case RoundStatus::Computed: return "Computed";
    case RoundStatus::Published: return "Published";
  }
  return "Draft";
}

namespace {

int pick_k(const std::map<std::string, ConceptVector>& vectors, const ClusteringConfig& c) {
  const int n = static_cast<int>(vectors.size());
  if (c.k) {
    if (*c.k > n)
      throw PreconditionError("clustering.k = " + std::to_string(*c.k) + " exceeds the " + std::to_string(n) +
                              " annotated missions");
    return *c.k;
  }
  const int kMax = std::min(c.kMax, n);
  const int kMin = std::min(c.kMin, kMax);
  if (kMax < 2) return 1;
  return choose_k(vectors, kMin, kMax, c.seed);
}

}  // namespace

ClusterModel cluster_missions(const InstanceStore& store, const ClusteringConfig& clustering) {
  std::map<std::string, ConceptVector> vectors;
  for (const Mission& m : store.missions)
    if (m.annotated()) vectors.emplace(m.id, mission_vector(m, store.lexicon));
  if (vectors.empty()) throw PreconditionError("no annotated missions");
  return kmeans(vectors, pick_k(vectors, clustering), clustering.seed);
}

std::vector<std::string> round_missions(const RoundState& round) {
  std::vector<std::string> out;
  for (const Mission* m : round.store.open_missions())
    if (m->annotated()) out.push_back(m->id);
  return out;
}

std::vector<std::string> round_students(const RoundState& round) {
  std::vector<std::string> out;
  for (const StudentProfile* s : round.store.cohort()) out.push_back(s->id);
  return out;
}

RoundState create_round(const InstanceStore& store, const Config& config, std::string roundId) {
  config.validate();
  ValidationReport report = validate_store(store);
  if (!report.empty()) throw ValidationError(std::move(report), "store is invalid");

  const ClusterModel model = cluster_missions(store, config.clustering);

  RoundState round;
  round.roundId = std::move(roundId);
  round.store = store;
  round.config = config;
  round.knowledgeBase = build_knowledge_base(round.store, model);

  for (const Mission* m : round.store.open_missions())
    if (!m->annotated()) round.skippedMissions.push_back({m->id, "not annotated"});

  const Matcher matcher(round.store, round.knowledgeBase, config.matchWeights);
  const std::vector<std::string> students = round_students(round);
  for (const std::string& mid : round_missions(round))
    round.rankings.emplace(mid, matcher.rank_candidates(mid, students));
  return round;
}

namespace {

json with_arguments(const RankedList& list, const Matcher& matcher, const Config& config,
                    std::optional<std::size_t> limit) {
  RankedList shown = list;
  if (limit && shown.entries.size() > *limit) shown.entries.resize(*limit);
  json j = shown;
  const bool candidates = list.direction == RankDirection::CandidatesForMission;
  for (std::size_t i = 0; i < shown.entries.size(); ++i) {
    const RankedEntry& e = shown.entries[i];
    const std::string& sid = candidates ? e.id : list.anchorId;
    const std::string& mid = candidates ? list.anchorId : e.id;
    const ArgumentReport report =
        generate_arguments(matcher, sid, mid, e.score, config.thresholds, config.argument_locale());
    j["entries"][i]["arguments"] = report.arguments;
    j["entries"][i]["notes"] = report.notes;
  }
  j["weights"] = matcher.weights();
  j["thresholds"] = config.thresholds;
  return j;
}

}  // namespace

json candidates_view(const RoundState& round, const std::string& missionId, std::optional<std::size_t> limit) {
  auto it = round.rankings.find(missionId);
  if (it == round.rankings.end()) {
    if (round.store.find_mission(missionId))
      throw NotFoundError("mission " + missionId + " is not an open annotated mission of round " + round.roundId);
    throw NotFoundError("unknown mission " + missionId);
  }
  const Matcher matcher(round.store, round.knowledgeBase, round.config.matchWeights);
  json j = with_arguments(it->second, matcher, round.config, limit);
  j["roundId"] = round.roundId;
  return j;
}

json missions_view(const RoundState& round, const std::string& studentId, std::optional<std::size_t> limit) {
  const std::vector<std::string> students = round_students(round);
  if (std::find(students.begin(), students.end(), studentId) == students.end()) {
    if (round.store.find_student(studentId))
      throw NotFoundError("student " + studentId + " is not in the cohort of round " + round.roundId);
    throw NotFoundError("unknown student " + studentId);
  }
  const Matcher matcher(round.store, round.knowledgeBase, round.config.matchWeights);
  json j = with_arguments(matcher.rank_missions(studentId, round_missions(round)), matcher, round.config, limit);
  j["roundId"] = round.roundId;
  return j;
}

void require_mutable(const RoundState& round) {
  if (round.status == RoundStatus::Published)
    throw ConflictError("round " + round.roundId + " is published and cannot change");
}

void set_override(RoundState& round, const std::string& studentId, const std::optional<std::string>& missionId) {
  require_mutable(round);
  const std::vector<std::string> students = round_students(round);
  if (std::find(students.begin(), students.end(), studentId) == students.end())
    throw NotFoundError("student " + studentId + " is not in the cohort of round " + round.roundId);
  if (!missionId) {
    round.overrides.erase(studentId);
  } else {
    if (!round.rankings.contains(*missionId))
      throw NotFoundError("mission " + *missionId + " is not an open annotated mission of round " + round.roundId);
    int pinned = 1;
    for (const auto& [sid, mid] : round.overrides)
      if (mid == *missionId && sid != studentId) ++pinned;
    if (pinned > round.store.find_mission(*missionId)->capacity)
      throw PreconditionError("pinning " + studentId + " would exceed the capacity of " + *missionId);
    round.overrides[studentId] = *missionId;
  }
  round.currentPlan.reset();
  round.status = RoundStatus::Draft;
}

AssignmentInstance build_instance(const RoundState& round, const MatchWeights& weights) {
  AssignmentInstance inst;
  inst.studentIds = round_students(round);
  inst.missionIds = round_missions(round);
  const Matcher matcher(round.store, round.knowledgeBase, weights);
  for (const std::string& sid : inst.studentIds) {
    std::vector<double> score, interest;
    for (const std::string& mid : inst.missionIds) {
      const MatchScore s = matcher.score(sid, mid);
      score.push_back(s.total);
      interest.push_back(s.interestScore);
    }
    inst.score.push_back(std::move(score));
    inst.interest.push_back(std::move(interest));
  }
  for (const std::string& mid : inst.missionIds) {
    const Mission& m = *round.store.find_mission(mid);
    const ProposalBounds b = effective_bounds(round.store, m);
    inst.capacity.push_back(m.capacity);
    inst.minProposed.push_back(b.minProposed);
    inst.maxProposed.push_back(b.maxProposed);
  }
  if (!round.overrides.empty()) {
    inst.pinned.assign(inst.students(), kUnassigned);
    for (std::size_t s = 0; s < inst.students(); ++s) {
      auto it = round.overrides.find(inst.studentIds[s]);
      if (it == round.overrides.end()) continue;
      auto pos = std::find(inst.missionIds.begin(), inst.missionIds.end(), it->second);
      if (pos != inst.missionIds.end()) inst.pinned[s] = static_cast<int>(pos - inst.missionIds.begin());
    }
  }
  return inst;
}

const AssignmentPlan& assign_round(RoundState& round, const AssignOptions& options, const GaHooks& hooks) {
  require_mutable(round);
  const MatchWeights mw = options.matchWeights.value_or(round.config.matchWeights);
  const ObjectiveWeights ow = options.weights.value_or(round.config.objectiveWeights);
  const GaParams ga = options.gaParams.value_or(round.config.gaParams);
  mw.validate();

  const AssignmentInstance inst = build_instance(round, mw);
  AssignmentPlan plan = ga_assign(inst, ga, ow, hooks);
  plan.matchWeights = mw;

  const Matcher matcher(round.store, round.knowledgeBase, mw);
  for (const auto& [sid, mid] : plan.assignment) {
    if (!mid) continue;
    const ArgumentReport report = generate_arguments(matcher, sid, *mid, matcher.score(sid, *mid),
                                                     round.config.thresholds, round.config.argument_locale());
    plan.argumentsPerPair[pair_key(sid, *mid)] = report.arguments;
  }
  round.currentPlan = std::move(plan);
  round.status = RoundStatus::Computed;
  return *round.currentPlan;
}

void publish_round(RoundState& round) {
  require_mutable(round);
  if (!round.currentPlan) throw PreconditionError("round " + round.roundId + " has no plan to publish");
  round.status = RoundStatus::Published;
}

// --- JSON --------------------------------------------------------------------

void to_json(json& j, const SkippedMission& s) { j = {{"missionId", s.missionId}, {"reason", s.reason}}; }

void read(const json& j, const std::string& path, SkippedMission& out) {
  ObjectReader r(j, path);
  r.field("missionId", out.missionId).field("reason", out.reason).finish();
}

void read(const json& j, const std::string& path, RoundStatus& out) {
  std::string s;
  read(j, path, s);
  if (s == "Draft") out = RoundStatus::Draft;
  else if (s == "Computed") out = RoundStatus::Computed;
  else if (s == "Published") out = RoundStatus::Published;
  else throw SchemaError(path + ": unknown round status '" + s + "'");
}

void to_json(json& j, const RoundState& r) {
  json rankings = json::object();
  for (const auto& [mid, list] : r.rankings) rankings[mid] = list;
  j = {{"roundId", r.roundId},
       {"status", to_string(r.status)},
       {"store", r.store},
       {"config", r.config},
       {"knowledgeBase", r.knowledgeBase},
       {"rankings", std::move(rankings)},
       {"skippedMissions", r.skippedMissions},
       {"overrides", r.overrides},
       {"currentPlan", r.currentPlan ? json(*r.currentPlan) : json(nullptr)}};
}

void read(const json& j, const std::string& path, RoundState& out) {
  ObjectReader r(j, path);
  r.field("roundId", out.roundId)
      .field("status", out.status)
      .field("store", out.store)
      .field("config", out.config)
      .field("knowledgeBase", out.knowledgeBase)
      .field("rankings", out.rankings)
      .field("skippedMissions", out.skippedMissions)
      .field("overrides", out.overrides)
      .field("currentPlan", out.currentPlan)
      .finish();
}

}  // namespace placement
