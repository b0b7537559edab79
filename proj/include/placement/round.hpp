#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "placement/assign.hpp"
#include "placement/config.hpp"
#include "placement/match.hpp"

namespace placement {

enum class RoundStatus { Draft, Computed, Published };
std::string_view to_string(RoundStatus s);

struct SkippedMission {
  std::string missionId;
  std::string reason;

  bool operator==(const SkippedMission&) const = default;
};

// One run of cluster, rank, argue and assign over a frozen copy of the store.
struct RoundState {
  std::string roundId;
  RoundStatus status = RoundStatus::Draft;
  InstanceStore store;
  Config config;
  KnowledgeBase knowledgeBase;
  std::map<std::string, RankedList> rankings;  // open mission -> cohort candidates
  std::vector<SkippedMission> skippedMissions;  // open missions left out of the round
  std::map<std::string, std::string> overrides;  // studentId -> pinned missionId
  std::optional<AssignmentPlan> currentPlan;

  bool operator==(const RoundState&) const = default;
};

// Clusters every annotated mission, past and open, with a fixed k or the
// silhouette choice over [kMin, kMax] clipped to the mission count.
// PreconditionError when no mission is annotated.
ClusterModel cluster_missions(const InstanceStore& store, const ClusteringConfig& clustering);

// Validates the store, clusters every annotated mission, builds the
// knowledge base and ranks the cohort for every open annotated mission.
// ValidationError on an invalid store; PreconditionError when no mission is
// annotated.
RoundState create_round(const InstanceStore& store, const Config& config, std::string roundId);

// Open, annotated missions in store order: the ones a round assigns.
std::vector<std::string> round_missions(const RoundState& round);
std::vector<std::string> round_students(const RoundState& round);

// Ranked lists with arguments for every entry, plus the weights and
// thresholds they were computed with. NotFoundError for ids outside the round.
json candidates_view(const RoundState& round, const std::string& missionId, std::optional<std::size_t> limit);
json missions_view(const RoundState& round, const std::string& studentId, std::optional<std::size_t> limit);

// Pins (or with nullopt unpins) a student. Drops the current plan and returns
// the round to Draft. ConflictError on a Published round.
void set_override(RoundState& round, const std::string& studentId, const std::optional<std::string>& missionId);

struct AssignOptions {
  std::optional<GaParams> gaParams;
  std::optional<ObjectiveWeights> weights;
  std::optional<MatchWeights> matchWeights;
};

AssignmentInstance build_instance(const RoundState& round, const MatchWeights& weights);

// Runs the optimizer with overrides pinned, attaches the arguments of every
// assigned pair and stores the plan. ConflictError on a Published round.
const AssignmentPlan& assign_round(RoundState& round, const AssignOptions& options, const GaHooks& hooks = {});

// PreconditionError without a plan, ConflictError when already published.
void publish_round(RoundState& round);

void require_mutable(const RoundState& round);

void to_json(json& j, const SkippedMission& s);
void to_json(json& j, const RoundState& r);
void read(const json& j, const std::string& path, RoundStatus& out);
void read(const json& j, const std::string& path, SkippedMission& out);
void read(const json& j, const std::string& path, RoundState& out);

}  // namespace placement
