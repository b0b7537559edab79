#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "placement/arguments.hpp"
#include "placement/json_util.hpp"

namespace placement {

inline constexpr int kUnassigned = -1;

// One gene per student: a mission index or kUnassigned.
using Genes = std::vector<int>;

struct AssignmentInstance {
  std::vector<std::string> studentIds;
  std::vector<std::string> missionIds;
  std::vector<std::vector<double>> score;     // [student][mission], MatchScore.total
  std::vector<std::vector<double>> interest;  // [student][mission], interestScore
  std::vector<int> capacity;
  std::vector<int> minProposed;
  std::vector<int> maxProposed;
  // Coordinator overrides: mission index per student, kUnassigned when free.
  // Empty means nothing pinned.
  Genes pinned;

  std::size_t students() const { return studentIds.size(); }
  std::size_t missions() const { return missionIds.size(); }
  int pinned_at(std::size_t s) const { return pinned.empty() ? kUnassigned : pinned[s]; }

  // Throws std::invalid_argument on inconsistent shapes, scores outside
  // [0, 1], capacity < 1, duplicate ids, or more pins than capacity.
  void validate() const;
};

struct ObjectiveWeights {
  double wMatch = 1.0;
  double wInterest = 0.25;
  double wUnassigned = 2.0;
  double penalty = 10.0;
  // Also charge proposal-bound violations in the penalty term.
  bool boundsInPenalty = false;

  void validate() const;
  bool operator==(const ObjectiveWeights&) const = default;
};

struct ObjectiveParts {
  double sumMatch = 0;
  double sumInterest = 0;
  int unassignedCount = 0;
  double penalty = 0;  // weight times violation count

  bool operator==(const ObjectiveParts&) const = default;
};

struct ObjectiveValue {
  double total = 0;
  ObjectiveParts parts;
};

ObjectiveValue objective(const AssignmentInstance& instance, const Genes& genes,
                         const ObjectiveWeights& weights = {});

// Same, from a studentId -> missionId map (absent or nullopt = unassigned).
// Throws NotFoundError on ids outside the instance.
ObjectiveValue objective(const AssignmentInstance& instance,
                         const std::map<std::string, std::optional<std::string>>& assignment,
                         const ObjectiveWeights& weights = {});

struct BoundViolation {
  std::string missionId;
  std::string kind;  // "belowMin" or "aboveMax"
  int required = 0;  // the bound that was crossed
  int got = 0;

  bool operator==(const BoundViolation&) const = default;
};

struct GaParams {
  int populationSize = 100;
  int generations = 500;
  int stagnationLimit = 50;
  int tournamentSize = 3;
  double crossoverRate = 0.9;
  double geneSwapProbability = 0.5;
  std::optional<double> mutationRate;  // per gene; 1 / students when unset
  int elitism = 2;
  std::uint64_t seed = 42;

  void validate() const;
  bool operator==(const GaParams&) const = default;
};

struct AssignmentPlan {
  std::map<std::string, std::optional<std::string>> assignment;
  double objectiveTotal = 0;
  ObjectiveParts objectiveParts;
  bool feasible = true;
  std::vector<BoundViolation> violations;
  std::map<std::string, std::vector<Argument>> argumentsPerPair;  // "studentId/missionId"
  ObjectiveWeights weights;
  std::optional<GaParams> gaParams;  // absent for the exhaustive oracle
  std::optional<MatchWeights> matchWeights;  // set when scores came from a round
  int generationsRun = 0;

  bool operator==(const AssignmentPlan&) const = default;
};

std::string pair_key(const std::string& studentId, const std::string& missionId);

// Every mission's assigned count must lie in [minProposed,
// min(maxProposed, capacity)].
std::vector<BoundViolation> check_proposal_bounds(const AssignmentInstance& instance, const Genes& genes);
std::vector<BoundViolation> check_proposal_bounds(const AssignmentPlan& plan,
                                                  const AssignmentInstance& instance);

inline constexpr std::size_t kBruteForceMaxStudents = 10;
inline constexpr std::size_t kBruteForceMaxMissions = 6;

// Exhaustive search over all (missions + 1)^students gene vectors. Feasible
// plans beat infeasible ones; ties keep the lexicographically smallest genes,
// with kUnassigned ordered first. Throws std::invalid_argument above the size
// guard.
AssignmentPlan brute_force_assign(const AssignmentInstance& instance, const ObjectiveWeights& weights = {});

// Pinned students first, then the others in descending order of their best
// score each take their best-scoring mission with room left.
Genes greedy_assignment(const AssignmentInstance& instance);

// Evicts the lowest-scoring unpinned students (higher index first on ties)
// from missions over capacity.
void repair(const AssignmentInstance& instance, Genes& genes);

bool capacity_feasible(const AssignmentInstance& instance, const Genes& genes);

struct GaStats {
  int generation = 0;
  double bestFitness = 0;
  bool capacityFeasible = true;  // every individual of the generation
};

struct GaHooks {
  std::function<void(const GaStats&)> observer;
  std::stop_token stop;
};

// Throws CancelledError when the stop token fires between generations.
AssignmentPlan ga_assign(const AssignmentInstance& instance, const GaParams& params,
                         const ObjectiveWeights& weights = {}, const GaHooks& hooks = {});

AssignmentPlan make_plan(const AssignmentInstance& instance, const Genes& genes,
                         const ObjectiveWeights& weights);
Genes genes_of(const AssignmentInstance& instance, const AssignmentPlan& plan);

void to_json(json& j, const ObjectiveWeights& w);
void to_json(json& j, const ObjectiveParts& p);
void to_json(json& j, const BoundViolation& v);
void to_json(json& j, const GaParams& p);
void to_json(json& j, const AssignmentPlan& p);
void read(const json& j, const std::string& path, ObjectiveWeights& out);
void read(const json& j, const std::string& path, ObjectiveParts& out);
void read(const json& j, const std::string& path, BoundViolation& out);
void read(const json& j, const std::string& path, GaParams& out);
void read(const json& j, const std::string& path, AssignmentPlan& out);

}  // namespace placement
