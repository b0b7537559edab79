#include "placement/assign.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "placement/random.hpp"

namespace placement {

void AssignmentInstance::validate() const {
  const std::size_t n = students(), m = missions();
  auto fail = [](const std::string& what) { throw std::invalid_argument("assignment instance: " + what); };
  if (std::set<std::string>(studentIds.begin(), studentIds.end()).size() != n) fail("duplicate student id");
  if (std::set<std::string>(missionIds.begin(), missionIds.end()).size() != m) fail("duplicate mission id");
  if (score.size() != n || interest.size() != n) fail("matrix rows do not match the students");
  for (std::size_t s = 0; s < n; ++s) {
    if (score[s].size() != m || interest[s].size() != m) fail("matrix columns do not match the missions");
    for (std::size_t j = 0; j < m; ++j) {
      if (!(score[s][j] >= 0 && score[s][j] <= 1)) fail("score outside [0,1]");
      if (!(interest[s][j] >= 0 && interest[s][j] <= 1)) fail("interest outside [0,1]");
    }
  }
  if (capacity.size() != m || minProposed.size() != m || maxProposed.size() != m)
    fail("per-mission vectors do not match the missions");
  for (std::size_t j = 0; j < m; ++j)
    if (capacity[j] < 1) fail("capacity of " + missionIds[j] + " below 1");
  if (!pinned.empty()) {
    if (pinned.size() != n) fail("pins do not match the students");
    std::vector<int> load(m, 0);
    for (int g : pinned) {
      if (g == kUnassigned) continue;
      if (g < 0 || static_cast<std::size_t>(g) >= m) fail("pin outside the missions");
      if (++load[g] > capacity[g]) fail("more students pinned to " + missionIds[g] + " than its capacity");
    }
  }
}

void ObjectiveWeights::validate() const {
  for (double w : {wMatch, wInterest, wUnassigned, penalty})
    if (!(w >= 0) || !std::isfinite(w)) throw std::invalid_argument("objective weights must be finite and >= 0");
}

void GaParams::validate() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument("GA parameters: " + what); };
  if (populationSize < 2) fail("populationSize must be >= 2");
  if (generations < 0) fail("generations must be >= 0");
  if (stagnationLimit < 1) fail("stagnationLimit must be >= 1");
  if (tournamentSize < 1) fail("tournamentSize must be >= 1");
  if (elitism < 0 || elitism > populationSize) fail("elitism must lie in [0, populationSize]");
  auto rate = [&](double r, const char* name) {
    if (!(r >= 0 && r <= 1)) fail(std::string(name) + " must lie in [0,1]");
  };
  rate(crossoverRate, "crossoverRate");
  rate(geneSwapProbability, "geneSwapProbability");
  if (mutationRate) rate(*mutationRate, "mutationRate");
}

namespace {

std::vector<int> loads(const AssignmentInstance& inst, const Genes& genes) {
  std::vector<int> load(inst.missions(), 0);
  for (int g : genes)
    if (g != kUnassigned) ++load[g];
  return load;
}

}  // namespace

ObjectiveValue objective(const AssignmentInstance& inst, const Genes& genes, const ObjectiveWeights& w) {
  if (genes.size() != inst.students()) throw std::invalid_argument("objective: one gene per student expected");
  ObjectiveValue v;
  for (std::size_t s = 0; s < genes.size(); ++s) {
    const int g = genes[s];
    if (g == kUnassigned) {
      ++v.parts.unassignedCount;
      continue;
    }
    if (g < 0 || static_cast<std::size_t>(g) >= inst.missions())
      throw std::invalid_argument("objective: gene outside the missions");
    v.parts.sumMatch += inst.score[s][g];
    v.parts.sumInterest += inst.interest[s][g];
  }
  const std::vector<int> load = loads(inst, genes);
  int violations = 0;
  for (std::size_t j = 0; j < load.size(); ++j) {
    if (w.boundsInPenalty) {
      const int upper = std::min(inst.maxProposed[j], inst.capacity[j]);
      violations += std::max(0, inst.minProposed[j] - load[j]) + std::max(0, load[j] - upper);
    } else {
      violations += std::max(0, load[j] - inst.capacity[j]);
    }
  }
  v.parts.penalty = w.penalty * violations;
  v.total = w.wMatch * v.parts.sumMatch + w.wInterest * v.parts.sumInterest -
            w.wUnassigned * v.parts.unassignedCount - v.parts.penalty;
  return v;
}

namespace {

Genes genes_from_map(const AssignmentInstance& inst,
                     const std::map<std::string, std::optional<std::string>>& assignment) {
  std::map<std::string, int> studentIndex, missionIndex;
  for (std::size_t s = 0; s < inst.students(); ++s) studentIndex[inst.studentIds[s]] = static_cast<int>(s);
  for (std::size_t j = 0; j < inst.missions(); ++j) missionIndex[inst.missionIds[j]] = static_cast<int>(j);
  Genes genes(inst.students(), kUnassigned);
  for (const auto& [sid, mid] : assignment) {
    auto si = studentIndex.find(sid);
    if (si == studentIndex.end()) throw NotFoundError("unknown student " + sid);
    if (!mid) continue;
    auto mi = missionIndex.find(*mid);
    if (mi == missionIndex.end()) throw NotFoundError("unknown mission " + *mid);
    genes[si->second] = mi->second;
  }
  return genes;
}

}  // namespace

ObjectiveValue objective(const AssignmentInstance& inst,
                         const std::map<std::string, std::optional<std::string>>& assignment,
                         const ObjectiveWeights& w) {
  return objective(inst, genes_from_map(inst, assignment), w);
}

Genes genes_of(const AssignmentInstance& inst, const AssignmentPlan& plan) {
  return genes_from_map(inst, plan.assignment);
}

std::string pair_key(const std::string& studentId, const std::string& missionId) {
  return studentId + "/" + missionId;
}

std::vector<BoundViolation> check_proposal_bounds(const AssignmentInstance& inst, const Genes& genes) {
  std::vector<BoundViolation> out;
  const std::vector<int> load = loads(inst, genes);
  for (std::size_t j = 0; j < load.size(); ++j) {
    const int upper = std::min(inst.maxProposed[j], inst.capacity[j]);
    if (load[j] < inst.minProposed[j])
      out.push_back({inst.missionIds[j], "belowMin", inst.minProposed[j], load[j]});
    if (load[j] > upper) out.push_back({inst.missionIds[j], "aboveMax", upper, load[j]});
  }
  return out;
}

std::vector<BoundViolation> check_proposal_bounds(const AssignmentPlan& plan, const AssignmentInstance& inst) {
  return check_proposal_bounds(inst, genes_of(inst, plan));
}

AssignmentPlan make_plan(const AssignmentInstance& inst, const Genes& genes, const ObjectiveWeights& w) {
  AssignmentPlan plan;
  for (std::size_t s = 0; s < inst.students(); ++s) {
    std::optional<std::string> mid;
    if (genes[s] != kUnassigned) mid = inst.missionIds[genes[s]];
    plan.assignment[inst.studentIds[s]] = mid;
  }
  const ObjectiveValue v = objective(inst, genes, w);
  plan.objectiveTotal = v.total;
  plan.objectiveParts = v.parts;
  plan.feasible = v.parts.penalty == 0;
  plan.violations = check_proposal_bounds(inst, genes);
  plan.weights = w;
  return plan;
}

AssignmentPlan brute_force_assign(const AssignmentInstance& inst, const ObjectiveWeights& w) {
  inst.validate();
  w.validate();
  if (inst.students() > kBruteForceMaxStudents || inst.missions() > kBruteForceMaxMissions)
    throw std::invalid_argument("brute_force_assign: at most " + std::to_string(kBruteForceMaxStudents) +
                                " students and " + std::to_string(kBruteForceMaxMissions) + " missions");
  const std::size_t n = inst.students();
  const int m = static_cast<int>(inst.missions());

  std::vector<std::size_t> free;
  Genes genes(n, kUnassigned);
  for (std::size_t s = 0; s < n; ++s) {
    genes[s] = inst.pinned_at(s);
    if (genes[s] == kUnassigned) free.push_back(s);
  }

  Genes best = genes;
  ObjectiveValue bestValue = objective(inst, genes, w);
  bool bestFeasible = bestValue.parts.penalty == 0;
  for (;;) {
    // Odometer over the free genes, last student fastest, so candidates come
    // in lexicographic order.
    std::size_t pos = free.size();
    while (pos > 0) {
      int& g = genes[free[pos - 1]];
      if (g + 1 < m) {
        ++g;
        break;
      }
      g = kUnassigned;
      --pos;
    }
    if (pos == 0) break;
    const ObjectiveValue v = objective(inst, genes, w);
    const bool feasible = v.parts.penalty == 0;
    if ((feasible && !bestFeasible) || (feasible == bestFeasible && v.total > bestValue.total)) {
      best = genes;
      bestValue = v;
      bestFeasible = feasible;
    }
  }
  return make_plan(inst, best, w);
}

Genes greedy_assignment(const AssignmentInstance& inst) {
  const std::size_t n = inst.students(), m = inst.missions();
  Genes genes(n, kUnassigned);
  std::vector<int> room = inst.capacity;
  for (std::size_t s = 0; s < n; ++s) {
    genes[s] = inst.pinned_at(s);
    if (genes[s] != kUnassigned) --room[genes[s]];
  }
  if (m == 0) return genes;

  std::vector<std::size_t> order;
  std::vector<double> best(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (genes[s] != kUnassigned) continue;
    order.push_back(s);
    best[s] = *std::max_element(inst.score[s].begin(), inst.score[s].end());
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return best[a] > best[b]; });

  for (std::size_t s : order) {
    int pick = kUnassigned;
    for (std::size_t j = 0; j < m; ++j) {
      if (room[j] <= 0) continue;
      if (pick == kUnassigned || inst.score[s][j] > inst.score[s][pick]) pick = static_cast<int>(j);
    }
    if (pick == kUnassigned) continue;
    genes[s] = pick;
    --room[pick];
  }
  return genes;
}

void repair(const AssignmentInstance& inst, Genes& genes) {
  std::vector<int> load = loads(inst, genes);
  for (std::size_t j = 0; j < inst.missions(); ++j) {
    if (load[j] <= inst.capacity[j]) continue;
    std::vector<std::size_t> evictable;
    for (std::size_t s = 0; s < genes.size(); ++s)
      if (genes[s] == static_cast<int>(j) && inst.pinned_at(s) == kUnassigned) evictable.push_back(s);
    // Lowest score first; among equals the higher index goes first.
    std::sort(evictable.begin(), evictable.end(), [&](std::size_t a, std::size_t b) {
      if (inst.score[a][j] != inst.score[b][j]) return inst.score[a][j] < inst.score[b][j];
      return a > b;
    });
    for (std::size_t k = 0; k < evictable.size() && load[j] > inst.capacity[j]; ++k) {
      genes[evictable[k]] = kUnassigned;
      --load[j];
    }
  }
}

bool capacity_feasible(const AssignmentInstance& inst, const Genes& genes) {
  const std::vector<int> load = loads(inst, genes);
  for (std::size_t j = 0; j < load.size(); ++j)
    if (load[j] > inst.capacity[j]) return false;
  return true;
}

namespace {

struct Individual {
  Genes genes;
  double fitness = 0;
};

}  // namespace

AssignmentPlan ga_assign(const AssignmentInstance& inst, const GaParams& params, const ObjectiveWeights& w,
                         const GaHooks& hooks) {
  inst.validate();
  params.validate();
  w.validate();
  const std::size_t n = inst.students();
  const int m = static_cast<int>(inst.missions());
  const double mutation = params.mutationRate.value_or(n ? 1.0 / static_cast<double>(n) : 0.0);
  Rng rng(params.seed);

  auto pin = [&](Genes& g) {
    for (std::size_t s = 0; s < n; ++s)
      if (inst.pinned_at(s) != kUnassigned) g[s] = inst.pinned_at(s);
  };
  auto random_gene = [&] { return static_cast<int>(rng.below(static_cast<std::uint64_t>(m) + 1)) - 1; };
  auto evaluate = [&](Genes g) {
    pin(g);
    repair(inst, g);
    const double f = objective(inst, g, w).total;
    return Individual{std::move(g), f};
  };

  std::vector<Individual> pop;
  pop.reserve(params.populationSize);
  pop.push_back(evaluate(greedy_assignment(inst)));
  while (static_cast<int>(pop.size()) < params.populationSize) {
    Genes g(n);
    for (int& x : g) x = random_gene();
    pop.push_back(evaluate(std::move(g)));
  }

  auto by_fitness = [](const Individual& a, const Individual& b) { return a.fitness > b.fitness; };
  std::stable_sort(pop.begin(), pop.end(), by_fitness);
  Individual best = pop.front();
  int stagnant = 0, generation = 0;

  auto report = [&] {
    if (!hooks.observer) return;
    bool feasible = true;
    for (const Individual& ind : pop) feasible = feasible && capacity_feasible(inst, ind.genes);
    hooks.observer({generation, best.fitness, feasible});
  };
  report();

  auto tournament = [&]() -> const Individual& {
    std::size_t pick = rng.below(pop.size());
    for (int t = 1; t < params.tournamentSize; ++t) {
      const std::size_t c = rng.below(pop.size());
      if (pop[c].fitness > pop[pick].fitness || (pop[c].fitness == pop[pick].fitness && c < pick)) pick = c;
    }
    return pop[pick];
  };

  while (generation < params.generations && stagnant < params.stagnationLimit) {
    if (hooks.stop.stop_requested()) throw CancelledError("assignment cancelled");
    std::vector<Individual> next(pop.begin(), pop.begin() + params.elitism);
    while (static_cast<int>(next.size()) < params.populationSize) {
      Genes a = tournament().genes;
      Genes b = tournament().genes;
      if (rng.chance(params.crossoverRate))
        for (std::size_t s = 0; s < n; ++s)
          if (rng.chance(params.geneSwapProbability)) std::swap(a[s], b[s]);
      for (Genes* child : {&a, &b}) {
        for (int& x : *child)
          if (rng.chance(mutation)) x = random_gene();
        if (static_cast<int>(next.size()) < params.populationSize) next.push_back(evaluate(std::move(*child)));
      }
    }
    pop = std::move(next);
    std::stable_sort(pop.begin(), pop.end(), by_fitness);
    ++generation;
    if (pop.front().fitness > best.fitness) {
      best = pop.front();
      stagnant = 0;
    } else {
      ++stagnant;
    }
    report();
  }

  AssignmentPlan plan = make_plan(inst, best.genes, w);
  plan.gaParams = params;
  plan.generationsRun = generation;
  return plan;
}

// --- JSON ------------------------------------------------------------------

void to_json(json& j, const ObjectiveWeights& w) {
  j = {{"wMatch", w.wMatch},
       {"wInterest", w.wInterest},
       {"wUnassigned", w.wUnassigned},
       {"penalty", w.penalty},
       {"boundsInPenalty", w.boundsInPenalty}};
}

void read(const json& j, const std::string& path, ObjectiveWeights& out) {
  ObjectReader r(j, path);
  r.field("wMatch", out.wMatch)
      .field("wInterest", out.wInterest)
      .field("wUnassigned", out.wUnassigned)
      .field("penalty", out.penalty)
      .field("boundsInPenalty", out.boundsInPenalty)
      .finish();
}

void to_json(json& j, const ObjectiveParts& p) {
  j = {{"sumMatch", p.sumMatch},
       {"sumInterest", p.sumInterest},
       {"unassignedCount", p.unassignedCount},
       {"penalty", p.penalty}};
}

void read(const json& j, const std::string& path, ObjectiveParts& out) {
  ObjectReader r(j, path);
  r.field("sumMatch", out.sumMatch)
      .field("sumInterest", out.sumInterest)
      .field("unassignedCount", out.unassignedCount)
      .field("penalty", out.penalty)
      .finish();
}

void to_json(json& j, const BoundViolation& v) {
  j = {{"missionId", v.missionId}, {"kind", v.kind}, {"required", v.required}, {"got", v.got}};
}

void read(const json& j, const std::string& path, BoundViolation& out) {
  ObjectReader r(j, path);
  r.field("missionId", out.missionId)
      .field("kind", out.kind)
      .field("required", out.required)
      .field("got", out.got)
      .finish();
}

void to_json(json& j, const GaParams& p) {
  j = {{"populationSize", p.populationSize},
       {"generations", p.generations},
       {"stagnationLimit", p.stagnationLimit},
       {"tournamentSize", p.tournamentSize},
       {"crossoverRate", p.crossoverRate},
       {"geneSwapProbability", p.geneSwapProbability},
       {"elitism", p.elitism},
       {"seed", p.seed}};
  if (p.mutationRate) j["mutationRate"] = *p.mutationRate;
}

void read(const json& j, const std::string& path, GaParams& out) {
  ObjectReader r(j, path);
  r.field("populationSize", out.populationSize)
      .field("generations", out.generations)
      .field("stagnationLimit", out.stagnationLimit)
      .field("tournamentSize", out.tournamentSize)
      .field("crossoverRate", out.crossoverRate)
      .field("geneSwapProbability", out.geneSwapProbability)
      .field("mutationRate", out.mutationRate)
      .field("elitism", out.elitism)
      .field("seed", out.seed)
      .finish();
}

void to_json(json& j, const AssignmentPlan& p) {
  json assignment = json::object();
  for (const auto& [sid, mid] : p.assignment) assignment[sid] = mid ? json(*mid) : json(nullptr);
  json args = json::object();
  for (const auto& [key, list] : p.argumentsPerPair) args[key] = list;
  j = {{"assignment", std::move(assignment)},
       {"objectiveTotal", p.objectiveTotal},
       {"objectiveParts", p.objectiveParts},
       {"feasible", p.feasible},
       {"violations", p.violations},
       {"argumentsPerPair", std::move(args)},
       {"weights", p.weights},
       {"generationsRun", p.generationsRun}};
  if (p.gaParams) j["gaParams"] = *p.gaParams;
  if (p.matchWeights) j["matchWeights"] = *p.matchWeights;
}

void read(const json& j, const std::string& path, AssignmentPlan& out) {
  ObjectReader r(j, path);
  r.field("assignment", out.assignment)
      .field("objectiveTotal", out.objectiveTotal)
      .field("objectiveParts", out.objectiveParts)
      .field("feasible", out.feasible)
      .field("violations", out.violations)
      .field("argumentsPerPair", out.argumentsPerPair)
      .field("weights", out.weights)
      .field("gaParams", out.gaParams)
      .field("matchWeights", out.matchWeights)
      .field("generationsRun", out.generationsRun)
      .finish();
}

}  // namespace placement
