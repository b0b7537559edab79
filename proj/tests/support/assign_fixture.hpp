#pragma once

#include <functional>
#include <string>

#include "placement/assign.hpp"
#include "placement/random.hpp"

namespace testkit {

using namespace placement;

// Up to `maxStudents` x `maxMissions`, scores on a coarse grid so ties occur.
inline AssignmentInstance random_instance(Rng& rng, std::size_t maxStudents = 6, std::size_t maxMissions = 4) {
  AssignmentInstance inst;
  const std::size_t n = 1 + rng.below(maxStudents);
  const std::size_t m = 1 + rng.below(maxMissions);
  for (std::size_t s = 0; s < n; ++s) inst.studentIds.push_back("s" + std::to_string(s));
  for (std::size_t j = 0; j < m; ++j) inst.missionIds.push_back("m" + std::to_string(j));
  inst.score.assign(n, std::vector<double>(m));
  inst.interest.assign(n, std::vector<double>(m));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t j = 0; j < m; ++j) {
      inst.score[s][j] = static_cast<double>(rng.below(21)) / 20.0;
      inst.interest[s][j] = static_cast<double>(rng.below(5)) / 4.0;
    }
  for (std::size_t j = 0; j < m; ++j) {
    const int cap = 1 + static_cast<int>(rng.below(2));
    inst.capacity.push_back(cap);
    const int lo = static_cast<int>(rng.below(2));
    inst.minProposed.push_back(lo);
    inst.maxProposed.push_back(lo + static_cast<int>(rng.below(3)));
  }
  return inst;
}

struct ReferenceOptimum {
  Genes genes;
  double total = 0;
  bool feasible = false;
};

inline double reference_total(const AssignmentInstance& inst, const Genes& g, const ObjectiveWeights& w,
                              bool* feasible) {
  double match = 0, interest = 0;
  int unassigned = 0;
  std::vector<int> load(inst.missions(), 0);
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (g[s] < 0) {
      ++unassigned;
      continue;
    }
    match += inst.score[s][g[s]];
    interest += inst.interest[s][g[s]];
    ++load[g[s]];
  }
  int excess = 0;
  for (std::size_t j = 0; j < load.size(); ++j) excess += std::max(0, load[j] - inst.capacity[j]);
  if (feasible) *feasible = excess == 0;
  return w.wMatch * match + w.wInterest * interest - w.wUnassigned * unassigned - w.penalty * excess;
}

// Depth-first enumeration of every gene vector in lexicographic order
// (unassigned first); keeps the first best, preferring feasible vectors.
inline ReferenceOptimum reference_optimum(const AssignmentInstance& inst, const ObjectiveWeights& w = {}) {
  ReferenceOptimum best;
  bool have = false;
  Genes g(inst.students(), -1);
  std::function<void(std::size_t)> walk = [&](std::size_t s) {
    if (s == g.size()) {
      bool feasible = false;
      const double t = reference_total(inst, g, w, &feasible);
      if (!have || (feasible && !best.feasible) || (feasible == best.feasible && t > best.total)) {
        best = {g, t, feasible};
        have = true;
      }
      return;
    }
    const int pin = inst.pinned.empty() ? -1 : inst.pinned[s];
    if (pin >= 0) {
      g[s] = pin;
      walk(s + 1);
      return;
    }
    for (int x = -1; x < static_cast<int>(inst.missions()); ++x) {
      g[s] = x;
      walk(s + 1);
    }
  };
  walk(0);
  return best;
}

}  // namespace testkit
