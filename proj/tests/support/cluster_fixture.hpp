#pragma once

#include <map>
#include <set>
#include <string>

#include "placement/cluster.hpp"
#include "placement/random.hpp"

namespace testkit {

using namespace placement;
using Vectors = std::map<std::string, ConceptVector>;

inline std::set<std::set<std::string>> partition_of(const ClusterModel& m) {
  std::set<std::set<std::string>> out;
  for (const auto& members : m.members)
    if (!members.empty()) out.insert(std::set<std::string>(members.begin(), members.end()));
  return out;
}

// `groups` planted groups of `size` points, each group on its own axes with
// light noise on a shared axis.
inline Vectors planted(Rng& rng, int groups, int size) {
  Vectors v;
  for (int g = 0; g < groups; ++g)
    for (int i = 0; i < size; ++i) {
      ConceptVector x;
      x.set("g" + std::to_string(g) + "a", 1.0 + 0.2 * rng.uniform());
      x.set("g" + std::to_string(g) + "b", 0.5 + 0.5 * rng.uniform());
      x.set("shared", 0.1 * rng.uniform() + 1e-3);
      v["p" + std::to_string(g) + "_" + std::to_string(i)] = x;
    }
  return v;
}

inline std::set<std::set<std::string>> planted_partition(int groups, int size) {
  std::set<std::set<std::string>> out;
  for (int g = 0; g < groups; ++g) {
    std::set<std::string> s;
    for (int i = 0; i < size; ++i) s.insert("p" + std::to_string(g) + "_" + std::to_string(i));
    out.insert(s);
  }
  return out;
}

}  // namespace testkit
