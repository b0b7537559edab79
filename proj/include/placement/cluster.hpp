#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "placement/json_util.hpp"
#include "placement/vsm.hpp"

namespace placement {

inline constexpr int kMaxKMeansIterations = 100;

struct ClusterModel {
  int k = 0;
  std::vector<ConceptVector> centroids;          // unit length
  std::vector<std::vector<std::string>> members;  // cluster index -> mission ids
  std::uint64_t seed = 0;
  double inertia = 0;  // sum of (1 - cosine(member, centroid))
  int iterations = 0;
  // Set when an empty cluster could not be re-seeded; effectiveK then counts
  // only the non-empty clusters.
  bool degenerate = false;
  int effectiveK = 0;
  // Inertia after every assignment and every centroid update, in order.
  std::vector<double> inertiaTrace;

  // Cluster holding the id, or -1.
  int cluster_of(const std::string& id) const;
  bool operator==(const ClusterModel&) const = default;
};

// Spherical k-means with cosine distance and k-means++ seeding. Throws
// std::invalid_argument when k < 1 or k > n, PreconditionError naming the
// first empty vector.
ClusterModel kmeans(const std::map<std::string, ConceptVector>& vectors, int k, std::uint64_t seed);

struct ClusterAssignment {
  int index = 0;
  double similarity = 0;
};

// Nearest centroid by cosine; ties go to the lowest index.
ClusterAssignment assign_to_cluster(const ConceptVector& vector, const ClusterModel& model);

// Mean silhouette under cosine distance. A point alone in its cluster has
// mean intra-cluster distance 0; fewer than two non-empty clusters score 0.
double mean_silhouette(const std::map<std::string, ConceptVector>& vectors,
                       const ClusterModel& model);

// k in [kMin, kMax] with the highest mean silhouette; ties keep the smaller k.
int choose_k(const std::map<std::string, ConceptVector>& vectors, int kMin, int kMax,
             std::uint64_t seed);

void to_json(json& j, const ClusterModel& m);
void read(const json& j, const std::string& path, ClusterModel& out);

}  // namespace placement
