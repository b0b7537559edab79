#include "placement/cluster.hpp"

#include <algorithm>
#include <stdexcept>

#include "placement/random.hpp"

namespace placement {

int ClusterModel::cluster_of(const std::string& id) const {
  for (std::size_t c = 0; c < members.size(); ++c)
    if (std::find(members[c].begin(), members[c].end(), id) != members[c].end())
      return static_cast<int>(c);
  return -1;
}

namespace {

struct Points {
  std::vector<std::string> ids;
  std::vector<ConceptVector> unit;
};

Points prepare(const std::map<std::string, ConceptVector>& vectors) {
  Points p;
  for (const auto& [id, v] : vectors) {
    if (v.empty()) throw PreconditionError("cannot cluster mission " + id + ": empty concept vector");
    p.ids.push_back(id);
    p.unit.push_back(v.normalized());
  }
  return p;
}

std::size_t nearest(const ConceptVector& x, const std::vector<ConceptVector>& centroids,
                    double* similarity = nullptr) {
  std::size_t best = 0;
  double bestSim = -1;
  for (std::size_t c = 0; c < centroids.size(); ++c) {
    const double s = cosine(x, centroids[c]);
    if (s > bestSim) {
      bestSim = s;
      best = c;
    }
  }
  if (similarity) *similarity = bestSim;
  return best;
}

double inertia_of(const Points& p, const std::vector<std::size_t>& assign,
                  const std::vector<ConceptVector>& centroids) {
  double total = 0;
  for (std::size_t i = 0; i < p.unit.size(); ++i) total += 1.0 - cosine(p.unit[i], centroids[assign[i]]);
  return total;
}

std::vector<ConceptVector> seed_plus_plus(const Points& p, int k, Rng& rng) {
  const std::size_t n = p.unit.size();
  std::vector<ConceptVector> centroids;
  std::vector<bool> chosen(n, false);
  std::vector<double> dist(n, 1.0);

  std::size_t first = rng.below(n);
  centroids.push_back(p.unit[first]);
  chosen[first] = true;

  while (static_cast<int>(centroids.size()) < k) {
    for (std::size_t i = 0; i < n; ++i)
      dist[i] = std::min(dist[i], 1.0 - cosine(p.unit[i], centroids.back()));

    double total = 0;
    for (double d : dist) total += d * d;

    std::size_t pick = n;
    if (total > 0) {
      const double r = rng.uniform() * total;
      double acc = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (dist[i] <= 0) continue;
        acc += dist[i] * dist[i];
        pick = i;
        if (acc > r) break;
      }
    } else {
      // Every point coincides with a centroid: take the farthest unchosen
      // point (lowest index on ties), which duplicates an existing centroid.
      double far = -1;
      for (std::size_t i = 0; i < n; ++i) {
        if (!chosen[i] && dist[i] > far) {
          far = dist[i];
          pick = i;
        }
      }
      if (pick == n) pick = 0;
    }
    centroids.push_back(p.unit[pick]);
    chosen[pick] = true;
  }
  return centroids;
}

}  // namespace

ClusterModel kmeans(const std::map<std::string, ConceptVector>& vectors, int k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("kmeans: k must be >= 1");
  if (static_cast<std::size_t>(k) > vectors.size())
    throw std::invalid_argument("kmeans: k = " + std::to_string(k) + " exceeds the " +
                                std::to_string(vectors.size()) + " vectors");
  const Points p = prepare(vectors);
  const std::size_t n = p.unit.size();
  Rng rng(seed);

  ClusterModel model;
  model.k = k;
  model.seed = seed;
  model.centroids = seed_plus_plus(p, k, rng);

  std::vector<std::size_t> assign(n, static_cast<std::size_t>(-1));
  std::vector<int> reseeds(k, 0);

  for (int iter = 0; iter < kMaxKMeansIterations; ++iter) {
    std::vector<std::size_t> next(n);
    for (std::size_t i = 0; i < n; ++i) next[i] = nearest(p.unit[i], model.centroids);
    model.inertiaTrace.push_back(inertia_of(p, next, model.centroids));
    if (next == assign) break;
    assign = std::move(next);

    std::vector<ConceptVector> sums(k);
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [id, w] : p.unit[i].weights()) sums[assign[i]].add(id, w);
      ++counts[assign[i]];
    }
    for (int c = 0; c < k; ++c)
      if (counts[c] > 0) model.centroids[c] = sums[c].normalized();

    for (int c = 0; c < k; ++c) {
      if (counts[c] > 0 || reseeds[c] >= 1) continue;
      ++reseeds[c];
      std::size_t far = 0;
      double farDist = -1;
      for (std::size_t i = 0; i < n; ++i) {
        const double d = 1.0 - cosine(p.unit[i], model.centroids[assign[i]]);
        if (d > farDist) {
          farDist = d;
          far = i;
        }
      }
      model.centroids[c] = p.unit[far];
    }
    model.inertiaTrace.push_back(inertia_of(p, assign, model.centroids));
    model.iterations = iter + 1;
  }

  model.members.assign(k, {});
  for (std::size_t i = 0; i < n; ++i) model.members[assign[i]].push_back(p.ids[i]);
  model.inertia = inertia_of(p, assign, model.centroids);
  model.effectiveK = static_cast<int>(
      std::count_if(model.members.begin(), model.members.end(), [](const auto& m) { return !m.empty(); }));
  model.degenerate = model.effectiveK < k;
  return model;
}

ClusterAssignment assign_to_cluster(const ConceptVector& vector, const ClusterModel& model) {
  if (vector.empty()) throw PreconditionError("cannot classify an empty concept vector");
  if (model.centroids.empty()) throw std::invalid_argument("cluster model has no centroids");
  ClusterAssignment out;
  out.index = static_cast<int>(nearest(vector, model.centroids, &out.similarity));
  return out;
}

double mean_silhouette(const std::map<std::string, ConceptVector>& vectors, const ClusterModel& model) {
  std::vector<const std::vector<std::string>*> clusters;
  for (const auto& m : model.members)
    if (!m.empty()) clusters.push_back(&m);
  if (clusters.size() < 2) return 0.0;

  auto dist = [&](const std::string& a, const std::string& b) {
    return 1.0 - cosine(vectors.at(a), vectors.at(b));
  };
  auto mean_dist = [&](const std::string& x, const std::vector<std::string>& to) {
    double s = 0;
    std::size_t cnt = 0;
    for (const std::string& y : to) {
      if (y == x) continue;
      s += dist(x, y);
      ++cnt;
    }
    return cnt ? s / static_cast<double>(cnt) : 0.0;
  };

  double total = 0;
  std::size_t points = 0;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    for (const std::string& x : *clusters[c]) {
      const double a = mean_dist(x, *clusters[c]);
      double b = std::numeric_limits<double>::infinity();
      for (std::size_t o = 0; o < clusters.size(); ++o)
        if (o != c) b = std::min(b, mean_dist(x, *clusters[o]));
      const double denom = std::max(a, b);
      total += denom > 0 ? (b - a) / denom : 0.0;
      ++points;
    }
  }
  return total / static_cast<double>(points);
}

int choose_k(const std::map<std::string, ConceptVector>& vectors, int kMin, int kMax,
             std::uint64_t seed) {
  if (kMin < 1 || kMin > kMax || static_cast<std::size_t>(kMax) > vectors.size())
    throw std::invalid_argument("choose_k: need 1 <= kMin <= kMax <= n");
  int bestK = kMin;
  double best = -std::numeric_limits<double>::infinity();
  for (int k = kMin; k <= kMax; ++k) {
    const double s = mean_silhouette(vectors, kmeans(vectors, k, seed));
    if (s > best + 1e-12) {
      best = s;
      bestK = k;
    }
  }
  return bestK;
}

void to_json(json& j, const ClusterModel& m) {
  j = {{"k", m.k},
       {"centroids", m.centroids},
       {"members", m.members},
       {"seed", m.seed},
       {"inertia", m.inertia},
       {"iterations", m.iterations},
       {"degenerate", m.degenerate},
       {"effectiveK", m.effectiveK},
       {"inertiaTrace", m.inertiaTrace}};
}

void read(const json& j, const std::string& path, ClusterModel& out) {
  ObjectReader r(j, path);
  r.field("k", out.k)
      .field("centroids", out.centroids)
      .field("members", out.members)
      .field("seed", out.seed)
      .field("inertia", out.inertia)
      .field("iterations", out.iterations)
      .field("degenerate", out.degenerate)
      .field("effectiveK", out.effectiveK)
      .field("inertiaTrace", out.inertiaTrace)
      .finish();
}

}  // namespace placement
