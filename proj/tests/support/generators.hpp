#pragma once

#include <cmath>
#include <string>

#include "placement/random.hpp"
#include "placement/vsm.hpp"

namespace testkit {

using namespace placement;

// Sparse vector over a universe of `dims` ids, each present with probability
// `density`, weights in (0, 5].
inline ConceptVector random_sparse_vector(Rng& rng, int dims, double density) {
  ConceptVector v;
  for (int d = 0; d < dims; ++d)
    if (rng.chance(density)) v.set("c" + std::to_string(d), 5.0 * (1.0 - rng.uniform()));
  return v;
}

// Textbook cosine over the union of supports in long double.
inline double reference_cosine(const ConceptVector& u, const ConceptVector& v) {
  long double dot = 0, nu = 0, nv = 0;
  for (const auto& [id, w] : u.weights()) {
    nu += static_cast<long double>(w) * w;
    dot += static_cast<long double>(w) * v.get(id);
  }
  for (const auto& [id, w] : v.weights()) nv += static_cast<long double>(w) * w;
  if (nu == 0 || nv == 0) return 0.0;
  return static_cast<double>(dot / (std::sqrt(nu) * std::sqrt(nv)));
}

}  // namespace testkit
