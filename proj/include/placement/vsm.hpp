#pragma once

#include <map>
#include <span>
#include <string>

#include "placement/json_util.hpp"
#include "placement/ontology.hpp"

namespace placement {

// Sparse non-negative weights over concept ids. Zero weights are never
// stored, so two vectors compare equal iff they have the same support and
// weights.
class ConceptVector {
 public:
  using Map = std::map<ConceptId, double>;

  ConceptVector() = default;
  ConceptVector(std::initializer_list<Map::value_type> init);

  // Throws std::invalid_argument on negative or non-finite weights.
  void set(const ConceptId& id, double weight);
  void add(const ConceptId& id, double weight);
  double get(const ConceptId& id) const;

  const Map& weights() const { return weights_; }
  bool empty() const { return weights_.empty(); }
  std::size_t size() const { return weights_.size(); }

  double norm() const;
  ConceptVector scaled(double factor) const;
  ConceptVector normalized() const;

  bool operator==(const ConceptVector&) const = default;

 private:
  Map weights_;
};

// Categories that span the mission space.
bool in_mission_space(Category c);

// Weight 1 per distinct Action, DomainAction and ActivityArea concept.
// Throws PreconditionError for un-annotated missions and NotFoundError when
// a concept id is missing from the lexicon.
ConceptVector mission_vector(const Mission& mission, const Lexicon& lexicon);

// Sum over marked courses of (mark / 20) * coefficient on each course
// keyword. With a lexicon, keywords outside the mission space are dropped.
// Throws NotFoundError when the training or a marked course does not resolve.
ConceptVector student_vector(const StudentProfile& student, const University& university,
                             std::span<const Mark> marks, const Lexicon* lexicon = nullptr);

// Cosine over the union of supports, clamped to [0, 1]; 0 when either side
// is empty.
double cosine(const ConceptVector& u, const ConceptVector& v);

void to_json(json& j, const ConceptVector& v);
void read(const json& j, const std::string& path, ConceptVector& out);

}  // namespace placement
