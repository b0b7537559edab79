#include "placement/vsm.hpp"

#include <cmath>
#include <stdexcept>

namespace placement {

ConceptVector::ConceptVector(std::initializer_list<Map::value_type> init) {
  for (const auto& [id, w] : init) set(id, w);
}

void ConceptVector::set(const ConceptId& id, double weight) {
  if (!std::isfinite(weight) || weight < 0)
    throw std::invalid_argument("concept weight must be finite and >= 0 (" + id + ")");
  if (weight == 0) {
    weights_.erase(id);
  } else {
    weights_[id] = weight;
  }
}

void ConceptVector::add(const ConceptId& id, double weight) { set(id, get(id) + weight); }

double ConceptVector::get(const ConceptId& id) const {
  auto it = weights_.find(id);
  return it == weights_.end() ? 0.0 : it->second;
}

double ConceptVector::norm() const {
  double s = 0;
  for (const auto& [_, w] : weights_) s += w * w;
  return std::sqrt(s);
}

ConceptVector ConceptVector::scaled(double factor) const {
  ConceptVector out;
  for (const auto& [id, w] : weights_) out.set(id, w * factor);
  return out;
}

ConceptVector ConceptVector::normalized() const {
  const double n = norm();
  return n > 0 ? scaled(1.0 / n) : ConceptVector{};
}

bool in_mission_space(Category c) {
  return c == Category::Action || c == Category::DomainAction || c == Category::ActivityArea;
}

ConceptVector mission_vector(const Mission& mission, const Lexicon& lexicon) {
  if (!mission.annotated())
    throw PreconditionError("mission " + mission.id + " has no annotations; annotate it first");
  ConceptVector v;
  auto put = [&](const ConceptId& id) {
    const ConceptEntry* e = lexicon.find(id);
    if (!e) throw NotFoundError("mission " + mission.id + ": unknown concept " + id);
    if (in_mission_space(e->category)) v.set(id, 1.0);
  };
  for (const Competency& c : mission.competencies) {
    put(c.action);
    put(c.domainAction);
  }
  for (const ConceptId& a : mission.activityAreas) put(a);
  return v;
}

ConceptVector student_vector(const StudentProfile& student, const University& university,
                             std::span<const Mark> marks, const Lexicon* lexicon) {
  if (!university.find_training(student.academic.trainingId))
    throw NotFoundError("student " + student.id + ": unresolved training " +
                        student.academic.trainingId);
  ConceptVector v;
  for (const Mark& m : marks) {
    if (m.studentId != student.id) continue;
    const Course* course = university.find_course(m.courseId);
    if (!course) throw NotFoundError("mark references unknown course " + m.courseId);
    const double contribution = (m.value / 20.0) * course->coefficient;
    for (const ConceptId& k : course->keywords) {
      if (lexicon) {
        const ConceptEntry* e = lexicon->find(k);
        if (!e || !in_mission_space(e->category)) continue;
      }
      v.add(k, contribution);
    }
  }
  return v;
}

double cosine(const ConceptVector& u, const ConceptVector& v) {
  if (u.empty() || v.empty()) return 0.0;
  // The intersection is walked in key order from either side, so the sum
  // order (and hence the result) does not depend on argument order.
  const auto& small = u.size() <= v.size() ? u.weights() : v.weights();
  const auto& large = u.size() <= v.size() ? v.weights() : u.weights();
  double dot = 0;
  for (const auto& [id, w] : small) {
    auto it = large.find(id);
    if (it != large.end()) dot += w * it->second;
  }
  const double denom = u.norm() * v.norm();
  if (denom == 0) return 0.0;
  const double c = dot / denom;
  return std::clamp(c, 0.0, 1.0);
}

void to_json(json& j, const ConceptVector& v) {
  j = json::object();
  for (const auto& [id, w] : v.weights()) j[id] = w;
}

void read(const json& j, const std::string& path, ConceptVector& out) {
  if (!j.is_object()) throw SchemaError(path + ": expected object");
  out = ConceptVector{};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it->is_number()) throw SchemaError(path + "." + it.key() + ": expected number");
    try {
      out.set(it.key(), it->get<double>());
    } catch (const std::invalid_argument& e) {
      throw SchemaError(path + "." + it.key() + ": " + e.what());
    }
  }
}

}  // namespace placement
