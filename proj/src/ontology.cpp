#include "placement/ontology.hpp"

#include <algorithm>
#include <set>

#include "placement/text.hpp"

namespace placement {

std::string_view to_string(Category c) {
  switch (c) {
    case Category::Action: return "Action";
    case Category::DomainAction: return "DomainAction";
    case Category::ActivityArea: return "ActivityArea";
    case Category::SkillKeyword: return "SkillKeyword";
  }
  return "Action";
}

std::optional<Category> category_from_string(std::string_view s) {
  if (s == "Action") return Category::Action;
  if (s == "DomainAction") return Category::DomainAction;
  if (s == "ActivityArea") return Category::ActivityArea;
  if (s == "SkillKeyword") return Category::SkillKeyword;
  return std::nullopt;
}

std::string_view to_string(StudentStatus s) {
  switch (s) {
    case StudentStatus::VAE: return "VAE";
    case StudentStatus::InitialTraining: return "InitialTraining";
    case StudentStatus::ContinuousTraining: return "ContinuousTraining";
  }
  return "InitialTraining";
}

std::string_view to_string(StudentRole) { return "Delegate"; }

std::string_view to_string(Outcome o) {
  return o == Outcome::Success ? "Success" : "Difficulty";
}

const ConceptEntry* Lexicon::find(std::string_view id) const {
  auto it = std::find_if(entries.begin(), entries.end(),
                         [&](const ConceptEntry& e) { return e.id == id; });
  return it == entries.end() ? nullptr : &*it;
}

std::optional<ConceptId> lookup_concept(const Lexicon& lexicon, Category category,
                                        std::string_view surface) {
  const std::string key = normalize_phrase(surface);
  if (key.empty()) return std::nullopt;
  for (const ConceptEntry& e : lexicon.entries) {
    if (e.category != category) continue;
    if (normalize_phrase(e.label) == key) return e.id;
    for (const std::string& syn : e.synonyms) {
      if (normalize_phrase(syn) == key) return e.id;
    }
  }
  return std::nullopt;
}

const Training* University::find_training(std::string_view id) const {
  for (const Department& d : departments)
    for (const Training& t : d.trainings)
      if (t.id == id) return &t;
  return nullptr;
}

const Course* University::find_course(std::string_view id) const {
  for (const Department& d : departments)
    for (const Training& t : d.trainings)
      for (const TeachingUnit& u : t.teachingUnits)
        for (const TeachingModule& m : u.modules)
          for (const Course& c : m.courses)
            if (c.id == id) return &c;
  return nullptr;
}

std::vector<const Course*> University::all_courses() const {
  std::vector<const Course*> out;
  for (const Department& d : departments)
    for (const Training& t : d.trainings)
      for (const TeachingUnit& u : t.teachingUnits)
        for (const TeachingModule& m : u.modules)
          for (const Course& c : m.courses) out.push_back(&c);
  return out;
}

namespace {

template <typename T>
auto find_by_id(T& items, std::string_view id) -> decltype(&items.front()) {
  auto it = std::find_if(items.begin(), items.end(), [&](const auto& x) { return x.id == id; });
  return it == items.end() ? nullptr : &*it;
}

}  // namespace

const Company* InstanceStore::find_company(std::string_view id) const {
  return find_by_id(companies, id);
}
const Mission* InstanceStore::find_mission(std::string_view id) const {
  return find_by_id(missions, id);
}
Mission* InstanceStore::find_mission(std::string_view id) { return find_by_id(missions, id); }
const StudentProfile* InstanceStore::find_student(std::string_view id) const {
  return find_by_id(students, id);
}

std::vector<Mark> InstanceStore::marks_of(std::string_view studentId) const {
  std::vector<Mark> out;
  for (const Mark& m : marks)
    if (m.studentId == studentId) out.push_back(m);
  return out;
}

std::vector<const Mission*> InstanceStore::open_missions() const {
  std::set<std::string_view> past;
  for (const PastPlacement& p : pastPlacements) past.insert(p.missionId);
  std::vector<const Mission*> out;
  for (const Mission& m : missions)
    if (!past.contains(m.id)) out.push_back(&m);
  return out;
}

std::vector<const StudentProfile*> InstanceStore::cohort() const {
  std::set<std::string_view> alumni;
  for (const PastPlacement& p : pastPlacements) alumni.insert(p.studentId);
  std::vector<const StudentProfile*> out;
  for (const StudentProfile& s : students)
    if (!alumni.contains(s.id)) out.push_back(&s);
  return out;
}

ProposalBounds effective_bounds(const InstanceStore& store, const Mission& mission) {
  ProposalBounds b{mission.minStudentsProposed, mission.maxStudentsProposed};
  for (const UniversityConstraint& c : store.constraints) {
    const bool applies = (c.missionId && *c.missionId == mission.id) ||
                         (c.companyId && *c.companyId == mission.companyId);
    if (!applies) continue;
    b.minProposed = std::max(b.minProposed, c.minProposed);
    b.maxProposed = std::min(b.maxProposed, c.maxProposed);
  }
  return b;
}

}  // namespace placement
