#include "placement/validate.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <set>

#include "placement/text.hpp"

namespace placement {

bool valid_identifier(std::string_view id) {
  if (id.empty() || id == "store") return false;
  for (char c : id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '_' || c == '.' || c == ':' || c == '-';
    if (!ok) return false;
  }
  return true;
}

bool valid_iso_date(std::string_view date) {
  if (date.size() != 10 || date[4] != '-' || date[7] != '-') return false;
  auto digits = [&](std::size_t from, std::size_t n) {
    int v = 0;
    for (std::size_t i = from; i < from + n; ++i) {
      if (date[i] < '0' || date[i] > '9') return -1;
      v = v * 10 + (date[i] - '0');
    }
    return v;
  };
  const int y = digits(0, 4), m = digits(5, 2), d = digits(8, 2);
  if (y < 0 || m < 0 || d < 0) return false;
  const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{unsigned(m)},
                                        std::chrono::day{unsigned(d)}};
  return ymd.ok();
}

namespace {

class Checker {
 public:
  ValidationReport report;

  void fail(const std::string& entity, std::string message) {
    report.push_back({entity, std::move(message)});
  }

  void check(bool ok, const std::string& entity, std::string message) {
    if (!ok) fail(entity, std::move(message));
  }

  void score(double v, const std::string& entity, const std::string& field) {
    check(std::isfinite(v) && v >= 0 && v <= 20, entity, field + " out of [0,20]");
  }

  // Registers an identifier in the single namespace shared by all entities.
  void identifier(const std::string& id, const std::string& kind) {
    if (!valid_identifier(id)) {
      fail(id.empty() ? kind : id, "invalid " + kind + " identifier '" + id + "'");
      return;
    }
    auto [it, inserted] = seen_.emplace(id, kind);
    if (!inserted) fail(id, "duplicate identifier (already used by a " + it->second + ")");
  }

 private:
  std::map<std::string, std::string> seen_;
};

void check_lexicon(const Lexicon& lexicon, Checker& c) {
  std::map<std::pair<Category, std::string>, std::string> surfaces;
  for (const ConceptEntry& e : lexicon.entries) {
    c.identifier(e.id, "concept");
    c.check(!normalize_phrase(e.label).empty(), e.id, "empty label");

    std::vector<std::string> forms{e.label};
    forms.insert(forms.end(), e.synonyms.begin(), e.synonyms.end());
    for (const std::string& form : forms) {
      const std::string key = normalize_phrase(form);
      if (key.empty()) continue;
      auto [it, inserted] = surfaces.emplace(std::pair{e.category, key}, e.id);
      if (!inserted && it->second != e.id)
        c.fail(e.id, "surface '" + key + "' already maps to " + it->second + " in category " +
                         std::string(to_string(e.category)));
    }
  }
}

}  // namespace

ValidationReport validate_lexicon(const Lexicon& lexicon) {
  Checker c;
  check_lexicon(lexicon, c);
  return c.report;
}

ValidationReport validate_store(const InstanceStore& store) {
  Checker c;
  check_lexicon(store.lexicon, c);

  auto concept_in = [&](const ConceptId& id, std::initializer_list<Category> allowed) {
    const ConceptEntry* e = store.lexicon.find(id);
    if (!e) return false;
    for (Category cat : allowed)
      if (e->category == cat) return true;
    return false;
  };

  for (const Company& co : store.companies) {
    c.identifier(co.id, "company");
    c.check(co.employeeCount >= 0, co.id, "employeeCount < 0");
  }

  // University first so course/training ids are registered.
  const University& u = store.university;
  std::set<std::string> teacherIds;
  for (const Teacher& t : u.teachers) {
    c.identifier(t.id, "teacher");
    teacherIds.insert(t.id);
  }
  std::set<std::string> departmentIds;
  for (const Department& d : u.departments) {
    c.identifier(d.id, "department");
    departmentIds.insert(d.id);
    for (const Training& t : d.trainings) {
      c.identifier(t.id, "training");
      for (const TeachingUnit& tu : t.teachingUnits) {
        c.identifier(tu.id, "teachingUnit");
        for (const ConceptId& k : tu.keywords)
          c.check(store.lexicon.find(k) != nullptr, tu.id, "unresolved keyword " + k);
        for (const TeachingModule& m : tu.modules) {
          c.identifier(m.id, "module");
          c.check(std::isfinite(m.hours) && m.hours >= 0, m.id, "hours < 0");
          c.check(std::isfinite(m.ects) && m.ects >= 0, m.id, "ects < 0");
          c.check(std::isfinite(m.coefficient) && m.coefficient > 0, m.id, "coefficient <= 0");
          for (const Course& co : m.courses) {
            c.identifier(co.id, "course");
            c.check(std::isfinite(co.hours) && co.hours > 0, co.id, "hours <= 0");
            c.check(std::isfinite(co.ects) && co.ects >= 0, co.id, "ects < 0");
            c.check(std::isfinite(co.coefficient) && co.coefficient > 0, co.id,
                    "coefficient <= 0");
            for (const ConceptId& k : co.keywords)
              c.check(store.lexicon.find(k) != nullptr, co.id, "unresolved keyword " + k);
            c.check(co.teacherId.empty() || teacherIds.contains(co.teacherId), co.id,
                    "unresolved teacherId " + co.teacherId);
          }
        }
      }
    }
  }
  for (std::size_t i = 0; i < u.partnerships.size(); ++i) {
    const Partnership& p = u.partnerships[i];
    const std::string entity = "partnership:" + p.departmentId + ":" + p.companyId;
    c.check(departmentIds.contains(p.departmentId), entity,
            "unresolved departmentId " + p.departmentId);
    c.check(store.find_company(p.companyId) != nullptr, entity,
            "unresolved companyId " + p.companyId);
  }

  for (const Mission& m : store.missions) {
    c.identifier(m.id, "mission");
    c.check(store.find_company(m.companyId) != nullptr, m.id,
            "unresolved companyId " + m.companyId);
    for (const Competency& comp : m.competencies) {
      c.check(concept_in(comp.action, {Category::Action}), m.id,
              "competency action " + comp.action + " is not an Action concept");
      c.check(concept_in(comp.domainAction, {Category::DomainAction}), m.id,
              "competency domainAction " + comp.domainAction + " is not a DomainAction concept");
    }
    for (const ConceptId& a : m.activityAreas)
      c.check(concept_in(a, {Category::ActivityArea}), m.id,
              "activityArea " + a + " is not an ActivityArea concept");
    c.check(m.annotated() || !m.rawText.empty(), m.id,
            "no annotations and no rawText to annotate");
    c.check(m.experienceRequired.months >= 0, m.id, "experience months < 0");
    for (const Task& t : m.tasks) {
      const bool dates = valid_iso_date(t.startDate) && valid_iso_date(t.endDate);
      c.check(dates, m.id, "task '" + t.label + "' has a malformed date");
      if (dates) c.check(t.startDate <= t.endDate, m.id, "task '" + t.label + "' ends before it starts");
    }
    c.check(m.durationWeeks > 0, m.id, "durationWeeks <= 0");
    c.check(m.history.yearsPartnership >= 0 && m.history.totalMissions >= 0 &&
                m.history.missionsWithDifficulties >= 0,
            m.id, "negative history count");
    c.check(m.history.missionsWithDifficulties <= m.history.totalMissions, m.id,
            "missionsWithDifficulties > totalMissions");
    c.check(m.minStudentsProposed >= 1, m.id, "minStudentsProposed < 1");
    c.check(m.maxStudentsProposed >= m.minStudentsProposed, m.id,
            "maxStudentsProposed < minStudentsProposed");
    c.check(m.capacity >= 1, m.id, "capacity < 1");
  }

  for (const StudentProfile& s : store.students) {
    c.identifier(s.id, "student");
    c.check(s.administrative.age > 0, s.id, "age <= 0");
    c.check(!s.administrative.email.empty(), s.id, "empty email");
    c.check(u.find_training(s.academic.trainingId) != nullptr, s.id,
            "unresolved trainingId " + s.academic.trainingId);
    if (s.evaluationRecord) {
      c.score(s.evaluationRecord->oralPresentation, s.id, "oralPresentation");
      c.score(s.evaluationRecord->qualityOfWork, s.id, "qualityOfWork");
      c.score(s.evaluationRecord->behavior, s.id, "behavior");
    }
    if (s.candidateRecord) {
      c.score(s.candidateRecord->experienceQuality, s.id, "experienceQuality");
      c.score(s.candidateRecord->projectManagementKnowledge, s.id, "projectManagementKnowledge");
      c.score(s.candidateRecord->cvOverallRating, s.id, "cvOverallRating");
      c.score(s.candidateRecord->autonomy, s.id, "autonomy");
    }
    for (const ConceptId& k : s.interests.missionKeywords)
      c.check(concept_in(k, {Category::SkillKeyword, Category::ActivityArea}), s.id,
              "interest keyword " + k + " is not a SkillKeyword/ActivityArea concept");
    for (const std::string& co : s.interests.preferredCompanies)
      c.check(store.find_company(co) != nullptr, s.id, "unresolved preferred company " + co);
    c.check(std::isfinite(s.interests.minSalary) && s.interests.minSalary >= 0, s.id,
            "minSalary < 0");
  }

  std::set<std::pair<std::string, std::string>> markKeys;
  for (const Mark& mk : store.marks) {
    const std::string entity = "mark:" + mk.studentId + ":" + mk.courseId;
    c.check(std::isfinite(mk.value) && mk.value >= 0 && mk.value <= 20, entity,
            "value out of [0,20]");
    c.check(store.find_student(mk.studentId) != nullptr, entity,
            "unresolved studentId " + mk.studentId);
    c.check(u.find_course(mk.courseId) != nullptr, entity, "unresolved courseId " + mk.courseId);
    c.check(markKeys.emplace(mk.studentId, mk.courseId).second, entity,
            "duplicate mark for (studentId, courseId)");
  }

  for (const PastPlacement& p : store.pastPlacements) {
    const std::string entity = "placement:" + p.missionId + ":" + p.studentId;
    c.check(store.find_mission(p.missionId) != nullptr, entity,
            "unresolved missionId " + p.missionId);
    c.check(store.find_student(p.studentId) != nullptr, entity,
            "unresolved studentId " + p.studentId);
  }

  for (std::size_t i = 0; i < store.constraints.size(); ++i) {
    const UniversityConstraint& k = store.constraints[i];
    const std::string entity = "constraint:" + std::to_string(i);
    c.check(k.missionId.has_value() != k.companyId.has_value(), entity,
            "exactly one of missionId/companyId must be set");
    if (k.missionId)
      c.check(store.find_mission(*k.missionId) != nullptr, entity,
              "unresolved missionId " + *k.missionId);
    if (k.companyId)
      c.check(store.find_company(*k.companyId) != nullptr, entity,
              "unresolved companyId " + *k.companyId);
    c.check(k.minProposed >= 0, entity, "minProposed < 0");
    c.check(k.maxProposed >= k.minProposed, entity, "maxProposed < minProposed");
  }

  return c.report;
}

}  // namespace placement
