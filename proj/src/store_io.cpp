#include "placement/store_io.hpp"

#include <fstream>
#include <sstream>

namespace placement {

// --- generic readers ---------------------------------------------------------

void read(const json& j, const std::string& path, std::string& out) {
  if (!j.is_string()) throw SchemaError(path + ": expected string");
  out = j.get<std::string>();
}

void read(const json& j, const std::string& path, int& out) {
  if (!j.is_number_integer()) throw SchemaError(path + ": expected integer");
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw SchemaError(path + ": integer out of range");
  out = static_cast<int>(v);
}

void read(const json& j, const std::string& path, std::int64_t& out) {
  if (!j.is_number_integer()) throw SchemaError(path + ": expected integer");
  out = j.get<std::int64_t>();
}

void read(const json& j, const std::string& path, std::uint64_t& out) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw SchemaError(path + ": expected non-negative integer");
  out = j.get<std::uint64_t>();
}

void read(const json& j, const std::string& path, double& out) {
  if (!j.is_number()) throw SchemaError(path + ": expected number");
  out = j.get<double>();
}

void read(const json& j, const std::string& path, bool& out) {
  if (!j.is_boolean()) throw SchemaError(path + ": expected boolean");
  out = j.get<bool>();
}

void read(const json& j, const std::string&, json& out) { out = j; }

ObjectReader::ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
  if (!j_.is_object()) throw SchemaError(path_ + ": expected object");
}

void ObjectReader::finish() const {
  for (auto it = j_.begin(); it != j_.end(); ++it)
    if (!seen_.contains(it.key())) throw SchemaError(path_ + ": unknown field '" + it.key() + "'");
}

namespace {

template <typename E, typename Parse>
void read_enum(const json& j, const std::string& path, E& out, Parse parse, const char* what) {
  if (!j.is_string()) throw SchemaError(path + ": expected string");
  auto v = parse(j.get<std::string>());
  if (!v) throw SchemaError(path + ": unknown " + std::string(what) + " '" + j.get<std::string>() + "'");
  out = *v;
}

std::optional<StudentStatus> status_from_string(std::string_view s) {
  if (s == "VAE") return StudentStatus::VAE;
  if (s == "InitialTraining") return StudentStatus::InitialTraining;
  if (s == "ContinuousTraining") return StudentStatus::ContinuousTraining;
  return std::nullopt;
}

std::optional<StudentRole> role_from_string(std::string_view s) {
  if (s == "Delegate") return StudentRole::Delegate;
  return std::nullopt;
}

std::optional<Outcome> outcome_from_string(std::string_view s) {
  if (s == "Success") return Outcome::Success;
  if (s == "Difficulty") return Outcome::Difficulty;
  return std::nullopt;
}

}  // namespace

void read(const json& j, const std::string& path, Category& out) {
  read_enum(j, path, out, category_from_string, "category");
}

void read(const json& j, const std::string& path, StudentStatus& out) {
  read_enum(j, path, out, status_from_string, "status");
}

void read(const json& j, const std::string& path, StudentRole& out) {
  read_enum(j, path, out, role_from_string, "role");
}

void read(const json& j, const std::string& path, Outcome& out) {
  read_enum(j, path, out, outcome_from_string, "outcome");
}

// --- lexicon -----------------------------------------------------------------

void to_json(json& j, const ConceptEntry& e) {
  j = {{"id", e.id}, {"label", e.label}, {"category", to_string(e.category)},
       {"synonyms", e.synonyms}};
}

void read(const json& j, const std::string& path, ConceptEntry& out) {
  ObjectReader r(j, path);
  r.field("id", out.id).field("label", out.label).field("category", out.category)
      .field("synonyms", out.synonyms).finish();
}

void to_json(json& j, const Lexicon& l) { j = {{"version", l.version}, {"entries", l.entries}}; }

void read(const json& j, const std::string& path, Lexicon& out) {
  ObjectReader r(j, path);
  r.field("version", out.version).field("entries", out.entries).finish();
}

// --- missions ----------------------------------------------------------------

void to_json(json& j, const Competency& c) {
  j = {{"action", c.action}, {"domainAction", c.domainAction}};
}

void read(const json& j, const std::string& path, Competency& out) {
  ObjectReader r(j, path);
  r.field("action", out.action).field("domainAction", out.domainAction).finish();
}

void to_json(json& j, const Company& c) {
  j = {{"id", c.id}, {"name", c.name}, {"importance", c.importance},
       {"employeeCount", c.employeeCount}};
}

void read(const json& j, const std::string& path, Company& out) {
  ObjectReader r(j, path);
  r.field("id", out.id).field("name", out.name).field("importance", out.importance)
      .field("employeeCount", out.employeeCount).finish();
}

static void to_json(json& j, const Experience& e) {
  j = {{"description", e.description}, {"months", e.months}};
}

void read(const json& j, const std::string& path, Experience& out) {
  ObjectReader r(j, path);
  r.field("description", out.description).field("months", out.months).finish();
}

static void to_json(json& j, const Task& t) {
  j = {{"label", t.label}, {"startDate", t.startDate}, {"endDate", t.endDate}};
}

void read(const json& j, const std::string& path, Task& out) {
  ObjectReader r(j, path);
  r.field("label", out.label).field("startDate", out.startDate).field("endDate", out.endDate)
      .finish();
}

static void to_json(json& j, const MissionHistory& h) {
  j = {{"yearsPartnership", h.yearsPartnership}, {"totalMissions", h.totalMissions},
       {"missionsWithDifficulties", h.missionsWithDifficulties}};
}

void read(const json& j, const std::string& path, MissionHistory& out) {
  ObjectReader r(j, path);
  r.field("yearsPartnership", out.yearsPartnership).field("totalMissions", out.totalMissions)
      .field("missionsWithDifficulties", out.missionsWithDifficulties).finish();
}

void to_json(json& j, const Mission& m) {
  j = {{"id", m.id},
       {"companyId", m.companyId},
       {"location", m.location},
       {"competencies", m.competencies},
       {"activityAreas", m.activityAreas},
       {"experienceRequired", m.experienceRequired},
       {"project", m.project},
       {"tasks", m.tasks},
       {"durationWeeks", m.durationWeeks},
       {"history", m.history},
       {"minStudentsProposed", m.minStudentsProposed},
       {"maxStudentsProposed", m.maxStudentsProposed},
       {"capacity", m.capacity},
       {"rawText", m.rawText}};
}

void read(const json& j, const std::string& path, Mission& out) {
  ObjectReader r(j, path);
  r.field("id", out.id)
      .field("companyId", out.companyId)
      .field("location", out.location)
      .field("competencies", out.competencies)
      .field("activityAreas", out.activityAreas)
      .field("experienceRequired", out.experienceRequired)
      .field("project", out.project)
      .field("tasks", out.tasks)
      .field("durationWeeks", out.durationWeeks)
      .field("history", out.history)
      .field("minStudentsProposed", out.minStudentsProposed)
      .field("maxStudentsProposed", out.maxStudentsProposed)
      .field("capacity", out.capacity)
      .field("rawText", out.rawText)
      .finish();
}

// --- students ----------------------------------------------------------------

static void to_json(json& j, const Administrative& a) {
  j = {{"firstName", a.firstName}, {"lastName", a.lastName}, {"phone", a.phone},
       {"address", a.address},     {"email", a.email},       {"nationality", a.nationality},
       {"age", a.age}};
}

void read(const json& j, const std::string& path, Administrative& out) {
  ObjectReader r(j, path);
  r.field("firstName", out.firstName).field("lastName", out.lastName).field("phone", out.phone)
      .field("address", out.address).field("email", out.email)
      .field("nationality", out.nationality).field("age", out.age).finish();
}

static void to_json(json& j, const Academic& a) {
  j = {{"degree", a.degree}, {"academicYear", a.academicYear}, {"trainingId", a.trainingId}};
}

void read(const json& j, const std::string& path, Academic& out) {
  ObjectReader r(j, path);
  r.field("degree", out.degree).field("academicYear", out.academicYear)
      .field("trainingId", out.trainingId).finish();
}

static void to_json(json& j, const EvaluationRecord& e) {
  j = {{"oralPresentation", e.oralPresentation}, {"qualityOfWork", e.qualityOfWork},
       {"behavior", e.behavior}};
}

void read(const json& j, const std::string& path, EvaluationRecord& out) {
  ObjectReader r(j, path);
  r.field("oralPresentation", out.oralPresentation).field("qualityOfWork", out.qualityOfWork)
      .field("behavior", out.behavior).finish();
}

static void to_json(json& j, const CandidateRecord& c) {
  j = {{"experienceQuality", c.experienceQuality},
       {"projectManagementKnowledge", c.projectManagementKnowledge},
       {"cvOverallRating", c.cvOverallRating},
       {"autonomy", c.autonomy}};
}

void read(const json& j, const std::string& path, CandidateRecord& out) {
  ObjectReader r(j, path);
  r.field("experienceQuality", out.experienceQuality)
      .field("projectManagementKnowledge", out.projectManagementKnowledge)
      .field("cvOverallRating", out.cvOverallRating).field("autonomy", out.autonomy).finish();
}

static void to_json(json& j, const Interests& i) {
  j = {{"missionKeywords", i.missionKeywords}, {"preferredLocations", i.preferredLocations},
       {"minSalary", i.minSalary}, {"preferredCompanies", i.preferredCompanies}};
}

void read(const json& j, const std::string& path, Interests& out) {
  ObjectReader r(j, path);
  r.field("missionKeywords", out.missionKeywords)
      .field("preferredLocations", out.preferredLocations).field("minSalary", out.minSalary)
      .field("preferredCompanies", out.preferredCompanies).finish();
}

void to_json(json& j, const StudentProfile& s) {
  j = {{"id", s.id},
       {"administrative", s.administrative},
       {"academic", s.academic},
       {"status", to_string(s.status)},
       {"interests", s.interests}};
  if (s.role) j["role"] = to_string(*s.role);
  if (s.evaluationRecord) j["evaluationRecord"] = *s.evaluationRecord;
  if (s.candidateRecord) j["candidateRecord"] = *s.candidateRecord;
}

void read(const json& j, const std::string& path, StudentProfile& out) {
  ObjectReader r(j, path);
  r.field("id", out.id)
      .field("administrative", out.administrative)
      .field("academic", out.academic)
      .field("status", out.status)
      .field("role", out.role)
      .field("evaluationRecord", out.evaluationRecord)
      .field("candidateRecord", out.candidateRecord)
      .field("interests", out.interests)
      .finish();
}

// --- university --------------------------------------------------------------

static void to_json(json& j, const Course& c) {
  j = {{"id", c.id},       {"label", c.label}, {"keywords", c.keywords},
       {"hours", c.hours}, {"ects", c.ects},   {"coefficient", c.coefficient},
       {"teacherId", c.teacherId}};
}

void read(const json& j, const std::string& path, Course& out) {
  ObjectReader r(j, path);
  r.field("id", out.id).field("label", out.label).field("keywords", out.keywords)
      .field("hours", out.hours).field("ects", out.ects).field("coefficient", out.coefficient)
      .field("teacherId", out.teacherId).finish();
}

static void to_json(json& j, const TeachingModule& m) {
  j = {{"id", m.id},     {"label", m.label},             {"hours", m.hours},
       {"ects", m.ects}, {"coefficient", m.coefficient}, {"courses", m.courses}};
}

void read(const json& j, const std::string& path, TeachingModule& out) {
  ObjectReader r(j, path);
  r.field("id", out.id).field("label", out.label).field("hours", out.hours)
      .field("ects", out.ects).field("coefficient", out.coefficient)
      .field("courses", out.courses).finish();
}

static void to_json(json& j, const TeachingUnit& u) {
  j = {{"id", u.id}, {"label", u.label}, {"objectives", u.objectives},
       {"keywords", u.keywords}, {"modules", u.modules}};
}

void read(const json& j, const std::string& path, TeachingUnit& out) {
  ObjectReader r(j, path);
  r.field("id", out.id).field("label", out.label).field("objectives", out.objectives)
      .field("keywords", out.keywords).field("modules", out.modules).finish();
}

static void to_json(json& j, const Training& t) {
  j = {{"id", t.id}, {"label", t.label}, {"teachingUnits", t.teachingUnits}};
}

void read(const json& j, const std::string& path, Training& out) {
  ObjectReader r(j, path);
  r.field("id", out.id).field("label", out.label).field("teachingUnits", out.teachingUnits)
      .finish();
}

static void to_json(json& j, const Department& d) {
  j = {{"id", d.id}, {"label", d.label}, {"trainings", d.trainings}};
}

void read(const json& j, const std::string& path, Department& out) {
  ObjectReader r(j, path);
  r.field("id", out.id).field("label", out.label).field("trainings", out.trainings).finish();
}

static void to_json(json& j, const Teacher& t) { j = {{"id", t.id}, {"name", t.name}}; }

void read(const json& j, const std::string& path, Teacher& out) {
  ObjectReader r(j, path);
  r.field("id", out.id).field("name", out.name).finish();
}

static void to_json(json& j, const Partnership& p) {
  j = {{"departmentId", p.departmentId}, {"companyId", p.companyId}, {"sinceYear", p.sinceYear}};
}

void read(const json& j, const std::string& path, Partnership& out) {
  ObjectReader r(j, path);
  r.field("departmentId", out.departmentId).field("companyId", out.companyId)
      .field("sinceYear", out.sinceYear).finish();
}

void to_json(json& j, const University& u) {
  j = {{"name", u.name}, {"departments", u.departments}, {"teachers", u.teachers},
       {"partnerships", u.partnerships}};
}

void read(const json& j, const std::string& path, University& out) {
  ObjectReader r(j, path);
  r.field("name", out.name).field("departments", out.departments)
      .field("teachers", out.teachers).field("partnerships", out.partnerships).finish();
}

// --- marks, placements, constraints -----------------------------------------

void to_json(json& j, const Mark& m) {
  j = {{"studentId", m.studentId}, {"courseId", m.courseId}, {"value", m.value}};
}

void read(const json& j, const std::string& path, Mark& out) {
  ObjectReader r(j, path);
  r.field("studentId", out.studentId).field("courseId", out.courseId).field("value", out.value)
      .finish();
}

void to_json(json& j, const PastPlacement& p) {
  j = {{"missionId", p.missionId}, {"studentId", p.studentId},
       {"outcome", to_string(p.outcome)}, {"year", p.year}};
}

void read(const json& j, const std::string& path, PastPlacement& out) {
  ObjectReader r(j, path);
  r.field("missionId", out.missionId).field("studentId", out.studentId)
      .field("outcome", out.outcome).field("year", out.year).finish();
}

void to_json(json& j, const UniversityConstraint& c) {
  j = {{"minProposed", c.minProposed}, {"maxProposed", c.maxProposed}};
  if (c.missionId) j["missionId"] = *c.missionId;
  if (c.companyId) j["companyId"] = *c.companyId;
}

void read(const json& j, const std::string& path, UniversityConstraint& out) {
  ObjectReader r(j, path);
  r.field("missionId", out.missionId).field("companyId", out.companyId)
      .field("minProposed", out.minProposed).field("maxProposed", out.maxProposed).finish();
}

// --- store -------------------------------------------------------------------

void to_json(json& j, const InstanceStore& s) {
  j = {{"lexicon", s.lexicon},       {"companies", s.companies},
       {"missions", s.missions},     {"students", s.students},
       {"university", s.university}, {"marks", s.marks},
       {"pastPlacements", s.pastPlacements}, {"constraints", s.constraints}};
}

void read(const json& j, const std::string& path, InstanceStore& out) {
  ObjectReader r(j, path);
  r.field("lexicon", out.lexicon)
      .field("companies", out.companies)
      .field("missions", out.missions)
      .field("students", out.students)
      .field("university", out.university)
      .field("marks", out.marks)
      .field("pastPlacements", out.pastPlacements)
      .field("constraints", out.constraints)
      .finish();
}

InstanceStore parse_store(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("$: invalid JSON: ") + e.what());
  }
  return parse_as<InstanceStore>(j);
}

InstanceStore load_store(const std::filesystem::path& path) { return parse_store(read_file(path)); }

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFoundError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace placement
