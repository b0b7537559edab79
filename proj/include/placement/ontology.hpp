#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace placement {

using ConceptId = std::string;

enum class Category { Action, DomainAction, ActivityArea, SkillKeyword };

std::string_view to_string(Category c);
std::optional<Category> category_from_string(std::string_view s);

struct ConceptEntry {
  ConceptId id;
  std::string label;
  Category category = Category::Action;
  std::vector<std::string> synonyms;

  bool operator==(const ConceptEntry&) const = default;
};

struct Lexicon {
  std::string version;
  std::vector<ConceptEntry> entries;

  const ConceptEntry* find(std::string_view id) const;
  bool operator==(const Lexicon&) const = default;
};

// Case- and accent-insensitive whole-token match against labels and synonyms
// of one category.
std::optional<ConceptId> lookup_concept(const Lexicon& lexicon, Category category,
                                        std::string_view surface);

// --- mission ontology ------------------------------------------------------

struct Competency {
  ConceptId action;
  ConceptId domainAction;

  auto operator<=>(const Competency&) const = default;
};

struct Experience {
  std::string description;
  int months = 0;

  bool operator==(const Experience&) const = default;
};

struct Task {
  std::string label;
  std::string startDate;  // ISO-8601 calendar date
  std::string endDate;

  bool operator==(const Task&) const = default;
};

struct MissionHistory {
  int yearsPartnership = 0;
  int totalMissions = 0;
  int missionsWithDifficulties = 0;

  bool operator==(const MissionHistory&) const = default;
};

struct Company {
  std::string id;
  std::string name;
  std::string importance;
  int employeeCount = 0;

  bool operator==(const Company&) const = default;
};

struct Mission {
  std::string id;
  std::string companyId;
  std::string location;
  std::vector<Competency> competencies;
  std::vector<ConceptId> activityAreas;
  Experience experienceRequired;
  std::string project;
  std::vector<Task> tasks;
  int durationWeeks = 0;
  MissionHistory history;
  int minStudentsProposed = 1;
  int maxStudentsProposed = 1;
  int capacity = 1;
  std::string rawText;

  bool annotated() const { return !competencies.empty() || !activityAreas.empty(); }
  bool operator==(const Mission&) const = default;
};

// --- student profile ontology ----------------------------------------------

enum class StudentStatus { VAE, InitialTraining, ContinuousTraining };
enum class StudentRole { Delegate };

std::string_view to_string(StudentStatus s);
std::string_view to_string(StudentRole r);

struct Administrative {
  std::string firstName;
  std::string lastName;
  std::string phone;
  std::string address;
  std::string email;
  std::string nationality;
  int age = 0;

  bool operator==(const Administrative&) const = default;
};

struct Academic {
  std::string degree;
  std::string academicYear;
  std::string trainingId;

  bool operator==(const Academic&) const = default;
};

// Scores on the [0, 20] grading scale.
struct EvaluationRecord {
  double oralPresentation = 0;
  double qualityOfWork = 0;
  double behavior = 0;

  bool operator==(const EvaluationRecord&) const = default;
};

struct CandidateRecord {
  double experienceQuality = 0;
  double projectManagementKnowledge = 0;
  double cvOverallRating = 0;
  double autonomy = 0;

  bool operator==(const CandidateRecord&) const = default;
};

struct Interests {
  std::vector<ConceptId> missionKeywords;
  std::vector<std::string> preferredLocations;
  double minSalary = 0;
  std::vector<std::string> preferredCompanies;

  bool operator==(const Interests&) const = default;
};

struct StudentProfile {
  std::string id;
  Administrative administrative;
  Academic academic;
  StudentStatus status = StudentStatus::InitialTraining;
  std::optional<StudentRole> role;
  std::optional<EvaluationRecord> evaluationRecord;
  std::optional<CandidateRecord> candidateRecord;
  Interests interests;

  bool operator==(const StudentProfile&) const = default;
};

// --- university ontology ---------------------------------------------------

struct Course {
  std::string id;
  std::string label;
  std::vector<ConceptId> keywords;
  double hours = 0;
  double ects = 0;
  double coefficient = 1;
  std::string teacherId;

  bool operator==(const Course&) const = default;
};

struct TeachingModule {
  std::string id;
  std::string label;
  double hours = 0;
  double ects = 0;
  double coefficient = 1;
  std::vector<Course> courses;

  bool operator==(const TeachingModule&) const = default;
};

struct TeachingUnit {
  std::string id;
  std::string label;
  std::string objectives;
  std::vector<ConceptId> keywords;
  std::vector<TeachingModule> modules;

  bool operator==(const TeachingUnit&) const = default;
};

struct Training {
  std::string id;
  std::string label;
  std::vector<TeachingUnit> teachingUnits;

  bool operator==(const Training&) const = default;
};

struct Department {
  std::string id;
  std::string label;
  std::vector<Training> trainings;

  bool operator==(const Department&) const = default;
};

struct Teacher {
  std::string id;
  std::string name;

  bool operator==(const Teacher&) const = default;
};

struct Partnership {
  std::string departmentId;
  std::string companyId;
  int sinceYear = 0;

  bool operator==(const Partnership&) const = default;
};

struct University {
  std::string name;
  std::vector<Department> departments;
  std::vector<Teacher> teachers;
  std::vector<Partnership> partnerships;

  const Training* find_training(std::string_view id) const;
  const Course* find_course(std::string_view id) const;
  std::vector<const Course*> all_courses() const;
  bool operator==(const University&) const = default;
};

struct Mark {
  std::string studentId;
  std::string courseId;
  double value = 0;

  bool operator==(const Mark&) const = default;
};

// Scoped to exactly one of a mission or a company.
struct UniversityConstraint {
  std::optional<std::string> missionId;
  std::optional<std::string> companyId;
  int minProposed = 0;
  int maxProposed = 0;

  bool operator==(const UniversityConstraint&) const = default;
};

enum class Outcome { Success, Difficulty };
std::string_view to_string(Outcome o);

struct PastPlacement {
  std::string missionId;
  std::string studentId;
  Outcome outcome = Outcome::Success;
  int year = 0;

  bool operator==(const PastPlacement&) const = default;
};

// --- the knowledge store ---------------------------------------------------

struct InstanceStore {
  Lexicon lexicon;
  std::vector<Company> companies;
  std::vector<Mission> missions;
  std::vector<StudentProfile> students;
  University university;
  std::vector<Mark> marks;
  std::vector<PastPlacement> pastPlacements;
  std::vector<UniversityConstraint> constraints;

  const Company* find_company(std::string_view id) const;
  const Mission* find_mission(std::string_view id) const;
  const StudentProfile* find_student(std::string_view id) const;
  Mission* find_mission(std::string_view id);

  std::vector<Mark> marks_of(std::string_view studentId) const;

  // Missions and students referenced by a past placement form the history;
  // the rest are the open offers and the current cohort.
  std::vector<const Mission*> open_missions() const;
  std::vector<const StudentProfile*> cohort() const;

  bool operator==(const InstanceStore&) const = default;
};

struct ProposalBounds {
  int minProposed = 0;
  int maxProposed = 0;
};

// Mission bounds tightened by every constraint scoped to the mission or its
// company.
ProposalBounds effective_bounds(const InstanceStore& store, const Mission& mission);

}  // namespace placement
