#include "placement/arguments.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace placement {

std::string_view to_string(ArgumentCode c) {
  switch (c) {
    case ArgumentCode::A1: return "A1";
    case ArgumentCode::A2: return "A2";
    case ArgumentCode::A3: return "A3";
    case ArgumentCode::A4: return "A4";
    case ArgumentCode::A5: return "A5";
    case ArgumentCode::A6: return "A6";
  }
  return "A1";
}

std::optional<Locale> locale_from_string(std::string_view s) {
  if (s == "en") return Locale::En;
  if (s == "fr") return Locale::Fr;
  return std::nullopt;
}

void ArgumentThresholds::validate() const {
  auto unit = [](double v, const char* name) {
    if (!(v >= 0 && v <= 1)) throw std::invalid_argument(std::string(name) + " must lie in [0,1]");
  };
  auto mark = [](double v, const char* name) {
    if (!(v >= 0 && v <= 20)) throw std::invalid_argument(std::string(name) + " must lie in [0,20]");
  };
  unit(theta1, "theta1");
  mark(theta2Mark, "theta2Mark");
  unit(theta3Proto, "theta3Proto");
  unit(theta3Risk, "theta3Risk");
  mark(theta4, "theta4");
  unit(theta5, "theta5");
  unit(theta6Skill, "theta6Skill");
  mark(theta6Autonomy, "theta6Autonomy");
}

std::optional<double> weighted_mean_mark(const std::string& studentId, const InstanceStore& store) {
  double weighted = 0, weights = 0;
  for (const Mark& m : store.marks) {
    if (m.studentId != studentId) continue;
    const Course* c = store.university.find_course(m.courseId);
    if (!c) continue;
    weighted += m.value * c->coefficient;
    weights += c->coefficient;
  }
  if (weights <= 0) return std::nullopt;
  return weighted / weights;
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string str(const json& j, const char* key) { return j.at(key).get<std::string>(); }
double dbl(const json& j, const char* key) { return j.at(key).get<double>(); }

struct PairInputs {
  const StudentProfile& student;
  const Mission& mission;
  const ConceptVector& studentVec;
  const ConceptVector& missionVec;
  int cluster;
  const KnowledgeBase& kb;
  const InstanceStore& store;
};

ArgumentReport evaluate(const PairInputs& in, const MatchScore& score, const ArgumentThresholds& t,
                        Locale locale) {
  ArgumentReport report;
  auto fire = [&](ArgumentCode code, json evidence) {
    Argument a{code, std::move(evidence), {}};
    a.text = render_argument(a, locale);
    report.arguments.push_back(std::move(a));
  };
  const auto cluster = static_cast<std::size_t>(in.cluster);

  // A1: a past successful student in this cluster looks like this one.
  if (cluster < in.kb.successProfiles.size()) {
    const SuccessProfile* best = nullptr;
    double bestCos = -1;
    for (const SuccessProfile& p : in.kb.successProfiles[cluster]) {
      const double c = cosine(in.studentVec, p.vector);
      if (c > bestCos) {
        bestCos = c;
        best = &p;
      }
    }
    if (best && bestCos >= t.theta1)
      fire(ArgumentCode::A1, {{"pastStudentId", best->studentId},
                              {"pastMissionId", best->missionId},
                              {"cosine", bestCos},
                              {"cluster", in.cluster},
                              {"threshold", t.theta1}});
  }

  // A2: a sufficient mark for every concept of every required competency.
  if (in.mission.competencies.empty()) {
    report.notes.push_back("A2 not evaluated: mission has no competencies");
  } else {
    std::set<ConceptId> required;
    for (const Competency& c : in.mission.competencies) {
      required.insert(c.action);
      required.insert(c.domainAction);
    }
    json covered = json::array();
    bool all = true;
    for (const ConceptId& concept_id : required) {
      const Mark* bestMark = nullptr;
      for (const Mark& m : in.store.marks) {
        if (m.studentId != in.student.id) continue;
        const Course* course = in.store.university.find_course(m.courseId);
        if (!course) continue;
        const auto& kw = course->keywords;
        if (std::find(kw.begin(), kw.end(), concept_id) == kw.end()) continue;
        if (!bestMark || m.value > bestMark->value) bestMark = &m;
      }
      if (!bestMark || bestMark->value < t.theta2Mark) {
        all = false;
        break;
      }
      covered.push_back({{"conceptId", concept_id}, {"courseId", bestMark->courseId}, {"mark", bestMark->value}});
    }
    if (all) fire(ArgumentCode::A2, {{"concepts", std::move(covered)}, {"threshold", t.theta2Mark}});
  }

  // A3: the mission is close to its cluster's standard profile and the
  // company's history shows little trouble.
  if (cluster < in.kb.standardPrototype.size()) {
    const double proto = cosine(in.missionVec, in.kb.standardPrototype[cluster]);
    const MissionHistory& h = in.mission.history;
    const double ratio =
        h.totalMissions == 0 ? 0.0 : static_cast<double>(h.missionsWithDifficulties) / h.totalMissions;
    if (proto >= t.theta3Proto && (h.totalMissions == 0 || ratio <= t.theta3Risk))
      fire(ArgumentCode::A3, {{"cluster", in.cluster},
                              {"prototypeCos", proto},
                              {"difficultyRatio", ratio},
                              {"totalMissions", h.totalMissions},
                              {"thresholdProto", t.theta3Proto},
                              {"thresholdRisk", t.theta3Risk}});
  }

  // A4: high general level.
  if (auto mean = weighted_mean_mark(in.student.id, in.store)) {
    if (*mean >= t.theta4) fire(ArgumentCode::A4, {{"meanMark", *mean}, {"threshold", t.theta4}});
  } else {
    report.notes.push_back("A4 not evaluated: student has no marks");
  }

  // A5: interests line up with the offer.
  if (score.interestScore >= t.theta5)
    fire(ArgumentCode::A5, {{"interestScore", score.interestScore}, {"threshold", t.theta5}});

  // A6: weak skill match compensated by autonomy.
  if (!in.student.candidateRecord) {
    report.notes.push_back("A6 not evaluated: student has no candidate record");
  } else if (score.skillCos < t.theta6Skill && in.student.candidateRecord->autonomy >= t.theta6Autonomy) {
    fire(ArgumentCode::A6, {{"skillCos", score.skillCos},
                            {"autonomy", in.student.candidateRecord->autonomy},
                            {"thresholdSkill", t.theta6Skill},
                            {"thresholdAutonomy", t.theta6Autonomy}});
  }
  return report;
}

}  // namespace

ArgumentReport generate_arguments(const StudentProfile& student, const Mission& mission,
                                  const KnowledgeBase& kb, const MatchScore& score,
                                  const InstanceStore& store, const ArgumentThresholds& thresholds,
                                  Locale locale) {
  thresholds.validate();
  const ConceptVector sv =
      student_vector(student, store.university, store.marks_of(student.id), &store.lexicon);
  const ConceptVector mv = mission_vector(mission, store.lexicon);
  int cluster = 0;
  if (!kb.clusterModel.centroids.empty() && !mv.empty())
    cluster = assign_to_cluster(mv, kb.clusterModel).index;
  return evaluate({student, mission, sv, mv, cluster, kb, store}, score, thresholds, locale);
}

ArgumentReport generate_arguments(const Matcher& matcher, const std::string& studentId,
                                  const std::string& missionId, const MatchScore& score,
                                  const ArgumentThresholds& thresholds, Locale locale) {
  thresholds.validate();
  const InstanceStore& store = matcher.store();
  const StudentProfile* student = store.find_student(studentId);
  const Mission* mission = store.find_mission(missionId);
  if (!student) throw NotFoundError("unknown student " + studentId);
  if (!mission) throw NotFoundError("unknown mission " + missionId);
  return evaluate({*student, *mission, matcher.student_vector(studentId),
                   matcher.mission_vector(missionId), matcher.mission_cluster(missionId).index,
                   matcher.knowledge_base(), store},
                  score, thresholds, locale);
}

std::string render_argument(const Argument& a, Locale locale) {
  const json& e = a.evidence;
  const bool fr = locale == Locale::Fr;
  switch (a.code) {
    case ArgumentCode::A1:
      return fr ? "Profil proche de l'ancien étudiant " + str(e, "pastStudentId") +
                      " qui a réussi la mission " + str(e, "pastMissionId") + " : similarité " +
                      num(dbl(e, "cosine")) + " ≥ " + num(dbl(e, "threshold")) + "."
                : "Profile similar to former student " + str(e, "pastStudentId") +
                      " who succeeded on mission " + str(e, "pastMissionId") + ": similarity " +
                      num(dbl(e, "cosine")) + " ≥ " + num(dbl(e, "threshold")) + ".";
    case ArgumentCode::A2: {
      std::string list;
      for (const json& c : e.at("concepts")) {
        if (!list.empty()) list += ", ";
        list += str(c, "conceptId") + " (" + str(c, "courseId") + " " + num(dbl(c, "mark")) + ")";
      }
      return fr ? "Niveau suffisant dans les compétences de la mission (notes ≥ " +
                      num(dbl(e, "threshold")) + ") : " + list + "."
                : "Sufficient level in the mission's competencies (marks ≥ " +
                      num(dbl(e, "threshold")) + "): " + list + ".";
    }
    case ArgumentCode::A3:
      return fr ? "Mission standard : similarité au profil type " + num(dbl(e, "prototypeCos")) +
                      " ≥ " + num(dbl(e, "thresholdProto")) + ", taux de difficultés " +
                      num(dbl(e, "difficultyRatio")) + " ≤ " + num(dbl(e, "thresholdRisk")) + "."
                : "Standard mission: prototype similarity " + num(dbl(e, "prototypeCos")) + " ≥ " +
                      num(dbl(e, "thresholdProto")) + ", difficulty ratio " +
                      num(dbl(e, "difficultyRatio")) + " ≤ " + num(dbl(e, "thresholdRisk")) + ".";
    case ArgumentCode::A4:
      return fr ? "Étudiant de bon niveau général : moyenne pondérée " + num(dbl(e, "meanMark")) +
                      " ≥ " + num(dbl(e, "threshold")) + "."
                : "The student has a high general level: weighted mean mark " +
                      num(dbl(e, "meanMark")) + " ≥ " + num(dbl(e, "threshold")) + ".";
    case ArgumentCode::A5:
      return fr ? "L'étudiant est motivé : correspondance des intérêts " +
                      num(dbl(e, "interestScore")) + " ≥ " + num(dbl(e, "threshold")) + "."
                : "The student is motivated: interest match " + num(dbl(e, "interestScore")) +
                      " ≥ " + num(dbl(e, "threshold")) + ".";
    case ArgumentCode::A6:
      return fr ? "Compétences imparfaites (" + num(dbl(e, "skillCos")) + " < " +
                      num(dbl(e, "thresholdSkill")) + ") mais grande autonomie : " +
                      num(dbl(e, "autonomy")) + " ≥ " + num(dbl(e, "thresholdAutonomy")) + "."
                : "Not a perfect skill match (" + num(dbl(e, "skillCos")) + " < " +
                      num(dbl(e, "thresholdSkill")) + ") but great autonomy: " +
                      num(dbl(e, "autonomy")) + " ≥ " + num(dbl(e, "thresholdAutonomy")) + ".";
  }
  return {};
}

void to_json(json& j, const Argument& a) {
  j = {{"code", to_string(a.code)}, {"evidence", a.evidence}, {"text", a.text}};
}

void read(const json& j, const std::string& path, Argument& out) {
  ObjectReader r(j, path);
  std::string code;
  r.field("code", code).field("evidence", out.evidence).field("text", out.text).finish();
  static const std::map<std::string, ArgumentCode> codes{
      {"A1", ArgumentCode::A1}, {"A2", ArgumentCode::A2}, {"A3", ArgumentCode::A3},
      {"A4", ArgumentCode::A4}, {"A5", ArgumentCode::A5}, {"A6", ArgumentCode::A6}};
  auto it = codes.find(code);
  if (it == codes.end()) throw SchemaError(path + ".code: unknown argument code '" + code + "'");
  out.code = it->second;
}

void to_json(json& j, const ArgumentThresholds& t) {
  j = {{"theta1", t.theta1},           {"theta2Mark", t.theta2Mark},
       {"theta3Proto", t.theta3Proto}, {"theta3Risk", t.theta3Risk},
       {"theta4", t.theta4},           {"theta5", t.theta5},
       {"theta6Skill", t.theta6Skill}, {"theta6Autonomy", t.theta6Autonomy}};
}

void read(const json& j, const std::string& path, ArgumentThresholds& out) {
  ObjectReader r(j, path);
  r.field("theta1", out.theta1)
      .field("theta2Mark", out.theta2Mark)
      .field("theta3Proto", out.theta3Proto)
      .field("theta3Risk", out.theta3Risk)
      .field("theta4", out.theta4)
      .field("theta5", out.theta5)
      .field("theta6Skill", out.theta6Skill)
      .field("theta6Autonomy", out.theta6Autonomy)
      .finish();
}

}  // namespace placement
