#pragma once

#include <optional>
#include <string>
#include <vector>

#include "placement/arguments.hpp"
#include "store_kit.hpp"

namespace testkit {

struct ArgumentCase {
  std::string name;
  ArgumentCode code;
  bool fires = false;
  InstanceStore store;
  KnowledgeBase kb;
};

// Open mission m1 = (a1, d1); past mission p1 with the same competency
// completed successfully by "alum"; the student under test is "st".
inline StoreKit argument_base() {
  StoreKit kit;
  kit.term("a1", Category::Action).term("d1", Category::DomainAction);
  kit.term("s1", Category::ActivityArea);
  kit.company("c1").company("c2");
  kit.course("ca", {"a1"}).course("cd", {"d1"}).course("cad", {"a1", "d1"}).course("cs", {"s1"});
  kit.mission("m1", "c1", {{"a1", "d1"}});
  kit.mission("p1", "c1", {{"a1", "d1"}});
  kit.student("st");
  kit.student("alum");
  kit.mark("alum", "cad", 18);
  kit.past("p1", "alum");
  return kit;
}

inline KnowledgeBase single_cluster_kb(const InstanceStore& store) {
  std::map<std::string, ConceptVector> v;
  for (const Mission& m : store.missions)
    if (m.annotated()) v[m.id] = mission_vector(m, store.lexicon);
  return build_knowledge_base(store, kmeans(v, 1, 1));
}

// A firing fixture and a perturbed twin for each rule, all under default thresholds.
inline std::vector<ArgumentCase> argument_cases() {
  std::vector<ArgumentCase> out;
  auto add = [&](std::string name, ArgumentCode code, bool fires, StoreKit kit) {
    KnowledgeBase kb = single_cluster_kb(kit.store);
    out.push_back({std::move(name), code, fires, std::move(kit.store), std::move(kb)});
  };
  auto student = [](StoreKit& kit) -> StudentProfile& { return kit.store.students[0]; };

  {
    StoreKit kit = argument_base();
    kit.mark("st", "cad", 10);
    add("A1 profile equal to a past success", ArgumentCode::A1, true, kit);
  }
  {
    StoreKit kit = argument_base();
    kit.mark("st", "cs", 20);
    add("A1 profile unlike the past success", ArgumentCode::A1, false, kit);
  }
  {
    StoreKit kit = argument_base();
    kit.mark("st", "ca", 15).mark("st", "cd", 13);
    add("A2 marks 15 and 13", ArgumentCode::A2, true, kit);
  }
  {
    StoreKit kit = argument_base();
    kit.mark("st", "ca", 15).mark("st", "cd", 11);
    add("A2 one mark lowered to 11", ArgumentCode::A2, false, kit);
  }
  {
    StoreKit kit = argument_base();
    kit.mark("st", "ca", 10);
    add("A3 standard mission without history", ArgumentCode::A3, true, kit);
  }
  {
    StoreKit kit = argument_base();
    kit.mark("st", "ca", 10);
    kit.store.missions[0].history = {3, 10, 5};
    add("A3 half of past missions had difficulties", ArgumentCode::A3, false, kit);
  }
  {
    StoreKit kit = argument_base();
    kit.modules().courses[1].coefficient = 3;
    kit.mark("st", "ca", 20).mark("st", "cd", 12);
    add("A4 weighted mean exactly 14", ArgumentCode::A4, true, kit);
  }
  {
    StoreKit kit = argument_base();
    kit.modules().courses[1].coefficient = 3;
    kit.mark("st", "ca", 20).mark("st", "cd", 11.9);
    add("A4 weighted mean just below 14", ArgumentCode::A4, false, kit);
  }
  {
    StoreKit kit = argument_base();
    kit.mark("st", "ca", 10);
    add("A5 no stated preference", ArgumentCode::A5, true, kit);
  }
  {
    StoreKit kit = argument_base();
    kit.mark("st", "ca", 10);
    student(kit).interests.preferredCompanies = {"c2"};
    student(kit).interests.preferredLocations = {"Lyon"};
    add("A5 company and location both missed", ArgumentCode::A5, false, kit);
  }
  {
    StoreKit kit = argument_base();
    kit.mark("st", "cs", 20);
    student(kit).candidateRecord->autonomy = 15;
    add("A6 weak skills with autonomy 15", ArgumentCode::A6, true, kit);
  }
  {
    StoreKit kit = argument_base();
    kit.mark("st", "cs", 20);
    student(kit).candidateRecord->autonomy = 13;
    add("A6 weak skills with autonomy 13", ArgumentCode::A6, false, kit);
  }
  return out;
}

inline ArgumentReport evaluate_case(const ArgumentCase& c, const ArgumentThresholds& t = {}) {
  const Matcher matcher(c.store, c.kb);
  const MatchScore score = matcher.score("st", "m1");
  return generate_arguments(matcher, "st", "m1", score, t);
}

inline bool has_code(const ArgumentReport& r, ArgumentCode code) {
  for (const Argument& a : r.arguments)
    if (a.code == code) return true;
  return false;
}

}  // namespace testkit
