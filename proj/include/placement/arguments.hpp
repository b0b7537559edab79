#pragma once

#include <string>
#include <vector>

#include "placement/json_util.hpp"
#include "placement/match.hpp"

namespace placement {

enum class ArgumentCode { A1, A2, A3, A4, A5, A6 };

std::string_view to_string(ArgumentCode c);

enum class Locale { En, Fr };

std::optional<Locale> locale_from_string(std::string_view s);

struct Argument {
  ArgumentCode code = ArgumentCode::A1;
  json evidence;  // code-specific; always includes the threshold(s) applied
  std::string text;

  bool operator==(const Argument&) const = default;
};

// Marks and autonomy thresholds are on the [0, 20] scale; similarities and
// ratios on [0, 1].
struct ArgumentThresholds {
  double theta1 = 0.8;           // A1: cosine to a past successful profile
  double theta2Mark = 12;        // A2: mark deemed sufficient for a competency
  double theta3Proto = 0.85;     // A3: cosine of the mission to its cluster prototype
  double theta3Risk = 0.2;       // A3: max share of missions with difficulties
  double theta4 = 14;            // A4: coefficient-weighted mean mark
  double theta5 = 0.7;           // A5: interest score
  double theta6Skill = 0.4;      // A6: skill cosine strictly below this
  double theta6Autonomy = 14;    // A6: autonomy score

  // Throws std::invalid_argument when a threshold leaves its range.
  void validate() const;
  bool operator==(const ArgumentThresholds&) const = default;
};

struct ArgumentReport {
  std::vector<Argument> arguments;  // fired rules, A1 to A6
  std::vector<std::string> notes;   // why a rule could not be evaluated

  bool operator==(const ArgumentReport&) const = default;
};

// Evaluates all six rules independently for one (student, mission) pair.
ArgumentReport generate_arguments(const StudentProfile& student, const Mission& mission,
                                  const KnowledgeBase& kb, const MatchScore& score,
                                  const InstanceStore& store, const ArgumentThresholds& thresholds,
                                  Locale locale = Locale::En);

// Same, reusing vectors already computed by a matcher.
ArgumentReport generate_arguments(const Matcher& matcher, const std::string& studentId,
                                  const std::string& missionId, const MatchScore& score,
                                  const ArgumentThresholds& thresholds, Locale locale = Locale::En);

std::string render_argument(const Argument& argument, Locale locale);

// Coefficient-weighted mean of the student's marks; nullopt without marks.
std::optional<double> weighted_mean_mark(const std::string& studentId, const InstanceStore& store);

void to_json(json& j, const Argument& a);
void to_json(json& j, const ArgumentThresholds& t);
void read(const json& j, const std::string& path, Argument& out);
void read(const json& j, const std::string& path, ArgumentThresholds& out);

}  // namespace placement
