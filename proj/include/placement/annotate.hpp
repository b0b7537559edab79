#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "placement/json_util.hpp"
#include "placement/ontology.hpp"
#include "placement/text.hpp"

namespace placement {

// Longest surface form considered, in tokens.
inline constexpr std::size_t kMaxPhraseTokens = 4;
// An Action pairs with the nearest DomainAction starting within this many
// tokens after the Action ends.
inline constexpr std::size_t kPairingWindow = 6;

struct Evidence {
  ConceptId conceptId;
  Category category = Category::Action;
  std::size_t begin = 0;  // byte span in the annotated text
  std::size_t end = 0;
  std::size_t firstToken = 0;  // token span in the stream
  std::size_t lastToken = 0;   // exclusive
  std::string surface;

  bool operator==(const Evidence&) const = default;
};

struct AnnotationResult {
  std::vector<Competency> competencies;
  std::vector<ConceptId> activityAreas;
  std::vector<std::string> unmatchedKeywords;
  std::vector<Evidence> evidence;

  // Distinct concept ids in order of first evidence.
  std::vector<ConceptId> concepts() const;
  bool empty() const { return evidence.empty(); }
  bool operator==(const AnnotationResult&) const = default;
};

// Index from normalized surface form to the concept of each category that
// carries it. Build once per lexicon and reuse across postings.
class ConceptMatcher {
 public:
  explicit ConceptMatcher(const Lexicon& lexicon);

  AnnotationResult extract(const TokenStream& stream) const;

 private:
  using Slot = std::array<std::optional<ConceptId>, 4>;  // indexed by Category
  std::unordered_map<std::string, Slot> index_;
};

AnnotationResult extract_concepts(const TokenStream& stream, const Lexicon& lexicon);

struct AnnotatedMission {
  Mission mission;
  AnnotationResult annotation;
};

// Fills competencies and activity areas from the posting text, keeping any
// manual annotations first and dropping duplicates. Throws ValidationError
// when the lexicon is invalid.
AnnotatedMission annotate_mission(std::string_view rawText, const Lexicon& lexicon,
                                  Mission draft);

void to_json(json& j, const Evidence& e);
void to_json(json& j, const AnnotationResult& r);

// One line of the annotation log: {missionId, concepts, unmatched, evidence}.
json annotation_log_entry(const std::string& missionId, const AnnotationResult& r);

}  // namespace placement
