#include "placement/annotate.hpp"

#include <algorithm>
#include <set>

#include "placement/store_io.hpp"
#include "placement/validate.hpp"

namespace placement {
namespace {

constexpr std::array<Category, 4> kPriority{Category::Action, Category::DomainAction,
                                            Category::ActivityArea, Category::SkillKeyword};

template <typename T>
void push_unique(std::vector<T>& v, const T& x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

}  // namespace

std::vector<ConceptId> AnnotationResult::concepts() const {
  std::vector<ConceptId> out;
  for (const Evidence& e : evidence) push_unique(out, e.conceptId);
  return out;
}

ConceptMatcher::ConceptMatcher(const Lexicon& lexicon) {
  for (const ConceptEntry& e : lexicon.entries) {
    auto add = [&](const std::string& form) {
      std::string key = normalize_phrase(form);
      if (key.empty()) return;
      auto& slot = index_[key][static_cast<std::size_t>(e.category)];
      if (!slot) slot = e.id;
    };
    add(e.label);
    for (const std::string& s : e.synonyms) add(s);
  }
}

AnnotationResult ConceptMatcher::extract(const TokenStream& stream) const {
  AnnotationResult result;
  const std::size_t n = stream.size();

  // Greedy longest match, left to right; equal-length ties go to the
  // higher-priority category.
  std::size_t i = 0;
  while (i < n) {
    bool matched = false;
    for (std::size_t len = std::min(kMaxPhraseTokens, n - i); len >= 1 && !matched; --len) {
      std::string key = stream[i].normalized;
      for (std::size_t t = i + 1; t < i + len; ++t) key += ' ' + stream[t].normalized;
      auto hit = index_.find(key);
      if (hit == index_.end()) continue;
      for (Category cat : kPriority) {
        const auto& id = hit->second[static_cast<std::size_t>(cat)];
        if (!id) continue;
        const Token& first = stream[i];
        const Token& last = stream[i + len - 1];
        result.evidence.push_back(Evidence{*id, cat, first.byteOffset, last.byteEnd(), i, i + len,
                                           std::string()});
        matched = true;
        break;
      }
      if (matched) {
        // Surface as it appeared, tokens joined by single spaces.
        std::string surface = stream[i].surface;
        for (std::size_t t = i + 1; t < i + len; ++t) surface += ' ' + stream[t].surface;
        result.evidence.back().surface = std::move(surface);
        i += len;
      }
    }
    if (!matched) ++i;
  }

  std::vector<bool> paired(result.evidence.size(), false);
  for (std::size_t a = 0; a < result.evidence.size(); ++a) {
    const Evidence& action = result.evidence[a];
    if (action.category != Category::Action) continue;
    for (std::size_t b = a + 1; b < result.evidence.size(); ++b) {
      const Evidence& target = result.evidence[b];
      if (target.firstToken >= action.lastToken + kPairingWindow) break;
      if (target.category != Category::DomainAction) continue;
      push_unique(result.competencies, Competency{action.conceptId, target.conceptId});
      paired[a] = paired[b] = true;
      break;
    }
  }

  for (std::size_t k = 0; k < result.evidence.size(); ++k) {
    const Evidence& e = result.evidence[k];
    if (e.category == Category::ActivityArea) push_unique(result.activityAreas, e.conceptId);
    const bool pairable = e.category == Category::Action || e.category == Category::DomainAction;
    if (pairable && !paired[k]) push_unique(result.unmatchedKeywords, e.surface);
  }
  return result;
}

AnnotationResult extract_concepts(const TokenStream& stream, const Lexicon& lexicon) {
  return ConceptMatcher(lexicon).extract(stream);
}

AnnotatedMission annotate_mission(std::string_view rawText, const Lexicon& lexicon, Mission draft) {
  ValidationReport report = validate_lexicon(lexicon);
  if (!report.empty()) throw ValidationError(std::move(report), "lexicon is invalid");

  draft.rawText = std::string(rawText);
  AnnotationResult annotation = extract_concepts(tokenize(rawText), lexicon);
  for (const Competency& c : annotation.competencies) push_unique(draft.competencies, c);
  for (const ConceptId& a : annotation.activityAreas) push_unique(draft.activityAreas, a);
  return {std::move(draft), std::move(annotation)};
}

void to_json(json& j, const Evidence& e) {
  j = {{"conceptId", e.conceptId}, {"category", to_string(e.category)},
       {"begin", e.begin},         {"end", e.end},
       {"surface", e.surface}};
}

void to_json(json& j, const AnnotationResult& r) {
  j = {{"competencies", r.competencies}, {"activityAreas", r.activityAreas},
       {"unmatchedKeywords", r.unmatchedKeywords}, {"evidence", r.evidence}};
}

json annotation_log_entry(const std::string& missionId, const AnnotationResult& r) {
  return {{"missionId", missionId}, {"concepts", r.concepts()},
          {"unmatched", r.unmatchedKeywords}, {"evidence", r.evidence}};
}

}  // namespace placement
