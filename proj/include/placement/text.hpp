#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace placement {

struct Token {
  std::string surface;     // exact bytes from the input
  std::string normalized;  // case- and accent-folded
  std::size_t byteOffset = 0;

  std::size_t byteEnd() const { return byteOffset + surface.size(); }
  bool operator==(const Token&) const = default;
};

using TokenStream = std::vector<Token>;

// Splits UTF-8 text on whitespace and punctuation. A hyphen stays inside a
// token when it sits between two word characters ("data-driven"); anywhere
// else it separates. Invalid UTF-8 bytes act as separators.
TokenStream tokenize(std::string_view text);

// Case-folds and strips Latin diacritics from one word. Ligatures expand
// (oe, ae, ss).
std::string fold(std::string_view word);

// Canonical whitespace-joined folded form of a phrase; this is the key used
// for every lexicon comparison.
std::string normalize_phrase(std::string_view phrase);

}  // namespace placement
