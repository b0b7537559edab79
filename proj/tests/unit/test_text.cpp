#include <doctest.h>

#include "placement/text.hpp"

using namespace placement;

namespace {

std::vector<std::string> normalized(std::string_view text) {
  std::vector<std::string> out;
  for (const Token& t : tokenize(text)) out.push_back(t.normalized);
  return out;
}

}  // namespace

TEST_SUITE("text") {
  TEST_CASE("accents and case are folded") {
    CHECK(normalized("Développer un tableau") ==
          std::vector<std::string>{"developper", "un", "tableau"});
  }

  TEST_CASE("empty text gives no tokens") { CHECK(tokenize("").empty()); }

  TEST_CASE("punctuation separates tokens") {
    CHECK(normalized("ETL/BI pipelines") == std::vector<std::string>{"etl", "bi", "pipelines"});
    CHECK(normalized("a,b;c.(d)") == std::vector<std::string>{"a", "b", "c", "d"});
  }

  TEST_CASE("inner hyphens stay inside a token") {
    CHECK(normalized("data-driven e-commerce") ==
          std::vector<std::string>{"data-driven", "e-commerce"});
    CHECK(normalized("- leading and trailing -") ==
          std::vector<std::string>{"leading", "and", "trailing"});
  }

  TEST_CASE("offsets are byte positions and strictly increasing") {
    const std::string text = "  Élève  très motivé ";
    const TokenStream ts = tokenize(text);
    REQUIRE(ts.size() == 3);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      CHECK(text.substr(ts[i].byteOffset, ts[i].surface.size()) == ts[i].surface);
      if (i > 0) CHECK(ts[i].byteOffset > ts[i - 1].byteOffset);
    }
    CHECK(ts[0].normalized == "eleve");
    CHECK(ts[2].normalized == "motive");
  }

  TEST_CASE("ligatures expand") {
    CHECK(fold("Œuvre") == "oeuvre");
    CHECK(fold("Straße") == "strasse");
  }

  TEST_CASE("phrases normalize to single-spaced folded words") {
    CHECK(normalize_phrase("  Tableau   de  BORD ") == "tableau de bord");
    CHECK(normalize_phrase("") == "");
  }

  TEST_CASE("unicode whitespace separates") {
    CHECK(normalized("a\u00a0b\u2003c\nd") == std::vector<std::string>{"a", "b", "c", "d"});
  }
}
