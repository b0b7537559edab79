#include <doctest.h>

#include "placement/triples.hpp"
#include "placement/validate.hpp"
#include "random_store.hpp"

using namespace placement;

TEST_SUITE("triples") {
  TEST_CASE("company name is one line") {
    InstanceStore s;
    s.companies.push_back(Company{"c1", "Acme", "", 0});
    const std::string text = export_triples(s);
    CHECK(text.find("c1\tname\tAcme\n") != std::string::npos);
  }

  TEST_CASE("empty store exports nothing") {
    CHECK(export_triples(InstanceStore{}).empty());
    CHECK(import_triples("") == InstanceStore{});
  }

  TEST_CASE("lines are sorted, tab separated and LF terminated") {
    const std::string text = export_triples(testkit::random_valid_store(7));
    REQUIRE_FALSE(text.empty());
    CHECK(text.back() == '\n');
    CHECK(text.find('\r') == std::string::npos);
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
      const std::size_t nl = text.find('\n', pos);
      lines.push_back(text.substr(pos, nl - pos));
      pos = nl + 1;
    }
    CHECK(std::is_sorted(lines.begin(), lines.end()));
    for (const std::string& l : lines) CHECK(std::count(l.begin(), l.end(), '\t') == 2);
  }

  TEST_CASE("random valid stores round trip") {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
      const InstanceStore s = testkit::random_valid_store(seed);
      REQUIRE_MESSAGE(validate_store(s).empty(), "seed " << seed);
      const std::string text = export_triples(s);
      const InstanceStore back = import_triples(text);
      CHECK_MESSAGE(back == s, "seed " << seed);
      CHECK(export_triples(back) == text);
    }
  }

  TEST_CASE("export is deterministic") {
    const InstanceStore a = testkit::random_valid_store(11);
    const InstanceStore b = testkit::random_valid_store(11);
    CHECK(export_triples(a) == export_triples(b));
  }

  TEST_CASE("invalid stores are refused with the report") {
    InstanceStore s = testkit::random_valid_store(3);
    s.marks.push_back(Mark{"s0", "nope", 25});
    try {
      export_triples(s);
      FAIL("expected refusal");
    } catch (const ValidationError& e) {
      CHECK(e.report() == validate_store(s));
      CHECK_FALSE(e.report().empty());
    }
  }

  TEST_CASE("malformed input is a schema error") {
    CHECK_THROWS_AS(import_triples("only one field\n"), SchemaError);
    CHECK_THROWS_AS(import_triples("c1\tname\n"), SchemaError);
  }
}
