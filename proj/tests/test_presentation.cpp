#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vh/presentation.hpp"

using namespace vh;

namespace {

Presentation parse_ok(const std::string& text) {
  ParseResult r = parse_presentation(text);
  REQUIRE(r.ok());
  return *r.presentation;
}

std::string err_of(const std::string& text) {
  ParseResult r = parse_presentation(text);
  REQUIRE(!r.ok());
  REQUIRE(r.error.has_value());
  return r.error->message;
}

}  // namespace

TEST_CASE("six generators one relator") {
  Presentation p = parse_ok("vertical: a c e\nhorizontal: b d f\nrelator: a b c d e f\n");
  CHECK(p.generators.size() == 6);
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0].size() == 6);
  CHECK(p.letter_class(p.relators[0][0]) == EdgeClass::V);
  CHECK(p.letter_class(p.relators[0][1]) == EdgeClass::H);
}

TEST_CASE("torus relator parses freely reduced") {
  Presentation p = parse_ok("vertical: v\nhorizontal: h\nrelator: v h v^-1 h^-1\n");
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0].size() == 4);
  CHECK(is_freely_reduced(p.relators[0]));
  CHECK(is_cyclically_reduced(p.relators[0]));
}

TEST_CASE("exponents expand with sign") {
  Presentation p = parse_ok("vertical: a\nhorizontal: b\nrelator: a^3 b^-2\n");
  const Word& w = p.relators[0];
  REQUIRE(w.size() == 5);
  for (int i = 0; i < 3; i++) CHECK(w[i] == Letter{0, 1});
  for (int i = 3; i < 5; i++) CHECK(w[i] == Letter{1, -1});
}

TEST_CASE("relator reducing to nothing is an error") {
  std::string msg = err_of("vertical: a\nhorizontal: b\nrelator: a a^-1\n");
  CHECK(msg.find("empty") != std::string::npos);
}

TEST_CASE("reduction warns") {
  ParseResult r = parse_presentation("vertical: a\nhorizontal: b\nrelator: a b b^-1 a b\n");
  REQUIRE(r.ok());
  CHECK(r.presentation->relators[0].size() == 3);
  CHECK(r.warnings.size() == 1);

  ParseResult cyc = parse_presentation("vertical: a\nhorizontal: b\nrelator: a b a^-1\n");
  REQUIRE(cyc.ok());
  CHECK(cyc.presentation->relators[0].size() == 1);
  CHECK(cyc.warnings.size() == 1);
}

TEST_CASE("parse errors carry positions") {
  ParseResult r = parse_presentation("vertical: a\nhorizontal: b\nrelator: a c\n");
  REQUIRE(!r.ok());
  CHECK(r.error->line == 3);
  CHECK(r.error->message.find("c") != std::string::npos);

  CHECK(err_of("vertical: a\nhorizontal: a\nrelator: a\n").find("both") != std::string::npos);
  CHECK(err_of("vertical: a a\nhorizontal: b\nrelator: a b\n").find("twice") !=
        std::string::npos);
  CHECK(err_of("vertical: a\nhorizontal: b\nrelator: a^0 b\n").find("zero") !=
        std::string::npos);
  CHECK(err_of("vertical: 1a\nhorizontal: b\nrelator: b\n").find("name") != std::string::npos);
  CHECK(err_of("nonsense: a\n").find("expected") != std::string::npos);
}

TEST_CASE("comments and blank lines ignored, declarations accumulate") {
  Presentation p = parse_ok(
      "# a comment\n"
      "vertical: a\n"
      "\n"
      "vertical: c\n"
      "horizontal: b  # trailing comment\n"
      "relator: a b c^-1 b\n");
  CHECK(p.generators.size() == 3);
  CHECK(p.relators[0].size() == 4);
}

TEST_CASE("serialize round-trips") {
  Presentation p = leary_presentation();
  std::string text = serialize_presentation(p);
  Presentation q = parse_ok(text);
  CHECK(serialize_presentation(q) == text);
  CHECK(presentation_hash(q) == presentation_hash(p));
  CHECK(q.generators.size() == p.generators.size());
  CHECK(q.relators == p.relators);
}

TEST_CASE("word helpers") {
  Presentation p = parse_ok("vertical: v\nhorizontal: h\nrelator: v h\n");
  Word w = {{0, 1}, {1, -1}};
  CHECK(word_to_string(p, w) == "v h^-1");
  CHECK(inverse_word(w) == Word{{1, 1}, {0, -1}});
  Word unreduced = {{0, 1}, {0, -1}, {1, 1}};
  CHECK(!is_freely_reduced(unreduced));
  CHECK(free_reduce(unreduced) == Word{{1, 1}});
  Word cyc = {{0, 1}, {1, 1}, {0, -1}};
  CHECK(is_freely_reduced(cyc));
  CHECK(!is_cyclically_reduced(cyc));
  CHECK(cyclic_reduce(cyc) == Word{{1, 1}});
}

TEST_CASE("six-relator example words") {
  Presentation p = leary_presentation();
  REQUIRE(p.generators.size() == 6);
  REQUIRE(p.relators.size() == 6);
  // Declaration order: a c e then b d f.
  for (int g = 0; g < 6; g++) CHECK(p.generators[g].cls == (g < 3 ? EdgeClass::V : EdgeClass::H));

  std::vector<size_t> lengths;
  for (const Word& w : p.relators) lengths.push_back(w.size());
  CHECK(lengths == std::vector<size_t>{6, 8, 8, 8, 8, 9});

  for (const Letter& l : p.relators[0]) CHECK(l.sign == 1);
  CHECK(word_to_string(p, p.relators[0]) == "a b c d e f");
  CHECK(word_to_string(p, p.relators[5]) == "a d d c f f e b b");

  for (const Word& w : p.relators) {
    CHECK(is_freely_reduced(w));
    CHECK(is_cyclically_reduced(w));
  }
}

TEST_CASE("relator family sizes") {
  Presentation p = leary_family(4);
  CHECK(p.generators.size() == 8);
  REQUIRE(p.relators.size() == 8);
  for (const Word& w : p.relators) {
    CHECK(w.size() == 49);
    CHECK(is_freely_reduced(w));
    CHECK(is_cyclically_reduced(w));
  }
  for (int i = 0; i < 4; i++) CHECK(p.generators[i].cls == EdgeClass::V);
  for (int i = 4; i < 8; i++) CHECK(p.generators[i].cls == EdgeClass::H);

  CHECK(leary_family(7).relators.size() == 14);
  CHECK_THROWS_AS(leary_family(3), std::invalid_argument);
}

TEST_CASE("family words start with their base generator") {
  Presentation p = leary_family(4);
  // All a-type relators first, then all b-type; each starts with its base.
  for (int i = 0; i < 4; i++) {
    CHECK(p.relators[i][0] == Letter{i, 1});
    CHECK(p.relators[4 + i][0] == Letter{4 + i, 1});
  }
}

TEST_CASE("hash distinguishes presentations") {
  CHECK(presentation_hash(leary_presentation()) != presentation_hash(torus_presentation()));
  CHECK(presentation_hash(leary_family(4)) != presentation_hash(leary_family(5)));
}
