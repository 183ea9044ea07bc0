#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fca/io.hpp"
#include "fca/oracle.hpp"

using namespace fca;

namespace {

Context chain2() {
  return Context::of({"g0", "g1"}, {"m0", "m1"}, {{0, 0}, {0, 1}, {1, 1}});
}

}  // namespace

TEST_CASE("cxt parsing of a literal document") {
  Context c = parse_cxt("B\nexample\n2\n2\n\ncow\ndog\nbarks\nmoos\n.X\nX.\n");
  CHECK(c.objects() == std::vector<std::string>{"cow", "dog"});
  CHECK(c.attributes() == std::vector<std::string>{"barks", "moos"});
  CHECK(c.incident(0, 1));
  CHECK_FALSE(c.incident(0, 0));
  CHECK(c.incident(1, 0));
}

TEST_CASE("cxt emission round-trips through the parser") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Context c = random_context(3, 4, 0.5, seed);
    CHECK(parse_cxt(emit_cxt(c)) == c);
  }
  // Degenerate shapes survive as well.
  Context wide = Context::of({}, {"m0", "m1"}, {});
  CHECK(parse_cxt(emit_cxt(wide)) == wide);
}

TEST_CASE("cxt parse errors carry line and column positions") {
  auto position = [](const std::string& text) {
    try {
      parse_cxt(text);
    } catch (const ParseError& e) {
      return std::make_pair(e.line, e.column);
    }
    return std::make_pair(std::size_t{0}, std::size_t{0});
  };
  CHECK(position("A\n\n0\n0\n\n") == std::make_pair(std::size_t{1}, std::size_t{1}));
  CHECK(position("B\n\nx\n0\n\n") == std::make_pair(std::size_t{3}, std::size_t{1}));
  CHECK(position("B\n\n1\n1\n\ng\nm\n?\n") == std::make_pair(std::size_t{8}, std::size_t{1}));
  CHECK(position("B\n\n1\n1\n\ng\nm\nXX\n") == std::make_pair(std::size_t{8}, std::size_t{3}));
  // No trailing newline at all.
  CHECK_THROWS_AS(parse_cxt("B"), ParseError);
  // Missing blank separator line.
  CHECK_THROWS_AS(parse_cxt("B\n\n1\n1\ng\nm\nX\n"), ParseError);
  // Extra content after the incidence rows.
  CHECK_THROWS_AS(parse_cxt("B\n\n1\n1\n\ng\nm\nX\nleftover\n"), ParseError);
}

TEST_CASE("json context round trip and validation") {
  Context c = chain2();
  CHECK(parse_context_json(emit_context_json(c)) == c);
  CHECK_THROWS_AS(parse_context_json("{\"objects\": []}"), ParseError);
  CHECK_THROWS_AS(parse_context_json("not json"), ParseError);
  CHECK_THROWS_AS(
      parse_context_json(
          "{\"objects\": [\"g\"], \"attributes\": [\"m\"], \"incidence\": [[1]]}"),
      ParseError);  // numeric, not boolean
}

TEST_CASE("pair json round trip and totality") {
  Context k = chain2(), l = chain2();
  MappingPair p(k, l, {1, 0}, {0, 0});
  MappingPair q = parse_pair_json(emit_pair_json(p), k, l);
  CHECK(q.alpha == p.alpha);
  CHECK(q.beta == p.beta);
  CHECK_THROWS_AS(
      parse_pair_json("{\"alpha\": {\"g0\": \"g1\"}, \"beta\": {}}", k, l),
      ParseError);  // g1 and both attributes lack images
  CHECK_THROWS_AS(
      parse_pair_json(
          "{\"alpha\": {\"g0\": \"nope\", \"g1\": \"g0\"}, \"beta\": {\"m0\": \"m0\", \"m1\": \"m1\"}}",
          k, l),
      ParseError);  // unknown target name
}

TEST_CASE("dot output lists reduced labels and cover edges") {
  ConceptLattice cl = build_concept_lattice(chain2());
  std::string dot = emit_dot(cl);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
  // A 2-chain has exactly one cover edge.
  std::size_t edges = 0, at = 0;
  while ((at = dot.find("->", at)) != std::string::npos) {
    ++edges;
    at += 2;
  }
  CHECK(edges == 1);
  // Each object and attribute name appears in exactly one label.
  for (const char* name : {"g0", "g1", "m0", "m1"})
    CHECK(dot.find(name) != std::string::npos);
}
