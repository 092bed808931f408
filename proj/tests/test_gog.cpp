#include <doctest.h>

#include <fstream>
#include <sstream>

#include "dtwist/efficiency.hpp"
#include "dtwist/graph_of_groups.hpp"

using namespace dtwist;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const Basis ab{std::vector<std::string>{"a", "b"}};

}  // namespace

TEST_CASE("nielsen graph of groups is well formed") {
  NielsenGog n = nielsen_gog(2);
  CHECK(validate(n.graph).empty());
  CHECK(euler_characteristic(n.graph) == -1);
  CHECK(n.pi1.target.rank() == 2);
  CHECK_NOTHROW(check_pi1_basis(n.graph, n.pi1));
  CHECK(twistor_exponent(n.twist, OrientedEdge{0, false}) == -1);
  CHECK(twistor_exponent(n.twist, OrientedEdge{0, true}) == 1);

  NielsenGog n4 = nielsen_gog(4);
  CHECK(validate(n4.graph).empty());
  CHECK(euler_characteristic(n4.graph) == -3);
  CHECK(n4.pi1.target.rank() == 4);
}

TEST_CASE("britton reduction pinches powers of the edge image") {
  NielsenGog n = nielsen_gog(2);
  const GraphOfGroups& g = n.graph;
  // t b t^-1 with b the glued image pinches to B
  PathWord p{0,
             {Word(), Word::gen(1), Word()},
             {OrientedEdge{0, false}, OrientedEdge{0, true}}};
  PathWord r = britton_reduce(g, p);
  CHECK(r.edges.empty());
  CHECK(r.vertex_words == std::vector<Word>{Word::gen(0)});

  // conjugating a non-power does not pinch
  PathWord q{0,
             {Word(), Word::gen(0), Word()},
             {OrientedEdge{0, false}, OrientedEdge{0, true}}};
  CHECK(britton_reduce(g, q).edges.size() == 2);
  CHECK_FALSE(is_trivial_in_path_group(g, q));

  PathWord p2{0,
              {Word(), Word::gen(1), Word::gen(0, -1)},
              {OrientedEdge{0, false}, OrientedEdge{0, true}}};
  CHECK(is_trivial_in_path_group(g, p2));
}

TEST_CASE("path group algebra round-trips") {
  NielsenGog n = nielsen_gog(2);
  const GraphOfGroups& g = n.graph;
  PathWord loop = n.pi1.expressions[0];
  PathWord prod = path_mul(g, loop, path_inverse(g, loop));
  CHECK(is_trivial_in_path_group(g, prod));
  CHECK(path_end(g, loop) == loop.start);
  CHECK_NOTHROW(validate_path(g, loop));
}

TEST_CASE("rewriting expresses loops in the chosen basis") {
  NielsenGog n = nielsen_gog(3);
  for (int i = 0; i < n.pi1.target.rank(); ++i)
    CHECK(rewrite_path(n.graph, n.pi1, n.pi1.expressions[i]) == Word::gen(i));
}

TEST_CASE("the twist is a graph of groups automorphism") {
  NielsenGog n = nielsen_gog(2);
  GogAutomorphism tw = dehn_twist(n.graph, n.twist);
  CHECK_NOTHROW(check_gog_automorphism(n.graph, tw));
  CHECK(preserves_twistors(tw, n.twist));
  GogAutomorphism round = compose_gog(n.graph, tw, invert_gog(n.graph, tw));
  CHECK(round == gog_identity(n.graph));
}

TEST_CASE("the twist induces a -> ab on the fundamental group") {
  for (int rank : {2, 3}) {
    NielsenGog n = nielsen_gog(rank);
    GogAutomorphism tw = dehn_twist(n.graph, n.twist);
    FreeAutomorphism f = induced_automorphism(n.graph, tw, n.pi1);
    CHECK(f.image(0) == Word::gen(0) * Word::gen(1));
    for (int i = 1; i < rank; ++i) CHECK(f.image(i) == Word::gen(i));
  }
}

TEST_CASE("stabilising adds one free generator at the basepoint") {
  NielsenGog n = nielsen_gog(2);
  GraphOfGroups s = stabilise(n.graph);
  CHECK(validate(s).empty());
  CHECK(euler_characteristic(s) == euler_characteristic(n.graph) - 1);
  CHECK(s.vertex_basis[s.basepoint].rank() ==
        n.graph.vertex_basis[n.graph.basepoint].rank() + 1);
}

TEST_CASE("gog files parse, match the built-in graph, and round-trip") {
  const std::string text = slurp(std::string(DTWIST_DATA_DIR) +
                                 "/nielsen2.gog");
  GogFile f = parse_gog(text);
  NielsenGog n = nielsen_gog(2);
  CHECK(f.graph == n.graph);
  CHECK(f.twist == n.twist);
  REQUIRE(f.pi1.has_value());
  CHECK(*f.pi1 == n.pi1);

  GogFile again = parse_gog(serialize_gog(f));
  CHECK(again.graph == f.graph);
  CHECK(again.twist == f.twist);
  CHECK(again.pi1 == f.pi1);
}

TEST_CASE("gog parser reports malformed input") {
  CHECK_THROWS_AS(parse_gog("vertex v\n"), ParseError);
  CHECK_THROWS_AS(parse_gog("vertex v : x\nedge e : v w | x | x | 0 0\n"),
                  ParseError);
  // pi1 expression must loop at the basepoint
  CHECK_THROWS_AS(
      parse_gog("vertex v : x\nvertex w : y\n"
                "edge e : v w | x | y | -1 0\nbasepoint v\n"
                "pi1 g : t[e]\n"),
      ParseError);
}

TEST_CASE("serializer output for the shipped samples stays canonical") {
  for (const char* name :
       {"nielsen2.gog", "nielsen3.gog", "unused_edge.gog",
        "proper_power.gog", "bonded_pair.gog"}) {
    const std::string text =
        slurp(std::string(DTWIST_DATA_DIR) + "/" + name);
    GogFile f = parse_gog(text);
    CHECK(validate(f.graph).empty());
    GogFile again = parse_gog(serialize_gog(f));
    CHECK(again.graph == f.graph);
    CHECK(again.twist == f.twist);
  }
}
