#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "dtwist/efficiency.hpp"

using namespace dtwist;

namespace {

GogFile load(const std::string& name) {
  std::ifstream in(std::string(DTWIST_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_gog(ss.str());
}

bool has_kind(const std::vector<Violation>& vs, ViolationKind k) {
  return std::any_of(vs.begin(), vs.end(),
                     [k](const Violation& v) { return v.kind == k; });
}

}  // namespace

TEST_CASE("the one-loop twist graphs are efficient at every rank") {
  for (int n = 2; n <= 6; ++n) {
    NielsenGog g = nielsen_gog(n);
    CHECK(check_efficient(g.graph, g.twist).empty());
    CHECK(check_pointedly_efficient(g.graph, g.twist, g.graph.basepoint)
              .empty());
  }
}

TEST_CASE("bonding compares twist rays up to conjugacy") {
  GogFile same = parse_gog("vertex v : x y\n"
                           "edge e : v v | x | x | -1 0\n"
                           "basepoint v\n");
  CHECK(bonding(same.graph, same.twist, OrientedEdge{0, false},
                OrientedEdge{0, true}) == Bonding::Negative);

  GogFile inv = parse_gog("vertex v : x y\n"
                          "edge e : v v | x | x^-1 | -1 0\n"
                          "basepoint v\n");
  CHECK(bonding(inv.graph, inv.twist, OrientedEdge{0, false},
                OrientedEdge{0, true}) == Bonding::Positive);

  GogFile other = parse_gog("vertex v : x y\n"
                            "edge e : v v | x | y | -1 0\n"
                            "basepoint v\n");
  CHECK(bonding(other.graph, other.twist, OrientedEdge{0, false},
                OrientedEdge{0, true}) == Bonding::None);
}

TEST_CASE("collapsing an untwisted edge") {
  GogFile f = load("unused_edge.gog");
  auto before = check_efficient(f.graph, f.twist);
  CHECK(has_kind(before, ViolationKind::UnusedEdge));
  CHECK(has_kind(before, ViolationKind::NotMinimal));

  EfficiencyRun run = make_efficient(f.graph, f.twist);
  CHECK(run.outstanding.empty());
  REQUIRE(run.log.size() == 1);
  CHECK(run.log[0].kind == MoveKind::M4);
  CHECK(run.log[0].chi_after == run.log[0].chi_before);
  CHECK(run.g.num_vertices() == 1);
  CHECK(run.g.num_edges() == 0);
  CHECK(check_efficient(run.g, run.d).empty());
}

TEST_CASE("passing a proper power to its root") {
  GogFile f = load("proper_power.gog");
  auto before = check_efficient(f.graph, f.twist);
  CHECK(has_kind(before, ViolationKind::ProperPower));

  EfficiencyRun run = make_efficient(f.graph, f.twist);
  CHECK(run.outstanding.empty());
  REQUIRE(run.log.size() == 1);
  CHECK(run.log[0].kind == MoveKind::M5);
  CHECK(run.g.edge_image[0][0] == Word::gen(0));
  CHECK(run.g.edge_image[0][1] == Word::gen(1));
  CHECK(run.d.m[0] == std::array<long, 2>{-2, 0});
  CHECK(check_efficient(run.g, run.d).empty());
}

TEST_CASE("folding a positively bonded pair") {
  GogFile f = load("bonded_pair.gog");
  auto before = check_efficient(f.graph, f.twist);
  CHECK(has_kind(before, ViolationKind::PositivelyBonded));

  EfficiencyRun run = make_efficient(f.graph, f.twist);
  CHECK(run.outstanding.empty());
  REQUIRE(run.log.size() == 1);
  CHECK(run.log[0].kind == MoveKind::M3);
  CHECK(run.g.num_vertices() == 2);
  CHECK(run.g.num_edges() == 1);
  CHECK(check_efficient(run.g, run.d).empty());
  CHECK(euler_characteristic(run.g) == euler_characteristic(f.graph));
}

TEST_CASE("splicing out an invisible vertex") {
  GogFile f = parse_gog("vertex u : x y\n"
                        "vertex w : t\n"
                        "vertex u2 : p q\n"
                        "edge e1 : w u | t | x y | -1 0\n"
                        "edge e2 : w u2 | t | p | 2 0\n"
                        "basepoint u\n");
  auto before = check_efficient(f.graph, f.twist);
  REQUIRE(before.size() == 1);
  CHECK(before[0].kind == ViolationKind::InvisibleVertex);

  EfficiencyRun run = make_efficient(f.graph, f.twist);
  CHECK(run.outstanding.empty());
  REQUIRE(run.log.size() == 1);
  CHECK(run.log[0].kind == MoveKind::M2);
  CHECK(run.g.num_vertices() == 2);
  CHECK(run.g.num_edges() == 1);
  CHECK(run.d.m[0] == std::array<long, 2>{0, 3});
  CHECK(euler_characteristic(run.g) == euler_characteristic(f.graph));
  CHECK(check_efficient(run.g, run.d).empty());
}

TEST_CASE("pruning a covered valence-one vertex") {
  GogFile f = parse_gog("vertex u : x y\n"
                        "vertex w : t\n"
                        "edge e : w u | t | x | 0 0\n"
                        "basepoint u\n");
  MoveResult r = apply_move(f.graph, f.twist, MoveKind::M1,
                            MoveLocation{.vertex = 1});
  REQUIRE(r.status == MoveStatus::Applied);
  CHECK(r.g.num_vertices() == 1);
  CHECK(euler_characteristic(r.g) == euler_characteristic(f.graph));

  // a twisted end blocks the prune
  GogFile t = parse_gog("vertex u : x y\n"
                        "vertex w : t\n"
                        "edge e : w u | t | x | -1 0\n"
                        "basepoint u\n");
  CHECK(apply_move(t.graph, t.twist, MoveKind::M1,
                   MoveLocation{.vertex = 1})
            .status == MoveStatus::NotSupported);
  CHECK(apply_move(t.graph, t.twist, MoveKind::M1,
                   MoveLocation{.vertex = 0})
            .status == MoveStatus::NotApplicable);
}

TEST_CASE("move statuses distinguish not applicable from not supported") {
  GogFile f = parse_gog("vertex v : x y\n"
                        "edge e : v v | x x x x | y y y y y y | -1 0\n"
                        "basepoint v\n");
  // exponents 4 and 6 do not divide, so the root pass is unsupported
  MoveResult r = apply_move(f.graph, f.twist, MoveKind::M5,
                            MoveLocation{.e1 = OrientedEdge{0, false}});
  CHECK(r.status == MoveStatus::NotSupported);

  GogFile g = parse_gog("vertex v : x y\n"
                        "edge e : v v | x | y | -1 0\n"
                        "basepoint v\n");
  CHECK(apply_move(g.graph, g.twist, MoveKind::M5,
                   MoveLocation{.e1 = OrientedEdge{0, false}})
            .status == MoveStatus::NotApplicable);
}

TEST_CASE("unresolvable violations are reported, not looped on") {
  GogFile f = parse_gog("vertex u : x\n"
                        "vertex w : y z\n"
                        "edge e : u w | x | y z | -1 0\n"
                        "basepoint u\n");
  EfficiencyRun run = make_efficient(f.graph, f.twist);
  CHECK(run.log.empty());
  REQUIRE(run.outstanding.size() == 1);
  CHECK(run.outstanding[0].kind == ViolationKind::NotMinimal);

  // the basepoint exemption clears the same violation in the pointed run
  EfficiencyRun pr = make_efficient(f.graph, f.twist, true);
  CHECK(pr.outstanding.empty());
  CHECK(pr.log.empty());

  // and stabilising makes the plain check agree with the pointed one
  GraphOfGroups s = stabilise(f.graph);
  CHECK(check_efficient(s, f.twist).empty());
}

TEST_CASE("applied moves strictly decrease the termination measure") {
  for (const char* name :
       {"unused_edge.gog", "proper_power.gog", "bonded_pair.gog"}) {
    GogFile f = load(name);
    auto m0 = efficiency_measure(f.graph, f.twist);
    EfficiencyRun run = make_efficient(f.graph, f.twist);
    auto m1 = efficiency_measure(run.g, run.d);
    CHECK(m1 < m0);
  }
}

TEST_CASE("violation text names the kind and location") {
  GogFile f = load("proper_power.gog");
  auto vs = check_efficient(f.graph, f.twist);
  REQUIRE_FALSE(vs.empty());
  std::string s = violation_str(vs[0]);
  CHECK(s.find(violation_kind_name(vs[0].kind)) != std::string::npos);
}
