#include <doctest.h>

#include "dtwist/nielsen.hpp"
#include "dtwist/ses.hpp"

using namespace dtwist;

TEST_CASE("transvection presentations at tiny ranks") {
  FinitePresentation p1 = autfk_presentation(1);
  CHECK(p1.generators.names() == std::vector<std::string>{"I_1"});
  CHECK(p1.relators.size() == 1);
  CHECK(abelianisation(p1).str() == "Z/2");

  FinitePresentation p2 = autfk_presentation(2);
  CHECK(p2.generators.rank() == 7);
  CHECK(p2.generators.name(0) == "(c1^+;c2)");
  std::vector<FreeAutomorphism> r2 = autfk_realization(2);
  REQUIRE(r2.size() == 7);
  CHECK(r2[0].image(0) == Word::gen(0) * Word::gen(1));
  CHECK(r2[0].image(1) == Word::gen(1));
}

TEST_CASE("transvection relators hold as automorphism identities") {
  for (int k : {2, 3}) {
    FinitePresentation p = autfk_presentation(k);
    std::vector<FreeAutomorphism> gens = autfk_realization(k);
    GroupOps<FreeAutomorphism> ops = aut_group_ops(k);
    for (const Word& r : p.relators)
      CHECK(eval_word(ops, gens, r).is_identity());
  }
}

TEST_CASE("transvection abelianisations match the frozen table") {
  CHECK(abelianisation(autfk_presentation(2)).str() == "(Z/2)^2");
  CHECK(abelianisation(autfk_presentation(3)).str() == "Z/2");
}

TEST_CASE("symbol admissibility") {
  const int n = 3;  // slots 0, 1, 2
  CHECK(symbol_admissible(n, 0, 0, 1));
  CHECK(symbol_admissible(n, 0, 0, 2));
  CHECK(symbol_admissible(n, 1, 0, 0));
  CHECK(symbol_admissible(n, 1, 0, 2));
  CHECK(symbol_admissible(n, 2, 1, 0));
  CHECK(symbol_admissible(n, 2, -1, 1));
  CHECK_FALSE(symbol_admissible(n, 0, 1, 1));   // one-sided needs a c base
  CHECK_FALSE(symbol_admissible(n, 2, 0, 1));   // two-sided needs base 0 or 1
  CHECK_FALSE(symbol_admissible(n, 2, 1, 2));   // base equals slot
  CHECK_FALSE(symbol_admissible(n, 0, 0, 3));   // slot out of range
}

TEST_CASE("vertex group presentation at rank two is free of rank two") {
  PresentedAutGroup jw = jw_presentation(2);
  CHECK(jw.pres.generators.names() ==
        std::vector<std::string>{"(B^~;b)", "(b^~;B)"});
  CHECK(jw.pres.relators.empty());
  // the two-sided symbol conjugates its slot's letter past the base letter
  CHECK(jw.realization[0].image(0) ==
        Word::gen(1, -1) * Word::gen(0) * Word::gen(1));
  CHECK(jw.realization[0].image(1) == Word::gen(1));
}

TEST_CASE("vertex group presentation counts at rank three") {
  PresentedAutGroup jw = jw_presentation(3);
  CHECK(jw.pres.generators.rank() == 9);
  CHECK(jw.pres.relators.size() == 36);
  CHECK(jw.tagged.size() == 36);
}

TEST_CASE("centraliser presentation at rank two is the closed form") {
  PresentedAutGroup t = theorem_presentation(2);
  CHECK(t.pres.generators.names() ==
        std::vector<std::string>{"rho", "(a^-1;b)", "gamma[aba^-1]", "theta"});
  CHECK(t.pres.relators.size() == 5);
  int r6 = 0, r7 = 0, r86 = 0;
  for (const TaggedRelator& tr : t.tagged) {
    if (tr.family.rfind("R6", 0) == 0) ++r6;
    if (tr.family.rfind("R7", 0) == 0) ++r7;
    if (tr.family.rfind("R8.6", 0) == 0) ++r86;
  }
  CHECK(r6 == 3);
  CHECK(r7 == 1);
  CHECK(r86 == 1);
}

TEST_CASE("centraliser presentation size at rank three") {
  PresentedAutGroup t = theorem_presentation(3);
  CHECK(t.pres.generators.rank() == 11);
  CHECK(t.pres.relators.size() == 52);
}

TEST_CASE("generator catalogue commutes with the twist automorphism") {
  for (int n : {2, 3}) {
    NielsenContext ctx = build_context(n);
    CHECK(ctx.rho.image(0) == Word::gen(0) * Word::gen(1));
    CHECK(ctx.theta.image(0) == Word::gen(0, -1));
    CHECK(ctx.theta.image(1) ==
          Word::gen(0) * Word::gen(1, -1) * Word::gen(0, -1));
    for (const FreeAutomorphism& f : ctx.images)
      CHECK(compose(f, ctx.rho) == compose(ctx.rho, f));
    CHECK(&ctx.by_name("rho") == &ctx.images.front());
    CHECK(&ctx.by_name("theta") == &ctx.images.back());
    CHECK_THROWS_AS(ctx.by_name("nonsense"), Error);
  }
}

TEST_CASE("twist powers are recognized exactly") {
  NielsenContext ctx = build_context(2);
  CHECK(rho_exponent(ctx.rho) == 1);
  CHECK(rho_exponent(FreeAutomorphism::identity(2)) == 0);
  CHECK(rho_exponent(compose(ctx.rho, ctx.rho)) == 2);
  CHECK(rho_exponent(invert(ctx.rho)) == -1);
  CHECK_FALSE(rho_exponent(ctx.theta).has_value());
  CHECK_FALSE(rho_exponent(inner_automorphism(2, Word::gen(0))).has_value());
}

TEST_CASE("assembled centraliser matches the closed form at rank two") {
  CentraliserData c = assemble_centraliser(2);
  PresentedAutGroup t = theorem_presentation(2);
  CHECK(c.pres.generators.names() == t.pres.generators.names());
  for (size_t i = 0; i < c.realization.size(); ++i)
    CHECK(c.realization[i] == t.realization[i]);
  AbelianInvariants inv = abelianisation(c.pres);
  CHECK(inv.str() == "Z^2 x Z/2");
  CHECK(inv == expected_centraliser_h1(2));
  CHECK(abelianisation(t.pres) == inv);
}

TEST_CASE("assembled centraliser matches the closed form at rank three") {
  CentraliserData c = assemble_centraliser(3);
  PresentedAutGroup t = theorem_presentation(3);
  CHECK(c.pres.generators.names() == t.pres.generators.names());
  AbelianInvariants inv = abelianisation(c.pres);
  CHECK(inv.str() == "Z x (Z/2)^3");
  CHECK(inv == expected_centraliser_h1(3));
  CHECK(abelianisation(t.pres) == inv);
}

TEST_CASE("the twist generates maximal free abelian image at rank two") {
  PresentedAutGroup t = theorem_presentation(2);
  AbelianClass cls = class_in_abelianisation(t.pres, Word::gen(0));
  REQUIRE(cls.free_coords.size() == 2);
  BigInt g = gcd(BigInt(abs(cls.free_coords[0])),
                 BigInt(abs(cls.free_coords[1])));
  CHECK(g == 1);
}

TEST_CASE("the loop reversal realizes the outer symmetry") {
  GraphImage gi = graph_image(2);
  CHECK(gi.order == 2);
  NielsenContext ctx = build_context(2);
  CHECK(gi.induced == ctx.theta);

  // audit the equivalence witness against the twistor class pair
  NielsenGog n = nielsen_gog(2);
  const Word zp = apply(FreeAutomorphism::identity(2),
                        n.graph.image(OrientedEdge{0, false})
                            .pow(twistor_exponent(n.twist,
                                                  OrientedEdge{0, false})));
  const Word zm = n.graph.image(OrientedEdge{0, true})
                      .pow(twistor_exponent(n.twist, OrientedEdge{0, true}));
  ClassTuple fwd{2, {ConjClass(zp), ConjClass(zm)}};
  ClassTuple swp{2, {ConjClass(zm), ConjClass(zp)}};
  CHECK(apply_to_tuple(gi.swap_witness, fwd) == swp);
}

TEST_CASE("the full verification suite passes at rank two") {
  std::vector<CheckReport> reports = verify_all(2);
  std::vector<std::string> names;
  for (const CheckReport& r : reports) {
    names.push_back(r.name);
    INFO(r.name << ": " << r.message);
    CHECK(r.pass);
  }
  CHECK(names == std::vector<std::string>{
                     "catalogue", "efficient", "induced-rho",
                     "vertex-relations", "centraliser-relations", "assembled",
                     "abelianisation", "rho-class", "graph-image"});
}

TEST_CASE("frozen abelianisation table") {
  CHECK(expected_centraliser_h1(2).str() == "Z^2 x Z/2");
  CHECK(expected_centraliser_h1(3).str() == "Z x (Z/2)^3");
  CHECK(expected_centraliser_h1(4).str() == "(Z/2)^3");
  CHECK(expected_centraliser_h1(5).str() == "(Z/2)^2");
  CHECK(expected_centraliser_h1(6).str() == "(Z/2)^2");
}
