#include <doctest.h>

#include "dtwist/automorphism.hpp"
#include "dtwist/free_group.hpp"

using namespace dtwist;

namespace {
const Basis ab{std::vector<std::string>{"a", "b"}};
Word W(const std::string& s) { return Word::parse(ab, s); }
}  // namespace

TEST_CASE("letter packing round-trips") {
  for (int g = 0; g < 5; ++g) {
    for (int s : {1, -1}) {
      Letter l = make_letter(g, s);
      CHECK(gen_of(l) == g);
      CHECK(sign_of(l) == s);
      CHECK(inv_letter(inv_letter(l)) == l);
    }
  }
}

TEST_CASE("free reduction cancels adjacent inverses") {
  std::vector<Letter> raw{make_letter(0, 1), make_letter(1, 1),
                          make_letter(1, -1), make_letter(0, -1)};
  CHECK(Word::reduce(raw).empty());
  raw = {make_letter(0, 1), make_letter(1, 1), make_letter(1, -1),
         make_letter(1, 1)};
  CHECK(Word::reduce(raw) == W("a b"));
}

TEST_CASE("parse and str round-trip") {
  for (const char* s : {"1", "a", "a^-1", "a b a^-1 b^-1", "b b b"}) {
    Word w = W(s);
    CHECK(Word::parse(ab, w.str(ab)) == w);
  }
  CHECK(W("1").empty());
  CHECK(W("a a^-1").empty());
  CHECK_THROWS_AS(W("a c"), ParseError);
  CHECK_THROWS_AS(W("a^2"), ParseError);
}

TEST_CASE("word algebra") {
  CHECK(W("a b") * W("b^-1 a") == W("a a"));
  CHECK(W("a b").inverse() == W("b^-1 a^-1"));
  CHECK(W("a b").pow(2) == W("a b a b"));
  CHECK(W("a b").pow(-1) == W("b^-1 a^-1"));
  CHECK(W("a b").pow(0).empty());
  CHECK(W("a").length() == 1);
  CHECK(W("b").min_rank() == 2);
  CHECK(W("a").min_rank() == 1);
}

TEST_CASE("word ordering is length first") {
  CHECK(W("b b") > W("a"));
  CHECK(W("a") < W("a^-1"));  // positive before negative at equal length
}

TEST_CASE("cyclic reduction and conjugacy") {
  auto [core, conj] = cyclic_reduce(W("a b a b^-1 a^-1"));
  CHECK(core == W("a"));
  CHECK(conj == W("a b"));
  CHECK(conj * core * conj.inverse() == W("a b a b^-1 a^-1"));

  auto g = are_conjugate(W("b"), W("a b a^-1"));
  REQUIRE(g.has_value());
  CHECK(*g * W("b") * g->inverse() == W("a b a^-1"));
  CHECK_FALSE(are_conjugate(W("a"), W("b")).has_value());
  CHECK_FALSE(are_conjugate(W("a"), W("a a")).has_value());
}

TEST_CASE("conjugacy classes canonicalize rotations") {
  CHECK(ConjClass(W("a b")) == ConjClass(W("b a")));
  CHECK(ConjClass(W("a b")) == ConjClass(W("b^-1 a b b")));
  CHECK(ConjClass(W("a b")) != ConjClass(W("a b^-1")));
}

TEST_CASE("primitive roots and powers") {
  auto [root, e] = primitive_root(W("a b a b a b"));
  CHECK(root == W("a b"));
  CHECK(e == 3);
  auto [r2, e2] = primitive_root(W("a b"));
  CHECK(r2 == W("a b"));
  CHECK(e2 == 1);
  // non cyclically reduced input
  auto [r3, e3] = primitive_root(W("b a a b^-1"));
  CHECK(e3 == 2);
  CHECK(r3 == W("b a b^-1"));

  CHECK(power_of(W("a a a"), W("a")) == 3);
  CHECK(power_of(W("a^-1 a^-1"), W("a")) == -2);
  CHECK(power_of(W("1"), W("a")) == 0);
  CHECK_FALSE(power_of(W("a b"), W("a")).has_value());
}

TEST_CASE("automorphism apply, compose, invert") {
  FreeAutomorphism rho(2, {W("a b"), W("b")});
  CHECK(apply(rho, W("a")) == W("a b"));
  CHECK(apply(rho, W("a^-1")) == W("b^-1 a^-1"));

  FreeAutomorphism inv = invert(rho);
  CHECK(compose(rho, inv).is_identity());
  CHECK(compose(inv, rho).is_identity());
  CHECK(apply(inv, W("a")) == W("a b^-1"));

  // order matters: outer after inner
  FreeAutomorphism swap(2, {W("b"), W("a")});
  CHECK(apply(compose(rho, swap), W("b")) == W("a b"));
  CHECK(apply(compose(swap, rho), W("b")) == W("a"));

  CHECK_THROWS_AS(invert(FreeAutomorphism(2, {W("a a"), W("b")})),
                  NotAnAutomorphism);
}

TEST_CASE("inner automorphisms and inner difference") {
  FreeAutomorphism c = inner_automorphism(2, W("a"));
  CHECK(apply(c, W("b")) == W("a b a^-1"));
  FreeAutomorphism rho(2, {W("a b"), W("b")});
  auto d = inner_difference(compose(c, rho), rho);
  REQUIRE(d.has_value());
  CHECK(*d == W("a"));
  CHECK_FALSE(inner_difference(rho, FreeAutomorphism::identity(2)).has_value());
}

TEST_CASE("automorphism text form round-trips") {
  FreeAutomorphism rho(2, {W("a b"), W("b")});
  CHECK(FreeAutomorphism::parse(ab, rho.str(ab)) == rho);
}

TEST_CASE("basis lookups") {
  CHECK(ab.rank() == 2);
  CHECK(ab.index("b") == 1);
  CHECK_FALSE(ab.index("z").has_value());
  CHECK(Basis{}.rank() == 0);
}
