#include <doctest.h>

#include <random>
#include <set>

#include "dtwist/whitehead.hpp"

using namespace dtwist;

namespace {
const Basis ab{std::vector<std::string>{"a", "b"}};
Word W(const std::string& s) { return Word::parse(ab, s); }
ClassTuple T(std::initializer_list<const char*> words) {
  ClassTuple t;
  t.rank = 2;
  for (const char* s : words) t.classes.emplace_back(W(s));
  return t;
}
}  // namespace

TEST_CASE("enumeration is deduplicated and invertible") {
  const auto& ws = enumerate_whitehead(2);
  std::set<std::vector<Word>> seen;
  for (const auto& w : ws) {
    CHECK(w.realization.rank() == 2);
    CHECK_NOTHROW(invert(w.realization));  // throws if not an automorphism
    CHECK(seen.insert(w.realization.images()).second);
  }
  // type I elements are the signed permutations
  int type1 = 0;
  for (const auto& w : ws)
    if (w.kind == WhiteheadAut::Kind::TypeI) ++type1;
  CHECK(type1 == 8);
  CHECK(ws.size() > 8);  // some type II survive dedup
}

TEST_CASE("type II images follow the defining recipe") {
  for (const auto& w : enumerate_whitehead(3)) {
    if (w.kind != WhiteheadAut::Kind::TypeII) continue;
    const Letter a = w.multiplier;
    const Word wa = Word::gen(gen_of(a), sign_of(a));
    for (int i = 0; i < 3; ++i) {
      if (i == gen_of(a)) continue;
      const Word x = Word::gen(i);
      const Word img = w.realization.image(i);
      const bool ok = img == x || img == x * wa || img == wa.inverse() * x ||
                      img == wa.inverse() * x * wa;
      CHECK(ok);
    }
    // the multiplier letter itself is fixed
    CHECK(w.realization.image(gen_of(a)) == Word::gen(gen_of(a)));
  }
}

TEST_CASE("total length sums cyclic lengths") {
  CHECK(total_length(T({"a b", "b a^-1 b^-1"})) == 3);
}

TEST_CASE("minimize reaches the known minima") {
  auto r = minimize(T({"a b"}));
  CHECK(total_length(r.minimal) == 1);
  CHECK(apply_to_tuple(r.witness, T({"a b"})) == r.minimal);

  // the commutator class cannot drop below length 4
  auto rc = minimize(T({"a b a^-1 b^-1"}));
  CHECK(total_length(rc.minimal) == 4);

  // a tuple pinning both generators stays put
  auto rf = minimize(T({"a", "b"}));
  CHECK(total_length(rf.minimal) == 2);
}

TEST_CASE("equivalence produces verified witnesses") {
  auto phi = are_equivalent(T({"a", "b"}), T({"b", "a"}));
  REQUIRE(phi.has_value());
  CHECK(apply_to_tuple(*phi, T({"a", "b"})) == T({"b", "a"}));

  auto psi = are_equivalent(T({"a b a b b"}), T({"a"}));
  REQUIRE(psi.has_value());
  CHECK(apply_to_tuple(*psi, T({"a b a b b"})) == T({"a"}));

  CHECK_FALSE(are_equivalent(T({"a"}), T({"a b a^-1 b^-1"})).has_value());
  CHECK_FALSE(are_equivalent(T({"a"}), T({"b", "a"})).has_value());
  CHECK_FALSE(are_equivalent(T({"a", "b"}), T({"a", "a"})).has_value());
}

TEST_CASE("random orbits round-trip through are_equivalent") {
  std::mt19937 rng(20260822);
  const int rank = 3;
  const Basis b3{std::vector<std::string>{"a", "b", "c"}};
  const auto& ws = enumerate_whitehead(rank);
  for (int trial = 0; trial < 20; ++trial) {
    ClassTuple t;
    t.rank = rank;
    const int k = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < k; ++i) {
      std::vector<Letter> raw;
      const int len = 1 + static_cast<int>(rng() % 5);
      for (int j = 0; j < len; ++j)
        raw.push_back(make_letter(static_cast<int>(rng() % rank),
                                  rng() % 2 ? 1 : -1));
      Word w = Word::reduce(raw);
      if (w.empty()) w = Word::gen(0);
      t.classes.emplace_back(w);
    }
    FreeAutomorphism phi = FreeAutomorphism::identity(rank);
    const int moves = static_cast<int>(rng() % 4);
    for (int m = 0; m < moves; ++m)
      phi = compose(ws[rng() % ws.size()].realization, phi);
    const ClassTuple image = apply_to_tuple(phi, t);
    auto found = are_equivalent(t, image);
    REQUIRE(found.has_value());
    CHECK(apply_to_tuple(*found, t) == image);
  }
}
