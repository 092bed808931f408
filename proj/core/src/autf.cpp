#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dtwist/errors.hpp"
#include "dtwist/nielsen.hpp"
#include "dtwist/presentation.hpp"
#include "dtwist/ses.hpp"

namespace dtwist {

namespace {

struct AutfkData {
  int k = 0;
  std::vector<std::string> names;
  std::vector<FreeAutomorphism> realization;
  std::map<std::tuple<int, int, int>, int> nmap;  // (i, eps, j) -> gen index
  std::map<std::pair<int, int>, int> pmap;        // (min, max) -> gen index
  std::map<int, int> imap;

  int N(int i, int eps, int j) const { return nmap.at({i, eps, j}); }
  int P(int i, int j) const {
    return pmap.at({std::min(i, j), std::max(i, j)});
  }
  int I(int i) const { return imap.at(i); }

  // The transvection moving x_i^s across x_j^t, as a single generator
  // letter: first-slot sign picks the side, second-slot sign the power.
  Word E(int i, int s, int j, int t) const { return Word::gen(N(i, s, j), t); }
};

Word cm(const Word& a, const Word& b) {
  return a * b * a.inverse() * b.inverse();
}

AutfkData build_autfk(int k) {
  AutfkData d;
  d.k = k;
  auto add = [&](std::string name, std::vector<Word> im) {
    d.names.push_back(std::move(name));
    d.realization.emplace_back(k, std::move(im));
    return static_cast<int>(d.names.size()) - 1;
  };
  auto ident = [&] {
    std::vector<Word> im;
    for (int g = 0; g < k; ++g) im.push_back(Word::gen(g));
    return im;
  };
  for (int i = 1; i <= k; ++i)
    for (int eps : {+1, -1})
      for (int j = 1; j <= k; ++j) {
        if (j == i) continue;
        auto im = ident();
        im[i - 1] = eps > 0 ? Word::gen(i - 1) * Word::gen(j - 1)
                            : Word::gen(j - 1, -1) * Word::gen(i - 1);
        std::string nm = "(c" + std::to_string(i) + (eps > 0 ? "^+;c" : "^-;c") +
                         std::to_string(j) + ")";
        d.nmap[{i, eps, j}] = add(std::move(nm), std::move(im));
      }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      auto im = ident();
      std::swap(im[i - 1], im[j - 1]);
      d.pmap[{i, j}] =
          add("P_" + std::to_string(i) + "_" + std::to_string(j), std::move(im));
    }
  for (int i = 1; i <= k; ++i) {
    auto im = ident();
    im[i - 1] = im[i - 1].inverse();
    d.imap[i] = add("I_" + std::to_string(i), std::move(im));
  }
  return d;
}

std::vector<Word> autfk_relators(const AutfkData& d) {
  const int k = d.k;
  std::vector<Word> rel;
  auto P = [&](int i, int j) { return Word::gen(d.P(i, j)); };
  auto I = [&](int i) { return Word::gen(d.I(i)); };
  auto N = [&](int i, int eps, int j) { return Word::gen(d.N(i, eps, j)); };

  // Swap and inversion relations: the signed-permutation block.
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) rel.push_back(P(i, j) * P(i, j));
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      for (int p = i; p <= k; ++p)
        for (int q = p + 1; q <= k; ++q) {
          if (std::make_pair(p, q) <= std::make_pair(i, j)) continue;
          if (p == i || p == j || q == i || q == j) continue;
          rel.push_back(cm(P(i, j), P(p, q)));
        }
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      for (int l = 1; l <= k; ++l) {
        if (i == j || j == l || i == l) continue;
        rel.push_back(P(i, j) * P(j, l) * P(i, j) * P(i, l).inverse());
      }
  for (int i = 1; i <= k; ++i) rel.push_back(I(i) * I(i));
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) rel.push_back(cm(I(i), I(j)));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      if (i == j) continue;
      rel.push_back(P(i, j) * I(i) * P(i, j).inverse() * I(j).inverse());
    }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      for (int m = 1; m <= k; ++m) {
        if (m == i || m == j) continue;
        rel.push_back(cm(P(i, j), I(m)));
      }

  // How the signed-permutation block moves transvections around.
  for (const auto& [pk, pg] : d.pmap) {
    auto [pi, pj] = pk;
    auto sigma = [&](int t) { return t == pi ? pj : (t == pj ? pi : t); };
    for (const auto& [nk, ng] : d.nmap) {
      auto [a, eps, b] = nk;
      rel.push_back(Word::gen(pg) * Word::gen(ng) * Word::gen(pg, -1) *
                    Word::gen(d.N(sigma(a), eps, sigma(b)), -1));
    }
  }
  for (const auto& [m, ig] : d.imap)
    for (const auto& [nk, ng] : d.nmap) {
      auto [a, eps, b] = nk;
      if (m == a)
        rel.push_back(Word::gen(ig) * Word::gen(ng) * Word::gen(ig, -1) *
                      Word::gen(d.N(a, -eps, b), -1));
      else if (m == b)
        rel.push_back(Word::gen(ig) * Word::gen(ng) * Word::gen(ig, -1) *
                      Word::gen(ng));
      else
        rel.push_back(cm(Word::gen(ig), Word::gen(ng)));
    }

  // Commuting transvections, enumerated over signed-letter pairs.
  struct ELetter {
    int i, s, j, t;
  };
  std::vector<ELetter> letters;
  for (int i = 1; i <= k; ++i)
    for (int s : {+1, -1})
      for (int j = 1; j <= k; ++j) {
        if (j == i) continue;
        for (int t : {+1, -1}) letters.push_back({i, s, j, t});
      }
  for (size_t p = 0; p < letters.size(); ++p)
    for (size_t q = p + 1; q < letters.size(); ++q) {
      const auto& a = letters[p];
      const auto& b = letters[q];
      bool same_base = a.i == b.i && a.s != b.s;
      bool disjoint = a.i != b.i && a.j != b.i && b.j != a.i;
      if (!(same_base || disjoint)) continue;
      rel.push_back(cm(d.E(a.i, a.s, a.j, a.t), d.E(b.i, b.s, b.j, b.t)));
    }

  // Composition of transvections along three distinct strands.
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      for (int l = 1; l <= k; ++l) {
        if (i == j || j == l || i == l) continue;
        for (int s : {+1, -1})
          for (int t : {+1, -1})
            for (int u : {+1, -1}) {
              Word ab = d.E(i, s, j, t);
              Word bc = d.E(j, t, l, u);
              Word ac = d.E(i, s, l, u);
              rel.push_back(ab.inverse() * bc * ab * bc.inverse() *
                            ac.inverse());
            }
      }

  // Expressing the half-turn I_i P_ij by transvections ties the two blocks
  // together.
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      if (i == j) continue;
      Word w = N(j, +1, i) * N(j, -1, i) * N(i, +1, j) *
               N(j, +1, i).inverse() * N(i, +1, j);
      rel.push_back(I(i) * P(i, j) * w.inverse());
    }

  return rel;
}

}  // namespace

FinitePresentation autfk_presentation(int k) {
  if (k < 0) throw Error("autfk_presentation: negative rank");
  auto d = build_autfk(k);
  FinitePresentation p{Basis(d.names), autfk_relators(d)};
  auto ops = aut_group_ops(k);
  for (const auto& r : p.relators)
    if (!ops.eq(eval_word(ops, d.realization, r), ops.identity()))
      throw Error("autfk_presentation: relator fails as an identity: " +
                  r.str(p.generators));
  AbelianInvariants expect;
  if (k == 0)
    expect = {0, {}};
  else if (k == 2)
    expect = {0, {2, 2}};
  else
    expect = {0, {2}};
  auto got = abelianisation(p);
  if (!(got == expect))
    throw Error("autfk_presentation: abelianisation came out as " + got.str() +
                ", wanted " + expect.str());
  return p;
}

std::vector<FreeAutomorphism> autfk_realization(int k) {
  if (k < 0) throw Error("autfk_realization: negative rank");
  return build_autfk(k).realization;
}

}  // namespace dtwist
