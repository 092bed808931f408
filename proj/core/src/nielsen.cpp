#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dtwist/efficiency.hpp"
#include "dtwist/errors.hpp"
#include "dtwist/nielsen.hpp"
#include "dtwist/presentation.hpp"
#include "dtwist/ses.hpp"

namespace dtwist {

namespace {

// Both generator catalogues use slot indices 0 (the conjugating slot), 1 (b)
// and 1+i (c_i).  In the vertex group the slot index is also the generator
// index (B = 0); in the ambient group slot 0 stands for the word a b a^-1.

std::string slot_name(bool ambient, int z) {
  if (z == 0) return ambient ? "aba^-1" : "B";
  if (z == 1) return "b";
  return "c" + std::to_string(z - 1);
}

std::string sym_name(bool ambient, int base, int dec, int z) {
  std::string s = slot_name(ambient, z);
  if (base >= 2) {
    return "(c" + std::to_string(base - 1) + (dec > 0 ? "^+;" : "^-;") + s +
           ")";
  }
  if (base == 0) return ambient ? "(a^-1;" + s + ")" : "(B^~;" + s + ")";
  return ambient ? "gamma[" + s + "]" : "(b^~;" + s + ")";
}

std::string p_name(int i, int j) {
  return "P_" + std::to_string(std::min(i, j)) + "_" +
         std::to_string(std::max(i, j));
}

std::string i_name(int i) { return "I_" + std::to_string(i); }

struct GenTable {
  int n = 0;
  bool ambient = false;
  std::vector<std::string> names;
  std::vector<FreeAutomorphism> realization;
  std::map<std::string, int> index;

  int add(std::string name, std::vector<Word> im) {
    int id = static_cast<int>(names.size());
    index[name] = id;
    names.push_back(std::move(name));
    realization.emplace_back(n, std::move(im));
    return id;
  }
  int at(const std::string& name) const {
    auto it = index.find(name);
    if (it == index.end()) throw Error("no generator named " + name);
    return it->second;
  }
};

std::vector<Word> ident_images(int n) {
  std::vector<Word> im;
  for (int g = 0; g < n; ++g) im.push_back(Word::gen(g));
  return im;
}

Word slot_word(const GenTable& t, int z) {
  if (t.ambient && z == 0)
    return Word::gen(0) * Word::gen(1) * Word::gen(0, -1);
  return Word::gen(z);
}

std::vector<Word> sym_images(const GenTable& t, int base, int dec, int z) {
  auto im = ident_images(t.n);
  Word zw = slot_word(t, z);
  if (base >= 2) {
    im[base] = dec > 0 ? im[base] * zw : zw.inverse() * im[base];
    return im;
  }
  if (!t.ambient) {
    im[base] = zw.inverse() * im[base] * zw;
    return im;
  }
  if (base == 0) {
    im[0] = zw.inverse() * im[0];  // a -> z^-1 a
    return im;
  }
  im[0] = im[0] * zw;              // a -> a z
  im[1] = zw.inverse() * im[1] * zw;
  return im;
}

void add_symbol_blocks(GenTable& t) {
  const int m = t.n - 2;
  for (int i = 1; i <= m; ++i)
    for (int eps : {+1, -1})
      for (int j = 1; j <= m; ++j) {
        if (j == i) continue;
        t.add(sym_name(t.ambient, 1 + i, eps, 1 + j),
              sym_images(t, 1 + i, eps, 1 + j));
      }
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      auto im = ident_images(t.n);
      std::swap(im[1 + i], im[1 + j]);
      t.add(p_name(i, j), std::move(im));
    }
  for (int i = 1; i <= m; ++i) {
    auto im = ident_images(t.n);
    im[1 + i] = im[1 + i].inverse();
    t.add(i_name(i), std::move(im));
  }
  for (int i = 1; i <= m; ++i)
    for (int eps : {+1, -1})
      for (int y : {0, 1})
        t.add(sym_name(t.ambient, 1 + i, eps, y), sym_images(t, 1 + i, eps, y));
  t.add(sym_name(t.ambient, 0, 0, 1), sym_images(t, 0, 0, 1));
  for (int j = 1; j <= m; ++j)
    t.add(sym_name(t.ambient, 0, 0, 1 + j), sym_images(t, 0, 0, 1 + j));
  t.add(sym_name(t.ambient, 1, 0, 0), sym_images(t, 1, 0, 0));
  for (int j = 1; j <= m; ++j)
    t.add(sym_name(t.ambient, 1, 0, 1 + j), sym_images(t, 1, 0, 1 + j));
}

GenTable make_table(int n, bool ambient) {
  if (n < 2) throw Error("generator catalogue needs ambient rank at least 2");
  GenTable t;
  t.n = n;
  t.ambient = ambient;
  if (ambient) {
    auto im = ident_images(n);
    im[0] = Word::gen(0) * Word::gen(1);
    t.add("rho", std::move(im));
  }
  add_symbol_blocks(t);
  if (ambient) {
    auto im = ident_images(n);
    im[0] = Word::gen(0, -1);
    im[1] = Word::gen(0) * Word::gen(1, -1) * Word::gen(0, -1);
    t.add("theta", std::move(im));
  }
  return t;
}

struct Sym {
  int base;
  int dec;
};

std::vector<Sym> all_syms(int n) {
  std::vector<Sym> v;
  for (int i = 1; i <= n - 2; ++i) {
    v.push_back({1 + i, +1});
    v.push_back({1 + i, -1});
  }
  v.push_back({0, 0});
  v.push_back({1, 0});
  return v;
}

Word cm(const Word& a, const Word& b) {
  return a * b * a.inverse() * b.inverse();
}

// The commutation, intertwining and decomposition relations among the
// decorated symbols, P and I; one shared shape catalogue serves both the
// vertex-group and the ambient-group flavor, with family labels Q... for the
// former and R... for the latter and with rho inserted where the ambient
// realization produces it.
std::vector<TaggedRelator> symbol_relators(const GenTable& t) {
  const int n = t.n;
  const int m = n - 2;
  const bool mir = t.ambient;
  std::vector<TaggedRelator> out;

  auto idx = [&](int base, int dec, int z) {
    return t.at(sym_name(t.ambient, base, dec, z));
  };
  auto S = [&](int base, int dec, int z, int sgn = 1) {
    return Word::gen(idx(base, dec, z), sgn);
  };
  auto P = [&](int i, int j, int sgn = 1) {
    return Word::gen(t.at(p_name(i, j)), sgn);
  };
  auto I = [&](int i, int sgn = 1) {
    return Word::gen(t.at(i_name(i)), sgn);
  };
  auto push = [&](std::string f, Word w) {
    out.push_back({std::move(f), std::move(w)});
  };
  auto nm = [&](int base, int dec, int z) {
    return sym_name(t.ambient, base, dec, z);
  };
  const auto syms = all_syms(n);

  // c-against-c block imported whole.
  {
    auto sub = autfk_presentation(m);
    std::vector<int> remap(static_cast<size_t>(sub.generators.rank()));
    for (int i = 0; i < sub.generators.rank(); ++i)
      remap[static_cast<size_t>(i)] = t.at(sub.generators.name(i));
    int k = 0;
    for (const auto& r : sub.relators) {
      std::vector<Letter> raw;
      for (Letter l : r.letters())
        raw.push_back(make_letter(remap[static_cast<size_t>(gen_of(l))],
                                  sign_of(l)));
      push((mir ? std::string("R1[") : std::string("Q1[")) +
               std::to_string(k++) + "]",
           Word::reduce(raw));
    }
  }

  // Distinct decorated symbols commute whenever neither slot touches the
  // other symbol's base.
  for (size_t p = 0; p < syms.size(); ++p)
    for (size_t q = p + 1; q < syms.size(); ++q) {
      const Sym w1 = syms[p];
      const Sym w2 = syms[q];
      for (int z1 = 0; z1 < n; ++z1) {
        if (z1 == w1.base || z1 == w2.base) continue;
        for (int z2 = 0; z2 < n; ++z2) {
          if (z2 == w1.base || z2 == w2.base) continue;
          push((mir ? "R2[" : "Q2[") + nm(w1.base, w1.dec, z1) + "," +
                   nm(w2.base, w2.dec, z2) + "]",
               cm(S(w1.base, w1.dec, z1), S(w2.base, w2.dec, z2)));
        }
      }
    }

  // P and I permute the c slot of a two-sided symbol.
  for (int y : {0, 1}) {
    for (int j = 1; j <= m; ++j)
      for (int l = 1; l <= m; ++l) {
        if (l == j) continue;
        const char* f = mir ? (y == 0 ? "R3.1[" : "R3.3[") : "Q3.1[";
        push(f + nm(y, 0, 1 + j) + "," + p_name(j, l) + "]",
             S(y, 0, 1 + j) * P(j, l) * S(y, 0, 1 + l, -1) * P(j, l, -1));
      }
    for (int j = 1; j <= m; ++j) {
      const char* f = mir ? (y == 0 ? "R3.2[" : "R3.4[") : "Q3.2[";
      push(f + nm(y, 0, 1 + j) + "]",
           S(y, 0, 1 + j) * I(j) * S(y, 0, 1 + j) * I(j, -1));
    }
  }

  // P and I do not see the two distinguished slots.
  {
    std::vector<Word> xs;
    std::vector<std::string> xn;
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) {
        xs.push_back(P(i, j));
        xn.push_back(p_name(i, j));
      }
    for (int i = 1; i <= m; ++i) {
      xs.push_back(I(i));
      xn.push_back(i_name(i));
    }
    for (size_t x = 0; x < xs.size(); ++x)
      for (int y : {0, 1}) {
        const char* f = mir ? "R3.5[" : "Q3.3[";
        push(f + xn[x] + "," + nm(y, 0, 1 - y) + "]",
             cm(xs[x], S(y, 0, 1 - y)));
      }
  }

  // P and I permute the base of a one-sided symbol over a distinguished
  // slot.
  for (int j = 1; j <= m; ++j)
    for (int l = 1; l <= m; ++l) {
      if (l == j) continue;
      for (int eps : {+1, -1})
        for (int y : {0, 1}) {
          const char* f = mir ? "R3.6[" : "Q3.4[";
          push(f + nm(1 + j, eps, y) + "," + p_name(j, l) + "]",
               S(1 + j, eps, y) * P(j, l) * S(1 + l, eps, y, -1) * P(j, l, -1));
        }
    }
  for (int j = 1; j <= m; ++j)
    for (int y : {0, 1}) {
      const char* f = mir ? "R3.7[" : "Q3.5[";
      push(f + nm(1 + j, +1, y) + "]",
           S(1 + j, +1, y) * I(j) * S(1 + j, -1, y, -1) * I(j, -1));
    }

  // Conjugating a one-sided c symbol by a symbol with slot c_j splits off
  // the same symbol over the conjugator's slot.
  for (int j = 1; j <= m; ++j)
    for (int eta : {+1, -1})
      for (const Sym& w : syms) {
        if (w.base == 1 + j) continue;
        for (int z = 0; z < n; ++z) {
          if (z == 1 + j || z == w.base) continue;
          const char* f = mir ? "R4.1[" : "Q4.1[";
          push(f + nm(w.base, w.dec, 1 + j) + "," + nm(1 + j, eta, z) + "]",
               S(w.base, w.dec, 1 + j, -eta) * S(1 + j, eta, z) *
                   S(w.base, w.dec, 1 + j, eta) * S(1 + j, eta, z, -1) *
                   S(w.base, w.dec, z, -1));
        }
      }

  // Conjugating by a two-sided symbol twists a symbol over that slot.
  for (int i : {0, 1})
    for (const Sym& w : syms) {
      if (w.base == i) continue;
      for (int z = 0; z < n; ++z) {
        if (z == i || z == w.base) continue;
        for (int eps : {+1, -1}) {
          const char* f = mir ? (i == 0 ? "R4.2[" : "R4.3[") : "Q4.2[";
          push(f + nm(i, 0, z) + "," + nm(w.base, w.dec, i) + "]",
               S(i, 0, z, -eps) * S(w.base, w.dec, i) * S(i, 0, z, eps) *
                   S(w.base, w.dec, z, eps) * S(w.base, w.dec, i, -1) *
                   S(w.base, w.dec, z, -eps));
        }
      }
    }

  // The two decorations of a c symbol over a distinguished slot are
  // intertwined by the matching two-sided symbol; in the ambient flavor the
  // twist a -> ab surfaces here.
  for (int j = 1; j <= m; ++j)
    for (int i : {0, 1})
      for (int eta : {+1, -1}) {
        Word w = S(1 + j, -eta, i) * S(i, 0, 1 + j, eta);
        if (mir) w = w * Word::gen(t.at("rho"), i == 0 ? -1 : +1);
        w = w * S(1 + j, eta, i) * S(i, 0, 1 + j, -eta);
        const char* f = mir ? (i == 0 ? "R5.1[" : "R5.2[") : "Q5[";
        push(f + nm(1 + j, eta, i) + "," + nm(i, 0, 1 + j) + "]",
             std::move(w));
      }

  return out;
}

// The ambient-only relations: rho is central, theta is an involution, and
// conjugation by theta folds the catalogue onto itself.
std::vector<TaggedRelator> ambient_extra_relators(const GenTable& t) {
  const int m = t.n - 2;
  std::vector<TaggedRelator> out;
  auto push = [&](std::string f, Word w) {
    out.push_back({std::move(f), std::move(w)});
  };
  const Word rho = Word::gen(t.at("rho"));
  const Word th = Word::gen(t.at("theta"));
  const Word thi = Word::gen(t.at("theta"), -1);
  auto S = [&](int base, int dec, int z, int sgn = 1) {
    return Word::gen(t.at(sym_name(true, base, dec, z)), sgn);
  };

  for (size_t g = 0; g < t.names.size(); ++g) {
    if (t.names[g] == "rho") continue;
    push("R6[" + t.names[g] + "]", cm(rho, Word::gen(static_cast<int>(g))));
  }
  push("R7[theta]", th * th);

  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      push("R8.1[" + p_name(i, j) + "]",
           cm(th, Word::gen(t.at(p_name(i, j)))));
  for (int i = 1; i <= m; ++i)
    push("R8.2[" + i_name(i) + "]", cm(th, Word::gen(t.at(i_name(i)))));
  for (int i = 1; i <= m; ++i)
    for (int eps : {+1, -1})
      for (int j = 1; j <= m; ++j) {
        if (j == i) continue;
        push("R8.3[" + sym_name(true, 1 + i, eps, 1 + j) + "]",
             cm(th, S(1 + i, eps, 1 + j)));
      }
  for (int i = 1; i <= m; ++i)
    for (int eps : {+1, -1})
      push("R8.4[" + sym_name(true, 1 + i, eps, 0) + "]",
           th * S(1 + i, eps, 0) * thi * S(1 + i, eps, 1));
  for (int i = 1; i <= m; ++i)
    push("R8.5[gamma[c" + std::to_string(i) + "]]",
         th * S(1, 0, 1 + i) * thi * S(0, 0, 1 + i, -1));
  push("R8.6[gamma[aba^-1]]", th * S(1, 0, 0) * thi * S(0, 0, 1));

  return out;
}

void verify_identity_relators(const GenTable& t,
                              const std::vector<TaggedRelator>& rels) {
  auto ops = aut_group_ops(t.n);
  for (const auto& r : rels)
    if (!ops.eq(eval_word(ops, t.realization, r.relator), ops.identity()))
      throw Error(r.family + " does not hold as an automorphism identity");
}

PresentedAutGroup finish(GenTable t, std::vector<TaggedRelator> rels) {
  verify_identity_relators(t, rels);
  PresentedAutGroup g;
  g.pres.generators = Basis(t.names);
  for (const auto& r : rels) g.pres.relators.push_back(r.relator);
  g.realization = std::move(t.realization);
  g.tagged = std::move(rels);
  return g;
}

}  // namespace

bool symbol_admissible(int n, int base, int dec, int z) {
  if (n < 2) return false;
  if (base < 0 || base >= n || z < 0 || z >= n || z == base) return false;
  if (base <= 1) return dec == 0;
  return dec == 1 || dec == -1;
}

PresentedAutGroup jw_presentation(int n) {
  auto t = make_table(n, false);
  auto rels = symbol_relators(t);
  return finish(std::move(t), std::move(rels));
}

PresentedAutGroup theorem_presentation(int n) {
  auto t = make_table(n, true);
  auto rels = symbol_relators(t);
  auto extra = ambient_extra_relators(t);
  rels.insert(rels.end(), std::make_move_iterator(extra.begin()),
              std::make_move_iterator(extra.end()));
  return finish(std::move(t), std::move(rels));
}

const FreeAutomorphism& NielsenContext::by_name(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return images[i];
  throw Error("no catalogue generator named " + name);
}

NielsenContext build_context(int n) {
  if (n < 2) throw Error("build_context: ambient rank must be at least 2");
  NielsenContext ctx;
  ctx.n = n;
  std::vector<std::string> an{"a", "b"};
  std::vector<std::string> vn{"B", "b"};
  for (int i = 1; i <= n - 2; ++i) {
    an.push_back("c" + std::to_string(i));
    vn.push_back("c" + std::to_string(i));
  }
  ctx.ambient = Basis(an);
  ctx.vertex = Basis(vn);
  auto t = make_table(n, true);
  ctx.names = t.names;
  ctx.images = t.realization;
  ctx.rho = ctx.by_name("rho");
  ctx.theta = ctx.by_name("theta");
  for (size_t i = 0; i < ctx.images.size(); ++i) {
    const auto& f = ctx.images[i];
    if (!(compose(f, ctx.rho) == compose(ctx.rho, f)))
      throw Error("catalogue entry " + ctx.names[i] +
                  " does not commute with rho");
    invert(f);  // throws NotAnAutomorphism on a bad entry
  }
  if (!compose(ctx.theta, ctx.theta).is_identity())
    throw Error("theta is not an involution");
  return ctx;
}

std::optional<long> rho_exponent(const FreeAutomorphism& f) {
  const int r = f.rank();
  if (r < 2) return std::nullopt;
  for (int i = 1; i < r; ++i)
    if (!(f.image(i) == Word::gen(i))) return std::nullopt;
  const Word& w = f.image(0);
  if (w.empty() || w.letter(0) != make_letter(0, 1)) return std::nullopt;
  long k = 0;
  int dir = 0;
  for (int p = 1; p < w.length(); ++p) {
    Letter l = w.letter(p);
    if (gen_of(l) != 1) return std::nullopt;
    int s = sign_of(l);
    if (dir == 0) dir = s;
    if (s != dir) return std::nullopt;
    k += s;
  }
  return k;
}

CentraliserData assemble_centraliser(int n) {
  auto jw = jw_presentation(n);
  auto t = make_table(n, true);
  const int nj = jw.pres.generators.rank();
  auto ops = aut_group_ops(n);

  // Kernel <rho> extended by the vertex-symbol group; the ambient lifts are
  // the catalogue entries in the same block order.
  SesData<FreeAutomorphism> s3;
  s3.a_pres = FinitePresentation{Basis(std::vector<std::string>{"rho"}), {}};
  s3.a_images = {t.realization[static_cast<size_t>(t.at("rho"))]};
  s3.c_pres = jw.pres;
  s3.c_lifts.assign(t.realization.begin() + 1, t.realization.begin() + 1 + nj);
  s3.ops = ops;
  s3.express_in_a = [](const FreeAutomorphism& f) -> std::optional<Word> {
    auto k = rho_exponent(f);
    if (!k) return std::nullopt;
    return Word::gen(0).pow(*k);
  };
  s3.c_names.assign(t.names.begin() + 1, t.names.begin() + 1 + nj);
  auto step3 = ses_assemble(s3);
  std::vector<FreeAutomorphism> mid(t.realization.begin(),
                                    t.realization.begin() + 1 + nj);

  // Extend once more by the order-two graph symmetry.
  SesData<FreeAutomorphism> s5;
  s5.a_pres = step3;
  s5.a_images = mid;
  s5.c_pres = FinitePresentation{Basis(std::vector<std::string>{"theta"}),
                                 {Word::gen(0).pow(2)}};
  s5.c_lifts = {t.realization.back()};
  s5.ops = ops;
  s5.express_in_a = make_search_oracle(1 + nj, mid, ops, 2);
  auto pres = ses_assemble(s5);

  return {std::move(pres), std::move(t.realization)};
}

GraphImage graph_image(int n) {
  auto ng = nielsen_gog(n);
  auto ctx = build_context(n);
  GraphImage out;
  const OrientedEdge ep{0, false};
  const OrientedEdge em{0, true};
  Word zp = ng.graph.image(ep).pow(twistor_exponent(ng.twist, ep));
  Word zm = ng.graph.image(em).pow(twistor_exponent(ng.twist, em));
  ClassTuple fwd{n, {ConjClass(zp), ConjClass(zm)}};
  ClassTuple swp{n, {ConjClass(zm), ConjClass(zp)}};
  auto phi = are_equivalent(fwd, swp);
  if (!phi) return out;  // only the identity symmetry remains
  out.order = 2;
  out.swap_witness = *phi;

  GogAutomorphism h;
  h.vmap = {0};
  h.emap = {OrientedEdge{0, true}};
  h.eps = {-1};
  std::vector<Word> vim = ident_images(n);
  vim[0] = Word::gen(1, -1);
  vim[1] = Word::gen(0, -1);
  h.vertex_aut = {FreeAutomorphism(n, std::move(vim))};
  h.delta = {{Word(), Word()}};
  check_gog_automorphism(ng.graph, h);
  if (!preserves_twistors(h, ng.twist))
    throw Error("graph_image: the edge reversal breaks the twist data");
  out.swap = h;
  out.induced = induced_automorphism(ng.graph, h, ng.pi1);
  if (!(out.induced == ctx.theta))
    throw Error("graph_image: the reversal does not induce theta");
  return out;
}

AbelianInvariants expected_centraliser_h1(int n) {
  if (n < 2) throw Error("expected_centraliser_h1: rank must be at least 2");
  if (n == 2) return {2, {2}};
  if (n == 3) return {1, {2, 2, 2}};
  if (n == 4) return {0, {2, 2, 2}};
  return {0, {2, 2}};
}

std::vector<CheckReport> verify_all(int n) {
  std::vector<CheckReport> out;
  auto run = [&](const std::string& name,
                 const std::function<std::string()>& body) {
    CheckReport r;
    r.name = name;
    try {
      r.message = body();
      r.pass = true;
    } catch (const std::exception& e) {
      r.pass = false;
      r.message = e.what();
    }
    out.push_back(std::move(r));
  };

  run("catalogue", [&] {
    auto ctx = build_context(n);
    return std::to_string(ctx.images.size()) +
           " generators commute with rho; theta is an involution";
  });
  run("efficient", [&] {
    auto ng = nielsen_gog(n);
    auto v = check_efficient(ng.graph, ng.twist);
    auto vp =
        check_pointedly_efficient(ng.graph, ng.twist, ng.graph.basepoint);
    if (!v.empty()) throw Error("violation: " + violation_str(v.front()));
    if (!vp.empty())
      throw Error("pointed violation: " + violation_str(vp.front()));
    return std::string("no violations, plain or pointed");
  });
  run("induced-rho", [&] {
    auto ng = nielsen_gog(n);
    auto ctx = build_context(n);
    auto tw = dehn_twist(ng.graph, ng.twist);
    auto f = induced_automorphism(ng.graph, tw, ng.pi1);
    if (!(f == ctx.rho))
      throw Error("the twist does not induce rho on the chosen basis");
    return std::string("the twist induces rho on the chosen basis");
  });
  run("vertex-relations", [&] {
    auto jw = jw_presentation(n);
    return std::to_string(jw.pres.generators.rank()) + " generators, " +
           std::to_string(jw.pres.relators.size()) +
           " relators hold as identities";
  });
  run("centraliser-relations", [&] {
    auto th = theorem_presentation(n);
    return std::to_string(th.pres.generators.rank()) + " generators, " +
           std::to_string(th.pres.relators.size()) +
           " relators hold as identities";
  });
  run("assembled", [&] {
    auto c = assemble_centraliser(n);
    return std::to_string(c.pres.generators.rank()) + " generators, " +
           std::to_string(c.pres.relators.size()) +
           " relators, every one verified during assembly";
  });
  run("abelianisation", [&] {
    auto want = expected_centraliser_h1(n);
    auto a = abelianisation(theorem_presentation(n).pres);
    auto b = abelianisation(assemble_centraliser(n).pres);
    if (!(a == want))
      throw Error("direct presentation gives " + a.str() + ", wanted " +
                  want.str());
    if (!(b == want))
      throw Error("assembled presentation gives " + b.str() + ", wanted " +
                  want.str());
    return a.str() + " from both presentations";
  });
  run("rho-class", [&] {
    auto th = theorem_presentation(n);
    auto r = th.pres.generators.index("rho");
    if (!r) throw Error("no rho generator");
    auto cls = class_in_abelianisation(th.pres, Word::gen(*r));
    if (n == 2) {
      BigInt g = 0;
      for (const auto& x : cls.free_coords) g = gcd(g, abs(x));
      if (g != 1)
        throw Error("rho is not primitive in the free part");
      return std::string("free coordinates are coprime");
    }
    if (n == 3) {
      if (cls.free_coords.size() != 1 || abs(cls.free_coords[0]) != 2)
        throw Error("rho is not twice a primitive class");
      for (const auto& tr : cls.torsion)
        if (tr.second != 0) throw Error("rho has a torsion component");
      return std::string("twice a primitive class, no torsion");
    }
    if (!cls.is_zero())
      throw Error("rho is not trivial in the abelianisation");
    return std::string("trivial in the abelianisation");
  });
  run("graph-image", [&] {
    auto gi = graph_image(n);
    if (gi.order != 2) throw Error("expected the full order-two image");
    return std::string("order two, reversal realized and induces theta");
  });
  return out;
}

}  // namespace dtwist
