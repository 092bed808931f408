#include "dtwist/presentation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "dtwist/errors.hpp"

namespace dtwist {

FinitePresentation FinitePresentation::parse(const std::string& text) {
  std::vector<std::string> names;
  std::vector<std::string> relator_texts;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "gen:") {
      std::string name;
      bool any = false;
      while (ls >> name) {
        names.push_back(name);
        any = true;
      }
      if (!any)
        throw ParseError("line " + std::to_string(lineno) +
                         ": gen: needs at least one name");
    } else if (head == "rel:") {
      std::string rest, tok;
      while (ls >> tok) {
        if (!rest.empty()) rest += ' ';
        rest += tok;
      }
      relator_texts.push_back(rest);
    } else {
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected 'gen:' or 'rel:', got '" + head + "'");
    }
  }
  FinitePresentation p;
  p.generators = Basis(names);
  for (const std::string& t : relator_texts)
    p.relators.push_back(Word::parse(p.generators, t));
  return p;
}

std::string FinitePresentation::str() const {
  std::string out;
  for (const std::string& n : generators.names()) out += "gen: " + n + "\n";
  for (const Word& r : relators) out += "rel: " + r.str(generators) + "\n";
  return out;
}

IntMatrix relation_matrix(const FinitePresentation& p) {
  IntMatrix m(static_cast<int>(p.relators.size()), p.generators.rank());
  for (size_t r = 0; r < p.relators.size(); ++r)
    for (Letter l : p.relators[r].letters())
      m.at(static_cast<int>(r), gen_of(l)) += sign_of(l);
  return m;
}

std::string AbelianInvariants::str() const {
  std::vector<std::string> parts;
  if (free_rank == 1) {
    parts.push_back("Z");
  } else if (free_rank > 1) {
    parts.push_back("Z^" + std::to_string(free_rank));
  }
  // group equal torsion factors: Z/2 x Z/2 x Z/2 prints as (Z/2)^3
  for (size_t i = 0; i < torsion.size();) {
    size_t j = i;
    while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
    const std::string base = "Z/" + torsion[i].str();
    if (j - i == 1)
      parts.push_back(base);
    else
      parts.push_back("(" + base + ")^" + std::to_string(j - i));
    i = j;
  }
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
  return out;
}

AbelianInvariants abelianisation(const FinitePresentation& p) {
  const SmithResult s = smith_normal_form(relation_matrix(p));
  AbelianInvariants inv;
  int nonzero = 0;
  for (const BigInt& d : s.diagonal) {
    if (d == 0) continue;
    ++nonzero;
    if (d >= 2) inv.torsion.push_back(d);
  }
  inv.free_rank = p.generators.rank() - nonzero;
  return inv;
}

bool AbelianClass::is_zero() const {
  for (const BigInt& c : free_coords)
    if (c != 0) return false;
  for (const auto& [mod, res] : torsion)
    if (res != 0) return false;
  return true;
}

AbelianClass class_in_abelianisation(const FinitePresentation& p,
                                     const Word& w) {
  if (w.min_rank() > p.generators.rank())
    throw Error("class_in_abelianisation: word outside the generator basis");
  const int g = p.generators.rank();
  const SmithResult s = smith_normal_form(relation_matrix(p));

  std::vector<BigInt> x(g);
  for (Letter l : w.letters()) x[gen_of(l)] += sign_of(l);
  // coordinates in the SNF-adapted generator basis: y = x * v
  std::vector<BigInt> y(g);
  for (int j = 0; j < g; ++j)
    for (int i = 0; i < g; ++i) y[j] += x[i] * s.v.at(i, j);

  AbelianClass out;
  const int diag = static_cast<int>(s.diagonal.size());
  for (int j = 0; j < g; ++j) {
    const BigInt mod = j < diag ? s.diagonal[j] : BigInt(0);
    if (mod == 0) {
      out.free_coords.push_back(y[j]);
    } else if (mod >= 2) {
      BigInt r = y[j] % mod;
      if (r < 0) r += mod;
      out.torsion.emplace_back(mod, r);
    }
    // mod == 1: the coordinate dies
  }
  return out;
}

namespace {

// Replaces generator k by the word rep (expressed without generator k) and
// shifts every generator index above k down by one.
Word substitute_and_drop(const Word& w, int k, const Word& rep) {
  std::vector<Letter> raw;
  for (Letter l : w.letters()) {
    if (gen_of(l) == k) {
      const Word piece = l > 0 ? rep : rep.inverse();
      for (Letter m : piece.letters()) raw.push_back(m);
    } else {
      raw.push_back(l);
    }
  }
  for (Letter& l : raw) {
    const int gidx = gen_of(l);
    if (gidx > k) l = make_letter(gidx - 1, sign_of(l));
  }
  return Word::reduce(raw);
}

void clean_relators(std::vector<Word>& rels) {
  std::erase_if(rels, [](const Word& w) { return w.empty(); });
  std::vector<Word> kept;
  std::vector<Word> seen;
  for (const Word& r : rels) {
    const Word key = std::min(r, r.inverse());
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    kept.push_back(r);
  }
  rels = std::move(kept);
}

}  // namespace

FinitePresentation tietze_simplify(const FinitePresentation& p) {
  const AbelianInvariants before = abelianisation(p);

  std::vector<std::string> names = p.generators.names();
  std::vector<Word> rels = p.relators;
  clean_relators(rels);

  for (;;) {
    // find a generator occurring exactly once in some relator, preferring the
    // shortest such relator so substitutions stay small
    int best_rel = -1, best_gen = -1, best_pos = -1;
    for (size_t r = 0; r < rels.size(); ++r) {
      if (best_rel >= 0 && rels[r].length() >= rels[best_rel].length())
        continue;
      std::map<int, int> count;
      for (Letter l : rels[r].letters()) ++count[gen_of(l)];
      for (int pos = 0; pos < rels[r].length(); ++pos) {
        const int gidx = gen_of(rels[r].letter(pos));
        if (count[gidx] == 1) {
          best_rel = static_cast<int>(r);
          best_gen = gidx;
          best_pos = pos;
          break;
        }
      }
    }
    if (best_rel < 0) break;

    const Word& r = rels[best_rel];
    const int s = sign_of(r.letter(best_pos));
    std::vector<Letter> u(r.letters().begin(),
                          r.letters().begin() + best_pos);
    std::vector<Letter> v(r.letters().begin() + best_pos + 1,
                          r.letters().end());
    const Word wu = Word::reduce(u), wv = Word::reduce(v);
    // u g v = 1 gives g = u^-1 v^-1; u g^-1 v = 1 gives g = v u
    const Word rep =
        s > 0 ? wu.inverse() * wv.inverse() : wv * wu;

    rels.erase(rels.begin() + best_rel);
    for (Word& other : rels) other = substitute_and_drop(other, best_gen, rep);
    names.erase(names.begin() + best_gen);
    clean_relators(rels);
  }

  FinitePresentation out;
  out.generators = Basis(names);
  out.relators = std::move(rels);
  if (!(abelianisation(out) == before))
    throw Error("tietze_simplify changed the abelianisation");
  return out;
}

}  // namespace dtwist
