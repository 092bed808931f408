#include "dtwist/automorphism.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace dtwist {

FreeAutomorphism FreeAutomorphism::identity(int rank) {
  std::vector<Word> im;
  im.reserve(rank);
  for (int i = 0; i < rank; ++i) im.push_back(Word::gen(i));
  return FreeAutomorphism(rank, std::move(im));
}

FreeAutomorphism::FreeAutomorphism(int rank, std::vector<Word> images)
    : rank_(rank), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != rank)
    throw Error("automorphism: image count != rank");
  for (const Word& w : images_)
    if (w.min_rank() > rank) throw Error("automorphism: image uses letters beyond rank");
}

bool FreeAutomorphism::is_identity() const {
  for (int i = 0; i < rank_; ++i)
    if (images_[i] != Word::gen(i)) return false;
  return true;
}

std::string FreeAutomorphism::str(const Basis& b) const {
  std::string out;
  for (int i = 0; i < rank_; ++i) {
    out += b.name(i);
    out += " -> ";
    out += images_[i].str(b);
    out += '\n';
  }
  return out;
}

FreeAutomorphism FreeAutomorphism::parse(const Basis& b, const std::string& text) {
  std::vector<Word> images(b.rank());
  std::vector<bool> seen(b.rank(), false);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto arrow = line.find("->");
    if (arrow == std::string::npos) throw ParseError("automorphism: missing '->' in: " + line);
    std::string name = line.substr(0, arrow);
    name.erase(std::remove_if(name.begin(), name.end(), [](char c) { return c == ' ' || c == '\t'; }),
               name.end());
    auto idx = b.index(name);
    if (!idx) throw ParseError("automorphism: unknown generator '" + name + "'");
    if (seen[*idx]) throw ParseError("automorphism: duplicate image for '" + name + "'");
    seen[*idx] = true;
    images[*idx] = Word::parse(b, line.substr(arrow + 2));
  }
  for (int i = 0; i < b.rank(); ++i)
    if (!seen[i]) throw ParseError("automorphism: no image for '" + b.name(i) + "'");
  return FreeAutomorphism(b.rank(), std::move(images));
}

Word apply(const FreeAutomorphism& f, const Word& w) {
  if (w.min_rank() > f.rank()) throw Error("apply: word uses letters beyond rank");
  Word out;
  for (Letter l : w.letters()) {
    const Word& im = f.image(gen_of(l));
    out = out * (l > 0 ? im : im.inverse());
  }
  return out;
}

FreeAutomorphism compose(const FreeAutomorphism& outer, const FreeAutomorphism& inner) {
  if (outer.rank() != inner.rank()) throw Error("compose: rank mismatch");
  std::vector<Word> im;
  im.reserve(inner.rank());
  for (int i = 0; i < inner.rank(); ++i) im.push_back(apply(outer, inner.image(i)));
  return FreeAutomorphism(inner.rank(), std::move(im));
}

FreeAutomorphism inner_automorphism(int rank, const Word& w) {
  if (w.min_rank() > rank) throw Error("inner_automorphism: word beyond rank");
  std::vector<Word> im;
  im.reserve(rank);
  for (int i = 0; i < rank; ++i) im.push_back(w * Word::gen(i) * w.inverse());
  return FreeAutomorphism(rank, std::move(im));
}

namespace {

// Elementary moves on an image tuple, realized by precomposition. Applying
// the move x_i <- x_i x_j^s to the tuple's expression corresponds to
// replacing u_i by u_i u_j^s.
struct ElemMove {
  int i;        // modified slot
  int j;        // other slot; j == -1 means inversion of slot i
  int s;        // sign of the u_j factor
  bool left;    // multiply on the left instead of the right
};

FreeAutomorphism move_automorphism(int rank, const ElemMove& m) {
  std::vector<Word> im;
  im.reserve(rank);
  for (int g = 0; g < rank; ++g) im.push_back(Word::gen(g));
  if (m.j < 0) {
    im[m.i] = Word::gen(m.i, -1);
  } else {
    Word xj = Word::gen(m.j, m.s);
    im[m.i] = m.left ? xj * Word::gen(m.i) : Word::gen(m.i) * xj;
  }
  return FreeAutomorphism(rank, std::move(im));
}

void apply_move(std::vector<Word>& u, const ElemMove& m) {
  if (m.j < 0) {
    u[m.i] = u[m.i].inverse();
    return;
  }
  Word f = m.s > 0 ? u[m.j] : u[m.j].inverse();
  u[m.i] = m.left ? f * u[m.i] : u[m.i] * f;
}

long total_length(const std::vector<Word>& u) {
  long t = 0;
  for (const Word& w : u) t += w.length();
  return t;
}

// First product move that strictly shortens the tuple, in enumeration order.
std::optional<ElemMove> first_reducing_move(const std::vector<Word>& u) {
  int n = static_cast<int>(u.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int s : {1, -1})
        for (bool left : {false, true}) {
          Word f = s > 0 ? u[j] : u[j].inverse();
          Word cand = left ? f * u[i] : u[i] * f;
          if (cand.length() < u[i].length()) return ElemMove{i, j, s, left};
        }
    }
  return std::nullopt;
}

// Signed permutation check: every generator appears exactly once among the
// single-letter images.
bool is_signed_permutation(const std::vector<Word>& u) {
  int n = static_cast<int>(u.size());
  std::vector<int> used(n, 0);
  for (const Word& w : u) {
    if (w.length() != 1) return false;
    ++used[gen_of(w.letter(0))];
  }
  return std::all_of(used.begin(), used.end(), [](int c) { return c == 1; });
}

std::string tuple_key(const std::vector<Word>& u) {
  std::string k;
  for (const Word& w : u) {
    for (Letter l : w.letters()) {
      k += std::to_string(l);
      k += ',';
    }
    k += ';';
  }
  return k;
}

// Searches the finite component of equal-length tuples reachable by
// length-neutral elementary moves for one that admits a strict reduction.
// An n-element generating tuple that allows no such escape cannot exist:
// a fully Nielsen-reduced n-tuple generating the whole group is a signed
// permutation of the basis, and the reduction process never needs to grow
// the total length.
std::optional<std::vector<ElemMove>> neutral_escape(const std::vector<Word>& start) {
  const long level = total_length(start);
  const int n = static_cast<int>(start.size());
  constexpr int kMaxStates = 200000;

  std::map<std::string, int> visited;
  std::deque<std::pair<std::vector<Word>, std::vector<ElemMove>>> queue;
  visited[tuple_key(start)] = 1;
  queue.push_back({start, {}});

  auto moves_of = [n]() {
    std::vector<ElemMove> ms;
    for (int i = 0; i < n; ++i) ms.push_back(ElemMove{i, -1, 1, false});
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        for (int s : {1, -1})
          for (bool left : {false, true}) ms.push_back(ElemMove{i, j, s, left});
      }
    return ms;
  };
  const std::vector<ElemMove> all_moves = moves_of();

  while (!queue.empty()) {
    auto [u, path] = queue.front();
    queue.pop_front();
    if (first_reducing_move(u) || is_signed_permutation(u)) return path;
    for (const ElemMove& m : all_moves) {
      std::vector<Word> v = u;
      apply_move(v, m);
      if (total_length(v) != level) continue;
      if (std::any_of(v.begin(), v.end(), [](const Word& w) { return w.empty(); })) continue;
      std::string key = tuple_key(v);
      if (visited.count(key)) continue;
      if (static_cast<int>(visited.size()) >= kMaxStates)
        throw Error("invert: neutral-move search exceeded state limit");
      visited[key] = 1;
      auto next = path;
      next.push_back(m);
      queue.push_back({v, next});
    }
  }
  return std::nullopt;
}

} // namespace

FreeAutomorphism invert(const FreeAutomorphism& f) {
  const int n = f.rank();
  std::vector<Word> u = f.images();
  if (std::any_of(u.begin(), u.end(), [](const Word& w) { return w.empty(); }))
    throw NotAnAutomorphism("invert: trivial image");

  // Reduce the image tuple to a signed permutation of the basis, recording
  // the elementary moves. With moves e_1,...,e_t and final signed
  // permutation sigma: f . e_1 . ... . e_t = sigma, so
  // f^-1 = e_1 . ... . e_t . sigma^-1.
  std::vector<ElemMove> recorded;
  while (true) {
    if (auto m = first_reducing_move(u)) {
      apply_move(u, *m);
      if (u[m->i].empty()) throw NotAnAutomorphism("invert: images collapse");
      recorded.push_back(*m);
      continue;
    }
    if (is_signed_permutation(u)) break;
    auto escape = neutral_escape(u);
    if (!escape) throw NotAnAutomorphism("invert: images do not form a basis");
    for (const ElemMove& m : *escape) {
      apply_move(u, m);
      recorded.push_back(m);
    }
    if (is_signed_permutation(u)) break;
    // The escape path ends at a tuple with a strict reduction; loop again.
  }

  // sigma: x_i -> u_i (single letters). sigma^-1: letter u_i -> x_i.
  std::vector<Word> sig_inv(n);
  for (int i = 0; i < n; ++i) {
    Letter l = u[i].letter(0);
    sig_inv[gen_of(l)] = Word::gen(i, sign_of(l));
  }
  FreeAutomorphism acc(n, std::move(sig_inv));
  for (auto it = recorded.rbegin(); it != recorded.rend(); ++it)
    acc = compose(move_automorphism(n, *it), acc);

  FreeAutomorphism check = compose(f, acc);
  if (!check.is_identity()) throw NotAnAutomorphism("invert: verification failed");
  return acc;
}

std::optional<Word> inner_difference(const FreeAutomorphism& f, const FreeAutomorphism& g) {
  if (f.rank() != g.rank()) throw Error("inner_difference: rank mismatch");
  const int n = f.rank();
  if (n < 2) throw Error("inner_difference: rank must be at least 2");
  FreeAutomorphism h = compose(f, invert(g));

  // Solve w x_0 w^-1 = h(x_0): solutions form c<x_0>, since the centralizer
  // of a basis generator is the cyclic group it generates.
  Word x0 = Word::gen(0);
  auto c = are_conjugate(x0, h.image(0));
  if (!c) return std::nullopt;
  long bound = c->length() + h.image(1).length() + 1;
  for (long k = 0; k <= bound; ++k) {
    for (long sk : {k, -k}) {
      Word w = *c * x0.pow(sk);
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        ok = w * Word::gen(i) * w.inverse() == h.image(i);
      if (ok) return w;
      if (k == 0) break;
    }
  }
  return std::nullopt;
}

} // namespace dtwist
