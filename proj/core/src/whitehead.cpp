#include "dtwist/whitehead.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>

#include "dtwist/errors.hpp"

namespace dtwist {

namespace {

std::string images_key(const FreeAutomorphism& f) {
  std::string k;
  for (int i = 0; i < f.rank(); ++i) {
    for (Letter l : f.image(i).letters()) {
      k += std::to_string(l);
      k += ',';
    }
    k += ';';
  }
  return k;
}

void push_type_one(int rank, std::vector<WhiteheadAut>& out) {
  std::vector<int> perm(rank);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (unsigned mask = 0; mask < (1u << rank); ++mask) {
      std::vector<Word> img(rank);
      for (int i = 0; i < rank; ++i)
        img[i] = Word::gen(perm[i], (mask >> i & 1) ? -1 : 1);
      WhiteheadAut w;
      w.kind = WhiteheadAut::Kind::TypeI;
      w.realization = FreeAutomorphism(rank, std::move(img));
      out.push_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

void push_type_two(int rank, std::vector<WhiteheadAut>& out) {
  std::vector<Letter> letters;
  for (int g = 0; g < rank; ++g) {
    letters.push_back(make_letter(g, 1));
    letters.push_back(make_letter(g, -1));
  }
  for (Letter a : letters) {
    std::vector<Letter> others;
    for (Letter l : letters)
      if (gen_of(l) != gen_of(a)) others.push_back(l);
    const unsigned n = static_cast<unsigned>(others.size());
    // mask 0 would be the identity; skip it.
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<Letter> set{a};
      for (unsigned i = 0; i < n; ++i)
        if (mask >> i & 1) set.push_back(others[i]);
      std::sort(set.begin(), set.end(),
                [](Letter x, Letter y) { return letter_key(x) < letter_key(y); });

      auto in_set = [&set](Letter l) {
        return std::find(set.begin(), set.end(), l) != set.end();
      };
      std::vector<Word> img(rank);
      for (int g = 0; g < rank; ++g) {
        const Letter x = make_letter(g, 1);
        if (g == gen_of(a)) {
          img[g] = Word::gen(g, 1);
          continue;
        }
        std::vector<Letter> raw;
        const bool pos = in_set(x), neg = in_set(-x);
        if (neg) raw.push_back(-a);
        raw.push_back(x);
        if (pos) raw.push_back(a);
        img[g] = Word::reduce(raw);
      }
      WhiteheadAut w;
      w.kind = WhiteheadAut::Kind::TypeII;
      w.multiplier = a;
      w.set = std::move(set);
      w.realization = FreeAutomorphism(rank, std::move(img));
      out.push_back(std::move(w));
    }
  }
}

std::string tuple_key(const ClassTuple& t) {
  std::string k;
  for (const ConjClass& c : t.classes) {
    for (Letter l : c.core().letters()) {
      k += std::to_string(l);
      k += ',';
    }
    k += ';';
  }
  return k;
}

}  // namespace

const std::vector<WhiteheadAut>& enumerate_whitehead(int rank) {
  if (rank < 1) throw Error("enumerate_whitehead: rank must be >= 1");
  if (rank > 16) throw Error("enumerate_whitehead: rank too large");
  static std::mutex mu;
  static std::map<int, std::vector<WhiteheadAut>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(rank);
  if (it != cache.end()) return it->second;

  std::vector<WhiteheadAut> all;
  push_type_one(rank, all);
  push_type_two(rank, all);

  std::vector<WhiteheadAut> dedup;
  std::unordered_map<std::string, int> seen;
  for (auto& w : all) {
    const std::string k = images_key(w.realization);
    if (seen.emplace(k, 1).second) dedup.push_back(std::move(w));
  }
  return cache.emplace(rank, std::move(dedup)).first->second;
}

long total_length(const ClassTuple& t) {
  long sum = 0;
  for (const ConjClass& c : t.classes) sum += c.length();
  return sum;
}

ClassTuple apply_to_tuple(const FreeAutomorphism& f, const ClassTuple& t) {
  ClassTuple out;
  out.rank = t.rank;
  out.classes.reserve(t.classes.size());
  for (const ConjClass& c : t.classes)
    out.classes.emplace_back(apply(f, c.core()));
  return out;
}

MinimizeResult minimize(const ClassTuple& t) {
  for (const ConjClass& c : t.classes)
    if (c.core().min_rank() > t.rank)
      throw Error("minimize: class uses letters beyond the tuple rank");
  const auto& whs = enumerate_whitehead(t.rank);
  MinimizeResult res{t, FreeAutomorphism::identity(t.rank)};
  long best = total_length(res.minimal);
  bool improved = true;
  while (improved) {
    improved = false;
    for (const auto& w : whs) {
      ClassTuple cand = apply_to_tuple(w.realization, res.minimal);
      if (total_length(cand) < best) {
        best = total_length(cand);
        res.minimal = std::move(cand);
        res.witness = compose(w.realization, res.witness);
        improved = true;
        break;
      }
    }
  }
  if (!(apply_to_tuple(res.witness, t) == res.minimal))
    throw Error("minimize: witness failed to reproduce the minimal tuple");
  return res;
}

std::optional<FreeAutomorphism> are_equivalent(const ClassTuple& t1,
                                               const ClassTuple& t2) {
  if (t1.rank != t2.rank) return std::nullopt;
  if (t1.classes.size() != t2.classes.size()) return std::nullopt;
  const int rank = t1.rank;

  MinimizeResult m1 = minimize(t1);
  MinimizeResult m2 = minimize(t2);
  const long level = total_length(m1.minimal);
  if (level != total_length(m2.minimal)) return std::nullopt;

  const auto& whs = enumerate_whitehead(rank);
  const std::string goal = tuple_key(m2.minimal);

  // Breadth-first search of the finite set of tuples at the minimal level,
  // connected by Whitehead automorphisms.  Parents are recorded by key so
  // the witness path can be rebuilt without storing a composition per state.
  struct Parent {
    std::string prev;
    int move = -1;
  };
  std::unordered_map<std::string, Parent> parent;
  std::unordered_map<std::string, ClassTuple> at;
  std::deque<std::string> queue;

  const std::string start = tuple_key(m1.minimal);
  parent[start] = Parent{};
  at[start] = m1.minimal;
  queue.push_back(start);

  std::optional<std::string> found;
  if (start == goal) found = start;
  while (!found && !queue.empty()) {
    const std::string cur = queue.front();
    queue.pop_front();
    const ClassTuple& base = at[cur];
    for (int i = 0; i < static_cast<int>(whs.size()); ++i) {
      ClassTuple next = apply_to_tuple(whs[i].realization, base);
      if (total_length(next) != level) continue;
      std::string k = tuple_key(next);
      if (parent.count(k)) continue;
      parent[k] = Parent{cur, i};
      if (k == goal) {
        found = k;
        break;
      }
      at[k] = std::move(next);
      queue.push_back(std::move(k));
    }
  }
  if (!found) return std::nullopt;

  // Rebuild the path back to the start and compose the moves.
  std::vector<int> moves;
  for (std::string k = *found; k != start; k = parent[k].prev)
    moves.push_back(parent[k].move);
  FreeAutomorphism path = FreeAutomorphism::identity(rank);
  for (auto it = moves.rbegin(); it != moves.rend(); ++it)
    path = compose(whs[*it].realization, path);

  FreeAutomorphism phi =
      compose(invert(m2.witness), compose(path, m1.witness));
  if (!(apply_to_tuple(phi, t1) == t2))
    throw Error("are_equivalent: witness verification failed");
  return phi;
}

}  // namespace dtwist
