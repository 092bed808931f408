#pragma once

#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dtwist/automorphism.hpp"
#include "dtwist/errors.hpp"
#include "dtwist/presentation.hpp"

namespace dtwist {

// Group operations over an opaque element type, so presentations can be
// assembled for subgroups of Aut(F_n) and for small test groups alike.
template <class G>
struct GroupOps {
  std::function<G()> identity;
  std::function<G(const G&, const G&)> mul;
  std::function<G(const G&)> inv;
  std::function<bool(const G&, const G&)> eq;
};

template <class G>
G eval_word(const GroupOps<G>& ops, const std::vector<G>& gens,
            const Word& w) {
  G acc = ops.identity();
  for (Letter l : w.letters()) {
    const G& g = gens.at(gen_of(l));
    acc = ops.mul(acc, l > 0 ? g : ops.inv(g));
  }
  return acc;
}

// Input for assembling a presentation of the middle group B of a short exact
// sequence 1 -> A -> B -> C -> 1 from presentations of A and C, the images
// of A's generators in B, a chosen lift of each C generator, and an oracle
// expressing elements of the embedded copy of A as words in A's generators.
template <class G>
struct SesData {
  FinitePresentation a_pres;
  std::vector<G> a_images;  // image in B of each A generator
  FinitePresentation c_pres;
  std::vector<G> c_lifts;  // chosen lift in B of each C generator
  GroupOps<G> ops;
  std::function<std::optional<Word>(const G&)> express_in_a;
  std::vector<std::string> a_names;  // output names; empty reuses a_pres names
  std::vector<std::string> c_names;  // output names; empty reuses c_pres names
};

// Generators: A's then C's (lifted).  Relators: A's relators, each lifted C
// relator corrected by its kernel expression, and the conjugates of each A
// generator by each lifted C generator, expressed back in A.  Every relator
// is verified to evaluate to the identity; failures throw ValidationError.
template <class G>
FinitePresentation ses_assemble(const SesData<G>& data) {
  const int na = data.a_pres.generators.rank();
  const int nc = data.c_pres.generators.rank();
  if (static_cast<int>(data.a_images.size()) != na ||
      static_cast<int>(data.c_lifts.size()) != nc)
    throw Error("ses_assemble: generator image count mismatch");

  std::vector<std::string> names =
      data.a_names.empty() ? data.a_pres.generators.names() : data.a_names;
  const std::vector<std::string> cn =
      data.c_names.empty() ? data.c_pres.generators.names() : data.c_names;
  if (static_cast<int>(names.size()) != na ||
      static_cast<int>(cn.size()) != nc)
    throw Error("ses_assemble: output name count mismatch");
  names.insert(names.end(), cn.begin(), cn.end());

  FinitePresentation out;
  out.generators = Basis(names);

  auto shift_c = [na](const Word& w) {
    std::vector<Letter> raw;
    for (Letter l : w.letters())
      raw.push_back(make_letter(gen_of(l) + na, sign_of(l)));
    return Word::reduce(raw);
  };
  auto express = [&](const G& g, const char* what) {
    auto w = data.express_in_a(g);
    if (!w)
      throw ValidationError(std::string("ses_assemble: ") + what +
                            " is not recognized in the kernel subgroup");
    return *w;
  };

  for (const Word& r : data.a_pres.relators) out.relators.push_back(r);

  for (const Word& s : data.c_pres.relators) {
    const G lifted = eval_word(data.ops, data.c_lifts, s);
    const Word in_a = express(lifted, "a lifted relator");
    out.relators.push_back(shift_c(s) * in_a.inverse());
  }

  for (int j = 0; j < nc; ++j) {
    for (int eps : {1, -1}) {
      const G z = eps > 0 ? data.c_lifts[j] : data.ops.inv(data.c_lifts[j]);
      const G zinv = data.ops.inv(z);
      for (int i = 0; i < na; ++i) {
        const G conj = data.ops.mul(data.ops.mul(z, data.a_images[i]), zinv);
        const Word in_a = express(conj, "a conjugated kernel generator");
        const Word lhs = Word::gen(na + j, eps) * Word::gen(i) *
                         Word::gen(na + j, -eps);
        out.relators.push_back(lhs * in_a.inverse());
      }
    }
  }

  std::vector<G> images = data.a_images;
  images.insert(images.end(), data.c_lifts.begin(), data.c_lifts.end());
  for (const Word& r : out.relators) {
    const G val = eval_word(data.ops, images, r);
    if (!data.ops.eq(val, data.ops.identity()))
      throw ValidationError("ses_assemble: relator '" +
                            r.str(out.generators) +
                            "' does not hold in the ambient group");
  }
  std::erase_if(out.relators, [](const Word& w) { return w.empty(); });
  return out;
}

// Breadth-first search over words in the given generators, shortest first,
// generator order fixed; returns the first word evaluating to the target.
// The identity maps to the empty word.  Deterministic for fixed inputs.
template <class G>
std::function<std::optional<Word>(const G&)> make_search_oracle(
    int num_gens, std::vector<G> images, GroupOps<G> ops, int max_len) {
  return [num_gens, images = std::move(images), ops = std::move(ops),
          max_len](const G& target) -> std::optional<Word> {
    if (ops.eq(target, ops.identity())) return Word();
    std::deque<std::pair<Word, G>> frontier;
    frontier.emplace_back(Word(), ops.identity());
    while (!frontier.empty()) {
      auto [w, val] = std::move(frontier.front());
      frontier.pop_front();
      if (w.length() >= max_len) continue;
      for (int i = 0; i < num_gens; ++i) {
        for (int sign : {1, -1}) {
          // avoid immediate backtracking; other revisits just cost time
          if (!w.empty() && w.letter(w.length() - 1) ==
                                make_letter(i, -sign))
            continue;
          const Word next = w * Word::gen(i, sign);
          const G nval =
              ops.mul(val, sign > 0 ? images[i] : ops.inv(images[i]));
          if (ops.eq(nval, target)) return next;
          frontier.emplace_back(next, nval);
        }
      }
    }
    return std::nullopt;
  };
}

// GroupOps for FreeAutomorphism at a fixed rank.
GroupOps<FreeAutomorphism> aut_group_ops(int rank);

}  // namespace dtwist
