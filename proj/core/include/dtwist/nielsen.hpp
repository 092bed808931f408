#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dtwist/automorphism.hpp"
#include "dtwist/graph_of_groups.hpp"
#include "dtwist/presentation.hpp"
#include "dtwist/whitehead.hpp"

namespace dtwist {

// Finite presentation of Aut(F_k) on transvections (ci^+;cj): ci -> ci cj,
// (ci^-;cj): ci -> cj^-1 ci, basis swaps P_i_j and inversions I_i
// (1-based generator indices in the names).  Loading validates that every
// relator holds as an automorphism identity and that the abelianisation is
// the known one; failures throw Error.
FinitePresentation autfk_presentation(int k);

// Realization of each generator as an automorphism of F_k, aligned with the
// generator order of autfk_presentation(k).
std::vector<FreeAutomorphism> autfk_realization(int k);

// A relator together with the family it was instantiated from, e.g.
// "Q2[(c1^+;b),(B^~;c1)]".  Kept alongside the plain presentation so tests
// can audit the enumeration family by family.
struct TaggedRelator {
  std::string family;
  Word relator;
};

// A group of automorphisms given by generators with chosen realizations and
// a presentation whose relators all hold as automorphism identities
// (verified on construction).
struct PresentedAutGroup {
  FinitePresentation pres;
  std::vector<FreeAutomorphism> realization;  // one per generator
  std::vector<TaggedRelator> tagged;          // pres.relators, labeled
};

// Symbol admissibility for the decorated-symbol generators: slots are
// 0 (the conjugating slot: B in the vertex group, a b a^-1 in the ambient
// group), 1 (b), and 1+i (c_i).  Two-sided symbols (dec == 0) exist for the
// slots 0 and 1; one-sided symbols (dec == +1/-1) for c slots; the second
// slot must differ from the base.  n is the ambient rank.
bool symbol_admissible(int n, int base, int dec, int z);

// Presentation of the twist-preserving automorphism group of the vertex
// group <B, b, c1, ..>: automorphisms fixing the conjugacy classes of B and
// of b.  Generators are the decorated symbols, P and I; relators are the Q
// families.  n is the ambient rank (vertex group rank is n).
PresentedAutGroup jw_presentation(int n);

// The centraliser presentation instantiated directly: rho, the renamed
// symbol generators acting on the ambient group <a, b, c1, ..>, and theta,
// with the R relator families.
PresentedAutGroup theorem_presentation(int n);

// The ambient-group generator catalogue shared by theorem_presentation and
// assemble_centraliser, with rho first and theta last.  build_context
// validates that every catalogue automorphism commutes with rho, that theta
// is an involution, and that every entry is invertible.
struct NielsenContext {
  int n = 0;
  Basis ambient{std::vector<std::string>{}};  // a, b, c1, ..
  Basis vertex{std::vector<std::string>{}};   // B, b, c1, ..
  FreeAutomorphism rho;                       // a -> ab
  FreeAutomorphism theta;                     // a -> a^-1, b -> a b^-1 a^-1
  std::vector<std::string> names;
  std::vector<FreeAutomorphism> images;

  const FreeAutomorphism& by_name(const std::string& name) const;  // throws
};

NielsenContext build_context(int n);

// k with f = rho^k (f fixes b and all c, maps a -> a b^k), else nullopt.
std::optional<long> rho_exponent(const FreeAutomorphism& f);

// Presentation of the centraliser of rho assembled from the two extensions:
// the kernel <rho> extended by the vertex-group symbol automorphisms, then
// by theta.  Generator names and order match theorem_presentation.
struct CentraliserData {
  FinitePresentation pres;
  std::vector<FreeAutomorphism> realization;
};

CentraliserData assemble_centraliser(int n);

// The image of the centraliser in the symmetries of the one-loop graph of
// groups: the edge reversal is admissible because the pair of twistor
// classes is Whitehead-equivalent to its swap, realized by an explicit
// graph-of-groups automorphism whose induced action on pi1 is theta.
struct GraphImage {
  int order = 1;
  FreeAutomorphism swap_witness;
  GogAutomorphism swap;
  FreeAutomorphism induced;
};

GraphImage graph_image(int n);

// Invariant factors of the centraliser abelianisation, as frozen from the
// closed-form answer: Z^2 x Z/2 for n = 2, Z x (Z/2)^3 for n = 3,
// (Z/2)^3 for n = 4, (Z/2)^2 for n >= 5.
AbelianInvariants expected_centraliser_h1(int n);

struct CheckReport {
  std::string name;
  bool pass = false;
  std::string message;
};

// Runs the whole verification suite for one rank: catalogue validation,
// efficiency of the one-loop graph, the induced automorphism being rho, the
// Q and R relator identities, both abelianisations against the closed form,
// the class of rho in the abelianisation, and the graph image.
std::vector<CheckReport> verify_all(int n);

}  // namespace dtwist
