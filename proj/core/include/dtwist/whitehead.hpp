#pragma once

#include "dtwist/automorphism.hpp"
#include "dtwist/free_group.hpp"

#include <optional>
#include <vector>

namespace dtwist {

// A Whitehead automorphism of a rank-r free group: either a signed
// permutation of the basis (type I) or a multiplier automorphism (A, a)
// (type II) sending each basis letter x to one of x, xa, a^-1 x, a^-1 x a
// depending on which of x, x^-1 lie in A.  The defining data is kept next to
// the realization so tests can audit the enumeration.
struct WhiteheadAut {
  enum class Kind { TypeI, TypeII };
  Kind kind = Kind::TypeI;
  Letter multiplier = 0;    // type II only: the letter a
  std::vector<Letter> set;  // type II only: A, sorted by letter_key
  FreeAutomorphism realization;
};

// All Whitehead automorphisms of the rank-r free group, deduplicated by
// realization, in a fixed deterministic order (type I first).  Cached per
// rank; the returned reference stays valid for the process lifetime.
const std::vector<WhiteheadAut>& enumerate_whitehead(int rank);

// Ordered tuple of conjugacy classes over a common basis.
struct ClassTuple {
  int rank = 0;
  std::vector<ConjClass> classes;
  bool operator==(const ClassTuple&) const = default;
};

long total_length(const ClassTuple& t);

ClassTuple apply_to_tuple(const FreeAutomorphism& f, const ClassTuple& t);

struct MinimizeResult {
  ClassTuple minimal;
  FreeAutomorphism witness;  // maps the input tuple to the minimal one
};

// Greedy descent: repeatedly applies the first enumerated Whitehead
// automorphism that strictly shortens the tuple.  Peak reduction guarantees
// the fixed point has globally minimal total length.
MinimizeResult minimize(const ClassTuple& t);

// Decides simultaneous equivalence of ordered tuples. Returns an
// automorphism phi with phi(t1[i]) = t2[i] as conjugacy classes for every i,
// verified exactly before returning, or nullopt when no such phi exists.
std::optional<FreeAutomorphism> are_equivalent(const ClassTuple& t1,
                                               const ClassTuple& t2);

}  // namespace dtwist
