#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

#include "dtwist/free_group.hpp"

namespace dtwist {

using BigInt = boost::multiprecision::cpp_int;

// A finite group presentation: named generators and freely reduced relator
// words over them.
struct FinitePresentation {
  Basis generators{std::vector<std::string>{}};
  std::vector<Word> relators;

  static FinitePresentation parse(const std::string& text);
  std::string str() const;
};

// Dense integer matrix with exact arbitrary-precision entries.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  BigInt& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const BigInt& at(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }
  bool operator==(const IntMatrix&) const = default;
};

IntMatrix identity_matrix(int n);
IntMatrix matmul(const IntMatrix& x, const IntMatrix& y);

// Exponent-sum matrix: rows = relators, columns = generators.
IntMatrix relation_matrix(const FinitePresentation& p);

// d = u * m * v with u, v unimodular, d diagonal with d1 | d2 | ... ;
// verified exactly before returning.
struct SmithResult {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  std::vector<BigInt> diagonal;  // min(rows, cols) entries of d
};

SmithResult smith_normal_form(const IntMatrix& m);

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<BigInt> torsion;  // invariant factors, each >= 2, d1 | d2 | ...

  std::string str() const;
  bool operator==(const AbelianInvariants&) const = default;
};

AbelianInvariants abelianisation(const FinitePresentation& p);

// Image of a word in the abelianisation, in coordinates adapted to the Smith
// normal form of the relation matrix: free coordinates (one per zero
// invariant factor) and residues modulo each torsion factor.
struct AbelianClass {
  std::vector<BigInt> free_coords;
  std::vector<std::pair<BigInt, BigInt>> torsion;  // (modulus, residue)

  bool is_zero() const;
};

AbelianClass class_in_abelianisation(const FinitePresentation& p,
                                     const Word& w);

// Removes trivial and duplicate relators and eliminates generators that
// occur exactly once in some relator. Preserves the abelianisation (checked).
FinitePresentation tietze_simplify(const FinitePresentation& p);

}  // namespace dtwist
