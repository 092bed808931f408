#pragma once
#include <optional>
#include <string>
#include <vector>

#include "dtwist/free_group.hpp"

namespace dtwist {

// An automorphism of the free group of the given rank, stored by its images
// of the basis generators. Construction does not prove invertibility; invert()
// does, and throws NotAnAutomorphism when the images are not a basis.
class FreeAutomorphism {
public:
  FreeAutomorphism() = default;
  static FreeAutomorphism identity(int rank);
  FreeAutomorphism(int rank, std::vector<Word> images);

  int rank() const { return rank_; }
  const Word& image(int i) const { return images_.at(i); }
  const std::vector<Word>& images() const { return images_; }
  bool is_identity() const;

  bool operator==(const FreeAutomorphism&) const = default;

  // "name -> word" per generator, one line each.
  std::string str(const Basis& b) const;
  static FreeAutomorphism parse(const Basis& b, const std::string& text);

private:
  int rank_ = 0;
  std::vector<Word> images_;
};

Word apply(const FreeAutomorphism& f, const Word& w);
// Applies inner first: compose(f, g)(w) = f(g(w)).
FreeAutomorphism compose(const FreeAutomorphism& outer, const FreeAutomorphism& inner);
FreeAutomorphism invert(const FreeAutomorphism& f);
// g -> w g w^-1.
FreeAutomorphism inner_automorphism(int rank, const Word& w);
// w with f = inner_automorphism(w) . g, if f and g agree up to inner.
std::optional<Word> inner_difference(const FreeAutomorphism& f, const FreeAutomorphism& g);

} // namespace dtwist
