#pragma once
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dtwist/errors.hpp"

namespace dtwist {

// A letter is a generator index with a sign, packed into a nonzero int:
// generator i (0-based) with sign s is s*(i+1).
using Letter = int32_t;

inline Letter make_letter(int gen, int sign) { return sign > 0 ? gen + 1 : -(gen + 1); }
inline int gen_of(Letter l) { return (l > 0 ? l : -l) - 1; }
inline int sign_of(Letter l) { return l > 0 ? 1 : -1; }
inline Letter inv_letter(Letter l) { return -l; }

// Total order on signed letters: by generator index, positive before negative.
// This is the order canonical rotations are minimal under.
inline int letter_key(Letter l) { return 2 * gen_of(l) + (l < 0 ? 1 : 0); }

class Basis {
public:
  Basis() = default;
  explicit Basis(std::vector<std::string> names);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index(const std::string& name) const;

  bool operator==(const Basis&) const = default;

private:
  std::vector<std::string> names_;
};

class Word {
public:
  Word() = default;

  // Frees the raw letter sequence of adjacent inverse pairs.
  static Word reduce(const std::vector<Letter>& raw);
  static Word gen(int i, int sign = 1) { return Word({make_letter(i, sign)}, Checked{}); }

  // Space-separated tokens; "name" or "name^-1". "1" (alone) is the empty word.
  static Word parse(const Basis& b, const std::string& text);
  std::string str(const Basis& b) const;

  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter letter(int i) const { return letters_[i]; }
  // Smallest rank of a basis this word fits in.
  int min_rank() const;

  Word inverse() const;
  Word pow(long k) const;

  bool operator==(const Word&) const = default;
  // Deterministic total order: length first, then letter_key lexicographic.
  std::strong_ordering operator<=>(const Word& o) const;

  friend Word operator*(const Word& a, const Word& b);

private:
  struct Checked {};
  Word(std::vector<Letter> v, Checked) : letters_(std::move(v)) {}
  std::vector<Letter> letters_;
  friend class ConjClass;
  friend Word rotate(const Word&, int);
};

// Word in canonical rotation: cyclically reduced, minimal rotation under
// letter_key lexicographic order.
class ConjClass {
public:
  ConjClass() = default;
  explicit ConjClass(const Word& w);

  const Word& core() const { return core_; }
  int length() const { return core_.length(); }
  std::string str(const Basis& b) const { return core_.str(b); }

  bool operator==(const ConjClass&) const = default;
  std::strong_ordering operator<=>(const ConjClass&) const = default;

private:
  Word core_;
};

// w = conjugator * core * conjugator^-1 with core cyclically reduced.
std::pair<Word, Word> cyclic_reduce(const Word& w);

// Returns g with g*w1*g^-1 = w2 when the words are conjugate.
std::optional<Word> are_conjugate(const Word& w1, const Word& w2);

// w = root^exponent exactly, root not a proper power. Throws on trivial input.
std::pair<Word, long> primitive_root(const Word& w);

// k with g = w^k, if any. Throws on trivial w.
std::optional<long> power_of(const Word& g, const Word& w);

} // namespace dtwist
