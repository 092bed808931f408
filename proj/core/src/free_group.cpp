#include "dtwist/free_group.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace dtwist {

Basis::Basis(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw ValidationError("basis: empty generator name");
    if (n == "1") throw ValidationError("basis: generator name '1' is reserved");
    if (n.find_first_of(" \t\r\n") != std::string::npos)
      throw ValidationError("basis: whitespace in generator name '" + n + "'");
    if (!seen.insert(n).second)
      throw ValidationError("basis: duplicate generator name '" + n + "'");
  }
  // A name equal to another name plus "^-1" would make serialization ambiguous.
  for (const auto& n : names_)
    if (seen.count(n + "^-1"))
      throw ValidationError("basis: names '" + n + "' and '" + n + "^-1' collide");
}

std::optional<int> Basis::index(const std::string& name) const {
  for (int i = 0; i < rank(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Word Word::reduce(const std::vector<Letter>& raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (l == 0) throw Error("word: zero letter");
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(std::move(out), Checked{});
}

Word Word::parse(const Basis& b, const std::string& text) {
  std::vector<Letter> raw;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    if (auto i = b.index(tok)) {
      raw.push_back(make_letter(*i, 1));
      continue;
    }
    if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
      if (auto i = b.index(tok.substr(0, tok.size() - 3))) {
        raw.push_back(make_letter(*i, -1));
        continue;
      }
    }
    throw ParseError("word: unknown generator token '" + tok + "'");
  }
  return reduce(raw);
}

std::string Word::str(const Basis& b) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += b.name(gen_of(letters_[i]));
    if (letters_[i] < 0) out += "^-1";
  }
  return out;
}

int Word::min_rank() const {
  int r = 0;
  for (Letter l : letters_) r = std::max(r, gen_of(l) + 1);
  return r;
}

Word Word::inverse() const {
  std::vector<Letter> v(letters_.rbegin(), letters_.rend());
  for (Letter& l : v) l = -l;
  return Word(std::move(v), Checked{});
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> v = a.letters_;
  for (Letter l : b.letters_) {
    if (!v.empty() && v.back() == -l)
      v.pop_back();
    else
      v.push_back(l);
  }
  return Word(std::move(v), Word::Checked{});
}

Word Word::pow(long k) const {
  Word base = k < 0 ? inverse() : *this;
  long n = k < 0 ? -k : k;
  Word acc;
  for (long i = 0; i < n; ++i) acc = acc * base;
  return acc;
}

std::strong_ordering Word::operator<=>(const Word& o) const {
  if (letters_.size() != o.letters_.size())
    return letters_.size() <=> o.letters_.size();
  for (size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i] != o.letters_[i])
      return letter_key(letters_[i]) <=> letter_key(o.letters_[i]);
  return std::strong_ordering::equal;
}

std::pair<Word, Word> cyclic_reduce(const Word& w) {
  const auto& v = w.letters();
  int i = 0, j = static_cast<int>(v.size()) - 1;
  while (i < j && v[i] == -v[j]) {
    ++i;
    --j;
  }
  std::vector<Letter> conj(v.begin(), v.begin() + i);
  std::vector<Letter> core(v.begin() + i, v.begin() + j + 1);
  return {Word::reduce(core), Word::reduce(conj)};
}

Word rotate(const Word& w, int k) {
  const auto& v = w.letters();
  int n = static_cast<int>(v.size());
  std::vector<Letter> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(v[(i + k) % n]);
  return Word(std::move(out), Word::Checked{});
}

namespace {
// Lexicographic letter_key comparison of equal-length words.
bool lex_less(const Word& a, const Word& b) {
  for (int i = 0; i < a.length(); ++i) {
    int ka = letter_key(a.letter(i)), kb = letter_key(b.letter(i));
    if (ka != kb) return ka < kb;
  }
  return false;
}
} // namespace

ConjClass::ConjClass(const Word& w) {
  Word core = cyclic_reduce(w).first;
  Word best = core;
  for (int k = 1; k < core.length(); ++k) {
    Word r = rotate(core, k);
    if (lex_less(r, best)) best = r;
  }
  core_ = best;
}

std::optional<Word> are_conjugate(const Word& w1, const Word& w2) {
  auto [u1, p1] = cyclic_reduce(w1);
  auto [u2, p2] = cyclic_reduce(w2);
  if (u1.length() != u2.length()) return std::nullopt;
  int n = u1.length();
  if (n == 0) return p2 * p1.inverse();
  // w2 = p2 rot_k(u1) p2^-1 and rot_k(u1) = s^-1 u1 s with s the length-k
  // prefix of u1, so g = p2 s^-1 p1^-1 conjugates w1 to w2.
  for (int k = 0; k < n; ++k) {
    if (rotate(u1, k) == u2) {
      std::vector<Letter> pre(u1.letters().begin(), u1.letters().begin() + k);
      Word s = Word::reduce(pre);
      Word g = p2 * s.inverse() * p1.inverse();
      return g;
    }
  }
  return std::nullopt;
}

std::pair<Word, long> primitive_root(const Word& w) {
  if (w.empty()) throw Error("primitive_root: trivial word");
  auto [core, conj] = cyclic_reduce(w);
  int n = core.length();
  for (int p = 1; p <= n; ++p) {
    if (n % p) continue;
    bool periodic = true;
    for (int i = p; i < n && periodic; ++i)
      periodic = core.letter(i) == core.letter(i % p);
    if (periodic) {
      std::vector<Letter> head(core.letters().begin(), core.letters().begin() + p);
      Word root = conj * Word::reduce(head) * conj.inverse();
      return {root, n / p};
    }
  }
  return {w, 1}; // unreachable: p = n always periodic
}

std::optional<long> power_of(const Word& g, const Word& w) {
  if (w.empty()) throw Error("power_of: trivial base word");
  if (g.empty()) return 0;
  auto [uw, cw] = cyclic_reduce(w);
  auto [ug, cg] = cyclic_reduce(g);
  if (uw.empty() || ug.empty()) return std::nullopt;
  if (ug.length() % uw.length()) return std::nullopt;
  long k = ug.length() / uw.length();
  if (w.pow(k) == g) return k;
  if (w.pow(-k) == g) return -k;
  return std::nullopt;
}

} // namespace dtwist
