#include <cstdlib>

#include "dtwist/errors.hpp"
#include "dtwist/presentation.hpp"

namespace dtwist {

IntMatrix identity_matrix(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix matmul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw Error("matmul: shape mismatch");
  IntMatrix out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const BigInt& xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) out.at(i, j) += xik * y.at(k, j);
    }
  return out;
}

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Row/column operations mirrored on the transform matrices so that
// u * input * v stays equal to the working matrix throughout.
struct Work {
  IntMatrix m, u, v;

  void swap_rows(int i, int j) {
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(int i, int j) {
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  void add_row(int dst, int src, const BigInt& f) {  // row dst += f * row src
    for (int c = 0; c < m.cols; ++c) m.at(dst, c) += f * m.at(src, c);
    for (int c = 0; c < u.cols; ++c) u.at(dst, c) += f * u.at(src, c);
  }
  void add_col(int dst, int src, const BigInt& f) {
    for (int r = 0; r < m.rows; ++r) m.at(r, dst) += f * m.at(r, src);
    for (int r = 0; r < v.rows; ++r) v.at(r, dst) += f * v.at(r, src);
  }
  void negate_row(int i) {
    for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& input) {
  Work w{input, identity_matrix(input.rows), identity_matrix(input.cols)};
  const int n = std::min(input.rows, input.cols);

  for (int k = 0; k < n; ++k) {
    // Find the entry of minimal nonzero absolute value in the remaining
    // block; small pivots keep intermediate entries from exploding.
    int pr = -1, pc = -1;
    BigInt best;
    for (int r = k; r < w.m.rows; ++r)
      for (int c = k; c < w.m.cols; ++c) {
        const BigInt& x = w.m.at(r, c);
        if (x == 0) continue;
        if (pr < 0 || abs_big(x) < best) {
          best = abs_big(x);
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) break;  // remaining block is zero
    w.swap_rows(k, pr);
    w.swap_cols(k, pc);

    for (;;) {
      bool dirty = false;
      for (int r = k + 1; r < w.m.rows; ++r) {
        if (w.m.at(r, k) == 0) continue;
        BigInt q = w.m.at(r, k) / w.m.at(k, k);
        w.add_row(r, k, -q);
        if (w.m.at(r, k) != 0) {
          w.swap_rows(k, r);  // remainder is strictly smaller; repeat
          dirty = true;
        }
      }
      for (int c = k + 1; c < w.m.cols; ++c) {
        if (w.m.at(k, c) == 0) continue;
        BigInt q = w.m.at(k, c) / w.m.at(k, k);
        w.add_col(c, k, -q);
        if (w.m.at(k, c) != 0) {
          w.swap_cols(k, c);
          dirty = true;
        }
      }
      if (!dirty) break;
    }
    if (w.m.at(k, k) < 0) w.negate_row(k);
  }

  // Enforce the divisibility chain d_k | d_{k+1}.
  for (int k = 0; k + 1 < n; ++k) {
    for (int j = k + 1; j < n; ++j) {
      if (w.m.at(k, k) == 0 && w.m.at(j, j) != 0) {
        w.swap_rows(k, j);
        w.swap_cols(k, j);
      }
      if (w.m.at(k, k) == 0 || w.m.at(j, j) == 0) continue;
      if (w.m.at(j, j) % w.m.at(k, k) == 0) continue;
      // Fold d_j into position (k, k) and re-reduce the 2x2 block.
      w.add_row(k, j, 1);
      for (;;) {
        if (w.m.at(k, j) != 0) {
          BigInt q = w.m.at(k, j) / w.m.at(k, k);
          w.add_col(j, k, -q);
          if (w.m.at(k, j) != 0) w.swap_cols(k, j);
        }
        if (w.m.at(j, k) != 0) {
          BigInt q = w.m.at(j, k) / w.m.at(k, k);
          w.add_row(j, k, -q);
          if (w.m.at(j, k) != 0) w.swap_rows(k, j);
        }
        if (w.m.at(k, j) == 0 && w.m.at(j, k) == 0) break;
      }
      if (w.m.at(k, k) < 0) w.negate_row(k);
      if (w.m.at(j, j) < 0) w.negate_row(j);
    }
  }

  // Verification: u * input * v == d, d diagonal, chain divides.
  IntMatrix check = matmul(matmul(w.u, input), w.v);
  if (!(check == w.m)) throw Error("smith_normal_form: transform mismatch");
  for (int r = 0; r < w.m.rows; ++r)
    for (int c = 0; c < w.m.cols; ++c)
      if (r != c && w.m.at(r, c) != 0)
        throw Error("smith_normal_form: result not diagonal");
  SmithResult res{w.m, w.u, w.v, {}};
  for (int k = 0; k < n; ++k) res.diagonal.push_back(w.m.at(k, k));
  for (int k = 0; k + 1 < n; ++k) {
    const BigInt& a = res.diagonal[k];
    const BigInt& b = res.diagonal[k + 1];
    if (a == 0 && b != 0)
      throw Error("smith_normal_form: zero before nonzero on diagonal");
    if (a != 0 && b % a != 0)
      throw Error("smith_normal_form: divisibility chain broken");
  }
  return res;
}

}  // namespace dtwist
