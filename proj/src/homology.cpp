#include "fpg/homology.hpp"

#include <algorithm>
#include <cstdlib>

namespace fpg {

IntegerMatrix identity_matrix(int n) {
  IntegerMatrix m = IntegerMatrix::zero(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix matmul(const IntegerMatrix& a, const IntegerMatrix& b) {
  IntegerMatrix out = IntegerMatrix::zero(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

namespace {

struct Worker {
  IntegerMatrix m;
  bool track;
  IntegerMatrix left, right;

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
    if (track)
      for (int j = 0; j < left.cols; ++j) std::swap(left.at(a, j), left.at(b, j));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
    if (track)
      for (int i = 0; i < right.rows; ++i) std::swap(right.at(i, a), right.at(i, b));
  }
  // row[a] += k * row[b]
  void add_row(int a, int b, const mpz_class& k) {
    for (int j = 0; j < m.cols; ++j) m.at(a, j) += k * m.at(b, j);
    if (track)
      for (int j = 0; j < left.cols; ++j) left.at(a, j) += k * left.at(b, j);
  }
  void add_col(int a, int b, const mpz_class& k) {
    for (int i = 0; i < m.rows; ++i) m.at(i, a) += k * m.at(i, b);
    if (track)
      for (int i = 0; i < right.rows; ++i) right.at(i, a) += k * right.at(i, b);
  }
  void negate_row(int a) {
    for (int j = 0; j < m.cols; ++j) m.at(a, j) = -m.at(a, j);
    if (track)
      for (int j = 0; j < left.cols; ++j) left.at(a, j) = -left.at(a, j);
  }
};

}  // namespace

SnfResult smith_normal_form(const IntegerMatrix& input, bool want_transforms) {
  Worker w{input, want_transforms, {}, {}};
  if (want_transforms) {
    w.left = identity_matrix(input.rows);
    w.right = identity_matrix(input.cols);
  }
  IntegerMatrix& m = w.m;
  int n = std::min(m.rows, m.cols);

  for (int t = 0; t < n; ++t) {
    // pivot: smallest nonzero absolute value in the remaining block
    int pr = -1, pc = -1;
    mpz_class best;
    for (int i = t; i < m.rows; ++i)
      for (int j = t; j < m.cols; ++j) {
        if (m.at(i, j) == 0) continue;
        mpz_class a = abs(m.at(i, j));
        if (pr < 0 || a < best) {
          best = a;
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;  // remaining block is zero
    w.swap_rows(t, pr);
    w.swap_cols(t, pc);

    for (bool again = true; again;) {
      again = false;
      // clear column t with division steps; a nonzero remainder becomes the
      // new, smaller pivot
      for (int i = t + 1; i < m.rows; ++i) {
        if (m.at(i, t) == 0) continue;
        mpz_class q = m.at(i, t) / m.at(t, t);
        w.add_row(i, t, -q);
        if (m.at(i, t) != 0) {
          w.swap_rows(t, i);
          again = true;
        }
      }
      for (int j = t + 1; j < m.cols; ++j) {
        if (m.at(t, j) == 0) continue;
        mpz_class q = m.at(t, j) / m.at(t, t);
        w.add_col(j, t, -q);
        if (m.at(t, j) != 0) {
          w.swap_cols(t, j);
          again = true;
        }
      }
      if (again) continue;
      // force divisibility of the rest of the block by the pivot
      for (int i = t + 1; i < m.rows && !again; ++i)
        for (int j = t + 1; j < m.cols && !again; ++j)
          if (m.at(i, j) % m.at(t, t) != 0) {
            w.add_row(t, i, 1);
            again = true;
          }
    }
    if (m.at(t, t) < 0) w.negate_row(t);
  }

  SnfResult res;
  res.diagonal.resize(n);
  for (int i = 0; i < n; ++i) res.diagonal[i] = m.at(i, i);
  if (want_transforms) {
    res.left = std::move(w.left);
    res.right = std::move(w.right);
  }
  return res;
}

IntegerMatrix relation_matrix(const Presentation& p) {
  IntegerMatrix m = IntegerMatrix::zero(p.num_relators(), p.num_generators());
  for (int i = 0; i < p.num_relators(); ++i)
    for (Letter l : p.relators[i].letters())
      m.at(i, letter_gen(l)) += (l > 0 ? 1 : -1);
  return m;
}

InvariantFactors h1(const Presentation& p) {
  SnfResult snf = smith_normal_form(relation_matrix(p));
  InvariantFactors inv;
  int rank = 0;
  for (const mpz_class& d : snf.diagonal) {
    if (d == 0) continue;
    ++rank;
    if (d > 1) inv.torsion.push_back(d);
  }
  inv.free_rank = p.num_generators() - rank;
  return inv;
}

}  // namespace fpg
