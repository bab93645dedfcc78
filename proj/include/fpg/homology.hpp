#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "fpg/presentation.hpp"

namespace fpg {

// Dense matrix over arbitrary-precision integers.
struct IntegerMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<mpz_class> entries;  // row-major

  static IntegerMatrix zero(int rows, int cols) {
    return IntegerMatrix{rows, cols, std::vector<mpz_class>(
                                         static_cast<std::size_t>(rows) * cols)};
  }
  mpz_class& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
  const mpz_class& at(int r, int c) const {
    return entries[static_cast<std::size_t>(r) * cols + c];
  }
  bool operator==(const IntegerMatrix&) const = default;
};

IntegerMatrix matmul(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix identity_matrix(int n);

struct SnfResult {
  // d1 | d2 | ..., all >= 0, padded with zeros to min(rows, cols)
  std::vector<mpz_class> diagonal;
  // unimodular L (rows x rows) and R (cols x cols) with L * m * R = diag
  std::optional<IntegerMatrix> left;
  std::optional<IntegerMatrix> right;
};

SnfResult smith_normal_form(const IntegerMatrix& m, bool want_transforms = false);

// H1 as d1 | d2 | ... torsion plus free rank.
struct InvariantFactors {
  std::vector<mpz_class> torsion;  // each >= 2, divisibility chain
  int free_rank = 0;

  bool trivial() const { return torsion.empty() && free_rank == 0; }
  bool operator==(const InvariantFactors&) const = default;
};

// Exponent-sum (relation) matrix: one row per relator, one column per generator.
IntegerMatrix relation_matrix(const Presentation& p);

InvariantFactors h1(const Presentation& p);
inline bool is_perfect(const Presentation& p) { return h1(p).trivial(); }

}  // namespace fpg
