#pragma once
#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace trisect {

// Coordinate vector of a curve class in some declared basis.
using HomologyClass = std::vector<mpz_class>;

// Dense row-major matrix over Z. All arithmetic is exact arbitrary precision;
// products of long transvection chains overflow fixed-width integers.
struct IntegerMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpz_class> a;

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  mpz_class& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static IntegerMatrix identity(std::size_t n);
  bool is_identity() const;
  bool operator==(const IntegerMatrix&) const = default;
};

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix transpose(const IntegerMatrix& m);

// Exact determinant by fraction-free elimination.
mpz_class determinant(IntegerMatrix m);

// d = u * m * v with u, v unimodular, d diagonal, divisors non-negative and
// each dividing the next. Pivot rule: smallest nonzero absolute value in the
// live submatrix, ties broken by lowest row index then lowest column index.
struct SmithResult {
  IntegerMatrix u, d, v;
  std::vector<mpz_class> divisors;  // the nonzero diagonal entries, in order
};

SmithResult smith_normal_form(const IntegerMatrix& m);

// Structure of the quotient Z^ambient / <columns>.
struct CokernelResult {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;  // divisors greater than 1, chain order
  bool operator==(const CokernelResult&) const = default;
};

CokernelResult cokernel_divisors(std::size_t ambient_rank,
                                 const std::vector<HomologyClass>& columns);

// Matrix of x -> x + chirality * <x,c> * c where <,> is the given pairing.
// Determinant is +1 for either chirality.
IntegerMatrix transvection_matrix(const IntegerMatrix& form, const HomologyClass& c,
                                  int chirality);

// <u,v> under the pairing matrix.
mpz_class pair_with_form(const IntegerMatrix& form, const HomologyClass& u,
                         const HomologyClass& v);

}  // namespace trisect
