#include "trisect/integer_matrix.hpp"

#include <utility>

#include "trisect/errors.hpp"

namespace trisect {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntegerMatrix::is_identity() const {
  if (rows != cols) return false;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols != b.rows) throw input_error("matrix dimension mismatch");
  IntegerMatrix r(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t t = 0; t < a.cols; ++t) {
      const mpz_class& x = a.at(i, t);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) r.at(i, j) += x * b.at(t, j);
    }
  return r;
}

IntegerMatrix transpose(const IntegerMatrix& m) {
  IntegerMatrix r(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
  return r;
}

mpz_class determinant(IntegerMatrix m) {
  if (m.rows != m.cols) throw input_error("determinant of non-square matrix");
  const std::size_t n = m.rows;
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

namespace {

// Smallest nonzero |entry| in d[t.., t..]; ties lowest row then lowest column.
bool find_pivot(const IntegerMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  mpz_class best;
  for (std::size_t i = t; i < d.rows; ++i)
    for (std::size_t j = t; j < d.cols; ++j) {
      const mpz_class& z = d.at(i, j);
      if (z == 0) continue;
      mpz_class m = abs(z);
      if (!found || m < best) {
        found = true;
        best = m;
        pi = i;
        pj = j;
      }
    }
  return found;
}

void swap_rows(IntegerMatrix& d, IntegerMatrix& u, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t j = 0; j < d.cols; ++j) std::swap(d.at(r1, j), d.at(r2, j));
  for (std::size_t j = 0; j < u.cols; ++j) std::swap(u.at(r1, j), u.at(r2, j));
}

void swap_cols(IntegerMatrix& d, IntegerMatrix& v, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t i = 0; i < d.rows; ++i) std::swap(d.at(i, c1), d.at(i, c2));
  for (std::size_t i = 0; i < v.rows; ++i) std::swap(v.at(i, c1), v.at(i, c2));
}

// row r1 += q * row r2
void row_addmul(IntegerMatrix& d, IntegerMatrix& u, std::size_t r1, std::size_t r2,
                const mpz_class& q) {
  for (std::size_t j = 0; j < d.cols; ++j) d.at(r1, j) += q * d.at(r2, j);
  for (std::size_t j = 0; j < u.cols; ++j) u.at(r1, j) += q * u.at(r2, j);
}

// col c1 += q * col c2
void col_addmul(IntegerMatrix& d, IntegerMatrix& v, std::size_t c1, std::size_t c2,
                const mpz_class& q) {
  for (std::size_t i = 0; i < d.rows; ++i) d.at(i, c1) += q * d.at(i, c2);
  for (std::size_t i = 0; i < v.rows; ++i) v.at(i, c1) += q * v.at(i, c2);
}

void negate_row(IntegerMatrix& d, IntegerMatrix& u, std::size_t r) {
  for (std::size_t j = 0; j < d.cols; ++j) d.at(r, j) = -d.at(r, j);
  for (std::size_t j = 0; j < u.cols; ++j) u.at(r, j) = -u.at(r, j);
}

}  // namespace

SmithResult smith_normal_form(const IntegerMatrix& m) {
  SmithResult r{IntegerMatrix::identity(m.rows), m, IntegerMatrix::identity(m.cols), {}};
  IntegerMatrix& d = r.d;
  const std::size_t lim = std::min(m.rows, m.cols);
  for (std::size_t t = 0; t < lim; ++t) {
    std::size_t pi = t, pj = t;
    if (!find_pivot(d, t, pi, pj)) break;  // live submatrix is zero
    swap_rows(d, r.u, t, pi);
    swap_cols(d, r.v, t, pj);
    for (;;) {
      // Reduce column t and row t modulo the pivot; leftovers shrink it.
      bool dirty = false;
      for (std::size_t i = t + 1; i < d.rows; ++i) {
        if (d.at(i, t) == 0) continue;
        mpz_class q = d.at(i, t) / d.at(t, t);  // truncated
        if (q != 0) row_addmul(d, r.u, i, t, -q);
        if (d.at(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < d.cols; ++j) {
        if (d.at(t, j) == 0) continue;
        mpz_class q = d.at(t, j) / d.at(t, t);
        if (q != 0) col_addmul(d, r.v, j, t, -q);
        if (d.at(t, j) != 0) dirty = true;
      }
      if (dirty) {
        find_pivot(d, t, pi, pj);
        swap_rows(d, r.u, t, pi);
        swap_cols(d, r.v, t, pj);
        continue;
      }
      // Pivot must divide every remaining entry or later divisors break the chain.
      bool fixed = true;
      for (std::size_t i = t + 1; i < d.rows && fixed; ++i)
        for (std::size_t j = t + 1; j < d.cols && fixed; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            row_addmul(d, r.u, t, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
    if (d.at(t, t) < 0) negate_row(d, r.u, t);
    r.divisors.push_back(d.at(t, t));
  }
  return r;
}

CokernelResult cokernel_divisors(std::size_t ambient_rank,
                                 const std::vector<HomologyClass>& columns) {
  IntegerMatrix m(ambient_rank, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != ambient_rank)
      throw input_error("class length does not match ambient rank");
    for (std::size_t i = 0; i < ambient_rank; ++i) m.at(i, j) = columns[j][i];
  }
  SmithResult s = smith_normal_form(m);
  CokernelResult r;
  r.free_rank = ambient_rank - s.divisors.size();
  for (const mpz_class& dv : s.divisors)
    if (dv > 1) r.torsion.push_back(dv);
  return r;
}

mpz_class pair_with_form(const IntegerMatrix& form, const HomologyClass& u,
                         const HomologyClass& v) {
  if (u.size() != form.rows || v.size() != form.cols)
    throw input_error("pairing dimension mismatch");
  mpz_class acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 0) continue;
      acc += u[i] * form.at(i, j) * v[j];
    }
  }
  return acc;
}

IntegerMatrix transvection_matrix(const IntegerMatrix& form, const HomologyClass& c,
                                  int chirality) {
  const std::size_t n = form.rows;
  if (form.cols != n || c.size() != n) throw input_error("transvection dimension mismatch");
  IntegerMatrix t = IntegerMatrix::identity(n);
  // column j picks up chirality * <e_j, c> * c
  for (std::size_t j = 0; j < n; ++j) {
    mpz_class w = 0;
    for (std::size_t s = 0; s < n; ++s)
      if (form.at(j, s) != 0 && c[s] != 0) w += form.at(j, s) * c[s];
    if (w == 0) continue;
    w *= chirality;
    for (std::size_t i = 0; i < n; ++i) t.at(i, j) += w * c[i];
  }
  return t;
}

}  // namespace trisect
