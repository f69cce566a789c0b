#pragma once
#include <string>
#include <vector>

#include "trisect/integer_matrix.hpp"
#include "trisect/pencil.hpp"

namespace trisect {

struct TrisectionParameters {
  unsigned g = 0;
  unsigned k = 0;
  bool operator==(const TrisectionParameters&) const = default;
};

// g = 2h + 2b + l - 1, k = 2h + b - 1. Throws input_error when b = 0.
TrisectionParameters trisection_parameters(unsigned h, unsigned b, unsigned l);

// Block-structured symplectic basis of the genus-g central surface.
// Block order: south s1..s_{2h}, north n1..n_{2h}, torus pairs (mu_i, la_i)
// for i = 1..l, connector pairs (x_j, y_j) for j = 1..b, boundary pairs
// (d_j, e_j) for j = 1..b-1. Each listed pair pairs to +1, blocks orthogonal.
struct CentralSurface {
  unsigned h = 0;
  unsigned b = 1;
  std::size_t l = 0;
  unsigned g = 0;
  std::vector<std::string> labels;  // 2g
  IntegerMatrix form;               // 2g x 2g

  std::size_t rank() const { return 2 * std::size_t(g); }
  // 0-based indices into the basis
  std::size_t s(std::size_t m) const { return m; }
  std::size_t n(std::size_t m) const { return 2 * std::size_t(h) + m; }
  std::size_t mu(std::size_t i) const { return 4 * std::size_t(h) + 2 * i; }
  std::size_t la(std::size_t i) const { return 4 * std::size_t(h) + 2 * i + 1; }
  std::size_t x(std::size_t j) const { return 4 * std::size_t(h) + 2 * l + 2 * j; }
  std::size_t y(std::size_t j) const { return 4 * std::size_t(h) + 2 * l + 2 * j + 1; }
  std::size_t d(std::size_t j) const { return 4 * std::size_t(h) + 2 * l + 2 * b + 2 * j; }
  std::size_t e(std::size_t j) const { return 4 * std::size_t(h) + 2 * l + 2 * b + 2 * j + 1; }

  HomologyClass zero() const { return HomologyClass(rank(), 0); }
  HomologyClass unit(std::size_t t) const;
  mpz_class pair(const HomologyClass& u, const HomologyClass& v) const;
};

CentralSurface build_central_surface(const PencilData& p);

}  // namespace trisect
