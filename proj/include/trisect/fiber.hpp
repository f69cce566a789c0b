#pragma once
#include <string>
#include <vector>

#include "trisect/integer_matrix.hpp"

namespace trisect {

// Homology basis of the compact fiber: genus h with b boundary circles.
// Basis a1,b1,...,ah,bh,delta1,...,delta_{b-1}; the omitted boundary class
// satisfies delta_b = -(delta_1 + ... + delta_{b-1}).
struct FiberBasis {
  unsigned h = 0;
  unsigned b = 1;
  std::vector<std::string> labels;

  std::size_t rank() const { return 2 * std::size_t(h) + b - 1; }
};

FiberBasis fiber_basis(unsigned h, unsigned b);  // throws input_error when b = 0

// Skew pairing: <a_i,b_i> = +1, boundary classes in the radical. Rank 2h.
IntegerMatrix fiber_intersection_form(const FiberBasis& basis);

}  // namespace trisect
