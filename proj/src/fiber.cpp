#include "trisect/fiber.hpp"

#include "trisect/errors.hpp"

namespace trisect {

FiberBasis fiber_basis(unsigned h, unsigned b) {
  if (b == 0) throw input_error("pencil fiber must have boundary");
  FiberBasis f;
  f.h = h;
  f.b = b;
  f.labels.reserve(f.rank());
  for (unsigned i = 1; i <= h; ++i) {
    f.labels.push_back("a" + std::to_string(i));
    f.labels.push_back("b" + std::to_string(i));
  }
  for (unsigned j = 1; j + 1 <= b; ++j) f.labels.push_back("delta" + std::to_string(j));
  return f;
}

IntegerMatrix fiber_intersection_form(const FiberBasis& basis) {
  const std::size_t n = basis.rank();
  IntegerMatrix m(n, n);
  for (unsigned i = 0; i < basis.h; ++i) {
    m.at(2 * i, 2 * i + 1) = 1;
    m.at(2 * i + 1, 2 * i) = -1;
  }
  return m;
}

}  // namespace trisect
