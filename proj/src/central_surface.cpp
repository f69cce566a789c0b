#include "trisect/central_surface.hpp"

#include "trisect/errors.hpp"

namespace trisect {

TrisectionParameters trisection_parameters(unsigned h, unsigned b, unsigned l) {
  if (b == 0) throw input_error("base locus must be nonempty");
  TrisectionParameters t;
  t.g = 2 * h + 2 * b + l - 1;
  t.k = 2 * h + b - 1;
  return t;
}

HomologyClass CentralSurface::unit(std::size_t t) const {
  HomologyClass v = zero();
  v[t] = 1;
  return v;
}

mpz_class CentralSurface::pair(const HomologyClass& u, const HomologyClass& v) const {
  return pair_with_form(form, u, v);
}

CentralSurface build_central_surface(const PencilData& p) {
  validate_pencil(p);
  CentralSurface s;
  s.h = p.h;
  s.b = p.b;
  s.l = p.l();
  s.g = trisection_parameters(p.h, p.b, static_cast<unsigned>(p.l())).g;
  const std::size_t n = s.rank();
  for (unsigned m = 1; m <= 2 * p.h; ++m) s.labels.push_back("s" + std::to_string(m));
  for (unsigned m = 1; m <= 2 * p.h; ++m) s.labels.push_back("n" + std::to_string(m));
  for (std::size_t i = 1; i <= s.l; ++i) {
    s.labels.push_back("mu" + std::to_string(i));
    s.labels.push_back("la" + std::to_string(i));
  }
  for (unsigned j = 1; j <= p.b; ++j) {
    s.labels.push_back("x" + std::to_string(j));
    s.labels.push_back("y" + std::to_string(j));
  }
  for (unsigned j = 1; j + 1 <= p.b; ++j) {
    s.labels.push_back("d" + std::to_string(j));
    s.labels.push_back("e" + std::to_string(j));
  }
  if (s.labels.size() != n) throw internal_error("central surface basis size mismatch");
  s.form = IntegerMatrix(n, n);
  for (std::size_t t = 0; t + 1 < n; t += 2) {
    s.form.at(t, t + 1) = 1;
    s.form.at(t + 1, t) = -1;
  }
  return s;
}

}  // namespace trisect
