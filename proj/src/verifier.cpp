#include "trisect/verifier.hpp"

#include "trisect/errors.hpp"

namespace trisect {

using nlohmann::ordered_json;

namespace {

ordered_json divisors_json(const std::vector<mpz_class>& divs) {
  ordered_json a = ordered_json::array();
  for (const mpz_class& d : divs) a.push_back(d.get_si());
  return a;
}

ordered_json cokernel_json(const CokernelResult& c) {
  ordered_json j;
  j["free_rank"] = c.free_rank;
  j["torsion"] = divisors_json(c.torsion);
  return j;
}

std::vector<HomologyClass> strip(const std::vector<DiagramCurve>& fam) {
  std::vector<HomologyClass> out;
  out.reserve(fam.size());
  for (const auto& c : fam) out.push_back(c.cls);
  return out;
}

}  // namespace

namespace detail {

CheckResult cut_system_classes(const CentralSurface& surface,
                               const std::vector<HomologyClass>& fam, int family_index) {
  const std::size_t n = surface.rank();
  for (const auto& c : fam)
    if (c.size() != n) throw input_error("basis mismatch: curve class length");
  CheckResult r;
  r.name = "cut_system_family" + std::to_string(family_index);
  r.details["family"] = family_index;
  r.details["size"] = fam.size();
  r.details["expected_size"] = surface.g;
  bool ok = fam.size() == surface.g;
  ordered_json bad_pairs = ordered_json::array();
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      mpz_class v = surface.pair(fam[i], fam[j]);
      if (v != 0) bad_pairs.push_back({i + 1, j + 1, v.get_si()});
    }
  r.details["nonzero_pairings"] = bad_pairs;
  if (!bad_pairs.empty()) ok = false;
  IntegerMatrix m(fam.size(), n);
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = fam[i][j];
  SmithResult s = smith_normal_form(m);
  r.details["snf_divisors"] = divisors_json(s.divisors);
  if (s.divisors.size() != fam.size()) ok = false;  // rank drop
  for (const mpz_class& d : s.divisors)
    if (d != 1) ok = false;
  r.passed = ok;
  return r;
}

CheckResult pairwise_classes(const CentralSurface& surface,
                             const std::vector<HomologyClass>& a,
                             const std::vector<HomologyClass>& b, unsigned k,
                             const std::string& name) {
  std::vector<HomologyClass> cols;
  cols.reserve(a.size() + b.size());
  cols.insert(cols.end(), a.begin(), a.end());
  cols.insert(cols.end(), b.begin(), b.end());
  CokernelResult q = cokernel_divisors(surface.rank(), cols);
  CheckResult r;
  r.name = name;
  r.details["expected_free_rank"] = k;
  r.details["quotient"] = cokernel_json(q);
  r.passed = q.free_rank == k && q.torsion.empty();
  return r;
}

CokernelResult h1_classes(const CentralSurface& surface,
                          const std::vector<std::vector<HomologyClass> const*>& fams) {
  std::vector<HomologyClass> cols;
  for (const auto* f : fams) cols.insert(cols.end(), f->begin(), f->end());
  return cokernel_divisors(surface.rank(), cols);
}

}  // namespace detail

CheckResult check_cut_system(const CentralSurface& surface,
                             const std::vector<DiagramCurve>& family) {
  int idx = family.empty() ? 0 : family.front().family;
  return detail::cut_system_classes(surface, strip(family), idx);
}

CheckResult check_pairwise_heegaard(const CentralSurface& surface,
                                    const std::vector<DiagramCurve>& fam_a,
                                    const std::vector<DiagramCurve>& fam_b, unsigned k) {
  int ia = fam_a.empty() ? 0 : fam_a.front().family;
  int ib = fam_b.empty() ? 0 : fam_b.front().family;
  return detail::pairwise_classes(surface, strip(fam_a), strip(fam_b), k,
                                  "pairwise_" + std::to_string(ia) + std::to_string(ib));
}

CokernelResult diagram_h1(const CentralSurface& surface,
                          const std::array<std::vector<DiagramCurve>, 3>& families) {
  std::vector<HomologyClass> cols;
  for (const auto& f : families)
    for (const auto& c : f) cols.push_back(c.cls);
  return cokernel_divisors(surface.rank(), cols);
}

InvariantReport verify_diagram(const PencilData& p, const TrisectionDiagram& d) {
  CentralSurface expect = build_central_surface(p);
  if (d.surface.labels != expect.labels || d.surface.form != expect.form)
    throw input_error("basis mismatch: diagram surface does not match the pencil");
  InvariantReport rep;
  rep.params = trisection_parameters(p.h, p.b, static_cast<unsigned>(p.l()));
  for (int f = 0; f < 3; ++f)
    rep.checks.push_back(check_cut_system(d.surface, d.families[f]));
  rep.checks.push_back(
      check_pairwise_heegaard(d.surface, d.families[0], d.families[1], rep.params.k));
  rep.checks.push_back(
      check_pairwise_heegaard(d.surface, d.families[0], d.families[2], rep.params.k));
  rep.checks.push_back(
      check_pairwise_heegaard(d.surface, d.families[1], d.families[2], rep.params.k));

  rep.euler_diagram = 2L + rep.params.g - 3L * rep.params.k;
  PencilInvariants pi = expected_invariants(p);
  rep.euler_pencil = pi.euler;
  CheckResult euler;
  euler.name = "euler_match";
  euler.details["diagram"] = rep.euler_diagram;
  euler.details["pencil"] = rep.euler_pencil;
  euler.passed = rep.euler_diagram == rep.euler_pencil;
  rep.checks.push_back(euler);

  rep.h1_diagram = diagram_h1(d.surface, d.families);
  rep.h1_pencil = pi.h1;
  CheckResult h1;
  h1.name = "h1_match";
  h1.details["diagram"] = cokernel_json(rep.h1_diagram);
  h1.details["pencil"] = cokernel_json(rep.h1_pencil);
  h1.passed = rep.h1_diagram == rep.h1_pencil;
  rep.checks.push_back(h1);

  rep.overall = true;
  for (const auto& c : rep.checks)
    if (!c.passed) rep.overall = false;
  return rep;
}

std::string serialize_report(const InvariantReport& r, const std::string& name) {
  ordered_json j;
  j["name"] = name;
  j["g"] = r.params.g;
  j["k"] = r.params.k;
  j["certification"] = r.overall ? "HOMOLOGY-CERTIFIED" : "FAILED";
  j["overall"] = r.overall;
  j["euler"] = {{"diagram", r.euler_diagram}, {"pencil", r.euler_pencil}};
  j["h1"] = ordered_json::object();
  j["h1"]["diagram"] = cokernel_json(r.h1_diagram);
  j["h1"]["pencil"] = cokernel_json(r.h1_pencil);
  j["checks"] = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json jc;
    jc["name"] = c.name;
    jc["passed"] = c.passed;
    jc["details"] = c.details;
    j["checks"].push_back(std::move(jc));
  }
  return j.dump(2) + "\n";
}

}  // namespace trisect
