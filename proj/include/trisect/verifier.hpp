#pragma once
#include <string>
#include <vector>

#include "trisect/check_result.hpp"
#include "trisect/diagram.hpp"

namespace trisect {

// All checks are homology-level necessary conditions. A full pass is reported
// as HOMOLOGY-CERTIFIED, never as a diffeomorphism statement.
struct InvariantReport {
  TrisectionParameters params;
  long euler_diagram = 0;
  long euler_pencil = 0;
  CokernelResult h1_diagram;
  CokernelResult h1_pencil;
  std::vector<CheckResult> checks;
  bool overall = false;
};

// Cut system: exactly g curves, pairwise form-pairings zero, class matrix a
// primitive rank-g direct summand (all Smith divisors 1).
CheckResult check_cut_system(const CentralSurface& surface,
                             const std::vector<DiagramCurve>& family);

// The union of two cut systems must present H1 = Z^k, torsion free. k always
// comes from the parameter formula so corrupted input cannot self-certify.
CheckResult check_pairwise_heegaard(const CentralSurface& surface,
                                    const std::vector<DiagramCurve>& fam_a,
                                    const std::vector<DiagramCurve>& fam_b, unsigned k);

CokernelResult diagram_h1(const CentralSurface& surface,
                          const std::array<std::vector<DiagramCurve>, 3>& families);

InvariantReport verify_diagram(const PencilData& p, const TrisectionDiagram& d);

std::string serialize_report(const InvariantReport& r, const std::string& name);

namespace detail {
// Class-level workhorses shared with the convention search.
CheckResult cut_system_classes(const CentralSurface& surface,
                               const std::vector<HomologyClass>& fam, int family_index);
CheckResult pairwise_classes(const CentralSurface& surface,
                             const std::vector<HomologyClass>& a,
                             const std::vector<HomologyClass>& b, unsigned k,
                             const std::string& name);
CokernelResult h1_classes(const CentralSurface& surface,
                          const std::vector<std::vector<HomologyClass> const*>& fams);
}  // namespace detail

}  // namespace trisect
