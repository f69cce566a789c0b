#pragma once
#include <array>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "trisect/central_surface.hpp"
#include "trisect/errors.hpp"
#include "trisect/pencil.hpp"

namespace trisect {

// One curve of a cut system: a primitive class of length 2g plus a structural
// tag recording which piece of the construction it came from.
struct DiagramCurve {
  int family = 1;  // 1..3
  HomologyClass cls;
  std::string support;
};

// Per boundary-pair block, the class family 3 starts from.
enum class BpChoice : int { d = 0, e = 1, de = 2 };

// Connector role triple for families (1,2,3): Distinct = (x, y, x+y),
// Parallel13 = (x, y, x), Parallel23 = (x, y, y).
enum class ConnMode : int { Distinct = 0, Parallel13 = 1, Parallel23 = 2 };

// The open choices left after the fixed sign conventions; found by search.
struct ConventionAssignment {
  int eps2 = -1;                    // family-2 torus curve is mu + eps2*chi*la
  std::vector<BpChoice> bp3;        // one per boundary-pair block
  std::vector<ConnMode> conn;       // one per connector
  bool operator==(const ConventionAssignment&) const = default;
};

// Candidate lists per open choice. Defaults enumerate the full space; tests
// restrict them to exercise the exhaustion path.
struct DiagramSkeleton {
  PencilData pencil;
  CentralSurface surface;
  std::vector<int> eps2_candidates;                    // subset of {-1, +1}
  std::vector<std::vector<BpChoice>> bp3_candidates;   // per block
  std::vector<std::vector<ConnMode>> conn_candidates;  // per connector
};

DiagramSkeleton default_skeleton(const PencilData& p);

struct TrisectionDiagram {
  CentralSurface surface;
  std::array<std::vector<DiagramCurve>, 3> families;
  ConventionAssignment provenance;
};

// Raised when the candidate space is exhausted; carries the best partial
// scorecard seen so the failure is diagnosable.
struct no_convention_error : internal_error {
  nlohmann::ordered_json scorecard;
  explicit no_convention_error(nlohmann::ordered_json sc)
      : internal_error("no admissible convention"), scorecard(std::move(sc)) {}
};

// Lexicographically first assignment passing the full verifier, enumerating
// eps2 (order -1, +1), then bp3 blocks (d < e < d+e), then connector roles
// (distinct < parallel13 < parallel23), earlier positions most significant.
ConventionAssignment resolve_conventions(const PencilData& p, const DiagramSkeleton& skel);

// Deterministic curve families for a fixed assignment.
TrisectionDiagram materialize(const DiagramSkeleton& skel, const ConventionAssignment& a);

// Gate on the monodromy check (unless forced), then resolve and materialize.
TrisectionDiagram build_diagram(const PencilData& p, bool force = false);

// JSON: {"g","k","basis","families","provenance"}, stable key order.
std::string serialize_diagram(const PencilData& p, const TrisectionDiagram& d);

// Parsed form of a diagram file; surface is reconstructed by the caller from
// the pencil it claims to belong to.
struct ParsedDiagram {
  unsigned g = 0;
  unsigned k = 0;
  std::vector<std::string> basis;
  std::array<std::vector<DiagramCurve>, 3> families;
  nlohmann::ordered_json provenance;
};

ParsedDiagram parse_diagram(const std::string& text);

}  // namespace trisect
