#pragma once
#include <string>
#include <vector>

#include "trisect/check_result.hpp"
#include "trisect/fiber.hpp"
#include "trisect/integer_matrix.hpp"

namespace trisect {

// A vanishing cycle as a homology class on the compact fiber.
// chirality +1 is an ordinary twist, -1 the achiral (reversed) local model.
struct VanishingCycle {
  HomologyClass cls;
  int chirality = 1;
  std::string label;
};

// Combinatorial pencil data: fiber genus h, b base points, ordered cycles.
struct PencilData {
  unsigned h = 0;
  unsigned b = 1;
  std::vector<VanishingCycle> cycles;
  std::string name;

  std::size_t l() const { return cycles.size(); }
};

// Strict JSON schema:
//   {"name": str?, "h": uint, "b": uint>=1,
//    "cycles": [{"class": [int x (2h+b-1)], "sign": 1|-1, "label": str?}]}
// Unknown keys are rejected. Throws input_error.
PencilData parse_pencil(const std::string& text);
std::string serialize_pencil(const PencilData& p);

// Shape checks: b >= 1, class lengths, primitive-or-zero classes.
void validate_pencil(const PencilData& p);

// Ordered product of transvections, cycle 1 applied first.
IntegerMatrix homological_monodromy(const PencilData& p);

// Boundary twists act trivially on fiber homology, so the product above must
// be the identity for genuine pencil data. Necessary, not sufficient.
CheckResult check_monodromy(const PencilData& p);

// Invariants of the total space predicted from the pencil side alone.
struct PencilInvariants {
  long euler = 0;
  CokernelResult h1;
};

PencilInvariants expected_invariants(const PencilData& p);

}  // namespace trisect
