#pragma once
#include <string>
#include <vector>

#include "trisect/central_surface.hpp"
#include "trisect/pencil.hpp"

namespace trisect {

// Built-in example pencil with its expected invariants, revalidated on load.
struct CorpusEntry {
  std::string name;
  PencilData pencil;
  TrisectionParameters params;
  long euler = 0;
  CokernelResult h1;
  bool monodromy_passes = true;
  std::string note;
};

// Validated on first access; throws internal_error if any stored expected
// value disagrees with recomputation.
const std::vector<CorpusEntry>& corpus();

const CorpusEntry* corpus_find(const std::string& name);

}  // namespace trisect
