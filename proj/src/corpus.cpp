#include "trisect/corpus.hpp"

#include "trisect/errors.hpp"

namespace trisect {

namespace {

HomologyClass cls(std::initializer_list<long> v) { return HomologyClass(v.begin(), v.end()); }

CorpusEntry make_entry(std::string name, unsigned h, unsigned b,
                       std::vector<VanishingCycle> cycles, unsigned g, unsigned k,
                       long euler, CokernelResult h1, bool monodromy_passes,
                       std::string note) {
  CorpusEntry e;
  e.name = name;
  e.pencil.name = std::move(name);
  e.pencil.h = h;
  e.pencil.b = b;
  e.pencil.cycles = std::move(cycles);
  e.params = {g, k};
  e.euler = euler;
  e.h1 = std::move(h1);
  e.monodromy_passes = monodromy_passes;
  e.note = std::move(note);
  return e;
}

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> out;

  out.push_back(make_entry("cp2_lines", 0, 1, {}, 1, 0, 3, {0, {}}, true,
                           "pencil of lines on the complex projective plane; "
                           "no singular fibers, one base point"));

  std::vector<VanishingCycle> conics;
  conics.push_back({cls({1, 1, 0}), 1, "delta12"});
  conics.push_back({cls({0, 1, 1}), 1, "delta23"});
  conics.push_back({cls({1, 0, 1}), 1, "delta13"});
  out.push_back(make_entry("cp2_conics", 0, 4, std::move(conics), 10, 3, 3, {0, {}}, true,
                           "pencil of conics; boundary-parallel cycles realizing "
                           "the lantern relation on the four-holed sphere"));

  std::vector<VanishingCycle> g1;
  for (int r = 0; r < 6; ++r) {
    g1.push_back({cls({1, 0}), 1, "a"});
    g1.push_back({cls({0, 1}), 1, "b"});
  }
  out.push_back(make_entry("genus1_pencil", 1, 1, g1, 15, 2, 11, {0, {}}, true,
                           "torus pencil from the relation (t_a t_b)^6 = boundary "
                           "twist on the one-holed torus"));

  std::vector<VanishingCycle> g1t(g1.begin(), g1.begin() + 11);
  out.push_back(make_entry("genus1_truncated", 1, 1, std::move(g1t), 14, 2, 10, {0, {}},
                           false,
                           "first 11 twists of genus1_pencil; not a pencil relation, "
                           "must fail the monodromy gate"));

  std::vector<VanishingCycle> ach;
  ach.push_back({cls({1, 0}), 1, "a"});
  ach.push_back({cls({1, 0}), -1, "a_rev"});
  out.push_back(make_entry("cp2_lines_achiral", 1, 1, std::move(ach), 5, 2, 1,
                           {1, {}}, true,
                           "cancelling twist pair with opposite chirality on the "
                           "one-holed torus; exercises the achiral path"));
  return out;
}

void self_check(const std::vector<CorpusEntry>& entries) {
  for (const auto& e : entries) {
    validate_pencil(e.pencil);
    TrisectionParameters tp =
        trisection_parameters(e.pencil.h, e.pencil.b, static_cast<unsigned>(e.pencil.l()));
    PencilInvariants pi = expected_invariants(e.pencil);
    bool mono = check_monodromy(e.pencil).passed;
    if (tp != e.params || pi.euler != e.euler || !(pi.h1 == e.h1) ||
        mono != e.monodromy_passes)
      throw internal_error("corpus entry \"" + e.name +
                           "\" disagrees with recomputed invariants");
  }
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> e = build_corpus();
    self_check(e);
    return e;
  }();
  return entries;
}

const CorpusEntry* corpus_find(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace trisect
