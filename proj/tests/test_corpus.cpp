#include "doctest.h"
#include "trisect/corpus.hpp"
#include "trisect/pencil.hpp"

using namespace trisect;

TEST_CASE("corpus membership and lookup") {
  const auto& all = corpus();
  REQUIRE(all.size() == 5);
  CHECK(all[0].name == "cp2_lines");
  CHECK(corpus_find("cp2_conics") != nullptr);
  CHECK(corpus_find("genus1_pencil") != nullptr);
  CHECK(corpus_find("genus1_truncated") != nullptr);
  CHECK(corpus_find("cp2_lines_achiral") != nullptr);
  CHECK(corpus_find("nope") == nullptr);
}

TEST_CASE("stored expected values") {
  const CorpusEntry* e = corpus_find("cp2_lines");
  CHECK(e->params == TrisectionParameters{1, 0});
  CHECK(e->euler == 3);
  CHECK(e->h1 == CokernelResult{0, {}});

  e = corpus_find("cp2_conics");
  CHECK(e->params == TrisectionParameters{10, 3});
  CHECK(e->euler == 3);
  CHECK(e->pencil.l() == 3);

  e = corpus_find("genus1_pencil");
  CHECK(e->params == TrisectionParameters{15, 2});
  CHECK(e->euler == 11);
  CHECK(e->pencil.l() == 12);

  e = corpus_find("genus1_truncated");
  CHECK(e->params == TrisectionParameters{14, 2});
  CHECK(e->euler == 10);
  CHECK_FALSE(e->monodromy_passes);

  e = corpus_find("cp2_lines_achiral");
  CHECK(e->params == TrisectionParameters{5, 2});
  CHECK(e->euler == 1);
  CHECK(e->h1 == CokernelResult{1, {}});
}

TEST_CASE("stored monodromy flags match the check") {
  for (const CorpusEntry& e : corpus()) {
    INFO("entry ", e.name);
    CHECK(check_monodromy(e.pencil).passed == e.monodromy_passes);
  }
}

TEST_CASE("stored invariants match recomputation") {
  for (const CorpusEntry& e : corpus()) {
    INFO("entry ", e.name);
    TrisectionParameters tp =
        trisection_parameters(e.pencil.h, e.pencil.b, static_cast<unsigned>(e.pencil.l()));
    CHECK(tp == e.params);
    PencilInvariants pi = expected_invariants(e.pencil);
    CHECK(pi.euler == e.euler);
    CHECK(pi.h1 == e.h1);
  }
}

TEST_CASE("every entry documents itself") {
  for (const CorpusEntry& e : corpus()) {
    CHECK_FALSE(e.note.empty());
    CHECK(e.pencil.name == e.name);
  }
}
