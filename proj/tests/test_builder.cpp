#include "doctest.h"
#include "trisect/corpus.hpp"
#include "trisect/diagram.hpp"
#include "trisect/errors.hpp"
#include "trisect/verifier.hpp"

using namespace trisect;

namespace {

PencilData pencil_of(const char* name) {
  const CorpusEntry* e = corpus_find(name);
  REQUIRE(e != nullptr);
  return e->pencil;
}

}  // namespace

TEST_CASE("trisection parameters") {
  CHECK(trisection_parameters(0, 1, 0) == TrisectionParameters{1, 0});
  CHECK(trisection_parameters(0, 4, 3) == TrisectionParameters{10, 3});
  CHECK(trisection_parameters(1, 9, 12) == TrisectionParameters{31, 10});
  CHECK(trisection_parameters(1, 1, 12) == TrisectionParameters{15, 2});
  CHECK_THROWS_AS(trisection_parameters(2, 0, 5), input_error);
}

TEST_CASE("central surface block layout") {
  SUBCASE("disk fiber, one base point, no cycles") {
    CentralSurface sf = build_central_surface(pencil_of("cp2_lines"));
    CHECK(sf.g == 1);
    CHECK(sf.rank() == 2);
    CHECK(sf.labels == std::vector<std::string>{"x1", "y1"});
    CHECK(sf.pair(sf.unit(0), sf.unit(1)) == 1);
  }
  SUBCASE("conic pencil surface") {
    CentralSurface sf = build_central_surface(pencil_of("cp2_conics"));
    CHECK(sf.g == 10);
    CHECK(sf.rank() == 20);
    // torus block for cycle 1, connector 1, boundary pair 1
    CHECK(sf.labels[sf.mu(0)] == "mu1");
    CHECK(sf.labels[sf.la(0)] == "la1");
    CHECK(sf.labels[sf.x(0)] == "x1");
    CHECK(sf.labels[sf.y(3)] == "y4");
    CHECK(sf.labels[sf.d(0)] == "d1");
    CHECK(sf.labels[sf.e(2)] == "e3");
    CHECK(sf.pair(sf.unit(sf.mu(1)), sf.unit(sf.la(1))) == 1);
    CHECK(sf.pair(sf.unit(sf.d(0)), sf.unit(sf.e(0))) == 1);
    CHECK(sf.pair(sf.unit(sf.mu(0)), sf.unit(sf.x(0))) == 0);
  }
  SUBCASE("positive genus surface carries south and north blocks") {
    CentralSurface sf = build_central_surface(pencil_of("genus1_pencil"));
    CHECK(sf.g == 15);
    CHECK(sf.labels[sf.s(0)] == "s1");
    CHECK(sf.labels[sf.n(0)] == "n1");
    CHECK(sf.labels[sf.mu(0)] == "mu1");
    // south and north pair within their own blocks only
    CHECK(sf.pair(sf.unit(sf.s(0)), sf.unit(sf.s(1))) == 1);
    CHECK(sf.pair(sf.unit(sf.n(0)), sf.unit(sf.n(1))) == 1);
    CHECK(sf.pair(sf.unit(sf.s(0)), sf.unit(sf.n(1))) == 0);
  }
}

TEST_CASE("simplest pencil materializes to the standard genus one diagram") {
  TrisectionDiagram d = build_diagram(pencil_of("cp2_lines"));
  REQUIRE(d.families[0].size() == 1);
  REQUIRE(d.families[1].size() == 1);
  REQUIRE(d.families[2].size() == 1);
  CHECK(d.families[0][0].cls == HomologyClass{1, 0});
  CHECK(d.families[1][0].cls == HomologyClass{0, 1});
  CHECK(d.families[2][0].cls == HomologyClass{1, 1});
  CHECK(d.families[0][0].support == "ConnectorMeridian(1)");
  CHECK(d.families[1][0].support == "ConnectorLongitude(1)");
  CHECK(d.families[2][0].support == "ConnectorDiagonal(1)");
}

TEST_CASE("resolved conventions are reproducible") {
  SUBCASE("lines") {
    TrisectionDiagram d = build_diagram(pencil_of("cp2_lines"));
    CHECK(d.provenance.eps2 == -1);
    CHECK(d.provenance.bp3.empty());
    CHECK(d.provenance.conn == std::vector<ConnMode>{ConnMode::Distinct});
  }
  SUBCASE("conics") {
    TrisectionDiagram d = build_diagram(pencil_of("cp2_conics"));
    CHECK(d.provenance.eps2 == -1);
    CHECK(d.provenance.bp3 ==
          std::vector<BpChoice>{BpChoice::e, BpChoice::e, BpChoice::de});
    CHECK(d.provenance.conn ==
          std::vector<ConnMode>{ConnMode::Parallel13, ConnMode::Parallel23,
                                ConnMode::Parallel23, ConnMode::Parallel23});
  }
  SUBCASE("torus pencil") {
    TrisectionDiagram d = build_diagram(pencil_of("genus1_pencil"));
    CHECK(d.provenance.conn == std::vector<ConnMode>{ConnMode::Distinct});
    CHECK(d.provenance.bp3.empty());
  }
}

TEST_CASE("every buildable corpus entry verifies") {
  for (const CorpusEntry& e : corpus()) {
    if (!e.monodromy_passes) continue;
    TrisectionDiagram d = build_diagram(e.pencil);
    InvariantReport r = verify_diagram(e.pencil, d);
    INFO("entry ", e.name);
    CHECK(r.overall);
    for (const CheckResult& c : r.checks) {
      INFO("check ", c.name);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("family sizes and supports match the block structure") {
  TrisectionDiagram d = build_diagram(pencil_of("cp2_conics"));
  for (const auto& fam : d.families) REQUIRE(fam.size() == 10);
  // order: arcs (none, h=0), torus curves, boundary pairs, connectors
  CHECK(d.families[0][0].support == "TorusMeridian(1)");
  CHECK(d.families[1][0].support == "TorusOneOne(1)");
  CHECK(d.families[2][0].support == "TorusLambda(1)");
  CHECK(d.families[0][3].support == "BoundaryPairCurve(1)");
  CHECK(d.families[1][3].support == "ParallelCopy(BoundaryPairCurve(1))");
  CHECK(d.families[0][6].support == "ConnectorMeridian(1)");
  CHECK(d.families[1][6].support == "ConnectorLongitude(1)");
  // conics resolve with connector 1 parallel to family 1
  CHECK(d.families[2][6].support == "ParallelCopy(ConnectorMeridian(1))");
  CHECK(d.families[2][7].support == "ParallelCopy(ConnectorLongitude(2))");
}

TEST_CASE("arc doubles appear for positive fiber genus") {
  TrisectionDiagram d = build_diagram(pencil_of("genus1_pencil"));
  CHECK(d.families[0][0].support == "ArcDouble(1)");
  CHECK(d.families[0][1].support == "ArcDouble(2)");
  CHECK(d.families[1][0].support == "ParallelCopy(ArcDouble(1))");
  CHECK(d.families[2][0].support == "ArcDouble(1)");
  // family 1 arc m combines the south and north handles with alternating sign
  CentralSurface sf = build_central_surface(pencil_of("genus1_pencil"));
  const HomologyClass& a0 = d.families[0][0].cls;
  CHECK(a0[sf.s(0)] == 1);
  CHECK(a0[sf.n(0)] == 1);
  const HomologyClass& a1 = d.families[0][1].cls;
  CHECK(a1[sf.s(1)] == 1);
  CHECK(a1[sf.n(1)] == -1);
}

TEST_CASE("build is deterministic") {
  PencilData p = pencil_of("cp2_conics");
  std::string one = serialize_diagram(p, build_diagram(p));
  std::string two = serialize_diagram(p, build_diagram(p));
  CHECK(one == two);
}

TEST_CASE("monodromy gate") {
  PencilData p = pencil_of("genus1_truncated");
  CHECK_THROWS_AS(build_diagram(p), check_failure);
  TrisectionDiagram d = build_diagram(p, /*force=*/true);
  CHECK(verify_diagram(p, d).overall);
}

TEST_CASE("restricting the candidate space to a bad corner exhausts") {
  PencilData p = pencil_of("cp2_conics");
  DiagramSkeleton skel = default_skeleton(p);
  skel.eps2_candidates = {1};
  skel.conn_candidates[0] = {ConnMode::Parallel23};
  try {
    resolve_conventions(p, skel);
    FAIL("expected exhaustion");
  } catch (const no_convention_error& ex) {
    CHECK(std::string(ex.what()).find("no admissible convention") != std::string::npos);
    REQUIRE(ex.scorecard.contains("candidates_evaluated"));
    CHECK(ex.scorecard["candidates_evaluated"].get<int>() > 0);
    REQUIRE(ex.scorecard.contains("best"));
    CHECK(ex.scorecard["best"].contains("checks_passed"));
    CHECK(ex.scorecard["best"].contains("first_failing_check"));
    // the scorecard pinpoints a homology check, not a parse problem
    CHECK(ex.scorecard["best"]["checks_passed"].get<int>() < 8);
  }
}

TEST_CASE("the full space recovers from a forced wrong first choice") {
  // dropping eps2 = -1 alone is fatal for the conic pencil; no assignment
  // with eps2 = +1 passes, which pins the sign convention
  PencilData p = pencil_of("cp2_conics");
  DiagramSkeleton skel = default_skeleton(p);
  skel.eps2_candidates = {1};
  CHECK_THROWS_AS(resolve_conventions(p, skel), no_convention_error);
}

TEST_CASE("cyclic rotation of the monodromy word still builds and verifies") {
  PencilData p = pencil_of("genus1_pencil");
  std::rotate(p.cycles.begin(), p.cycles.begin() + 2, p.cycles.end());
  REQUIRE(check_monodromy(p).passed);
  TrisectionDiagram d = build_diagram(p);
  CHECK(verify_diagram(p, d).overall);
}

TEST_CASE("diagram json round trip") {
  PencilData p = pencil_of("cp2_conics");
  TrisectionDiagram d = build_diagram(p);
  ParsedDiagram pd = parse_diagram(serialize_diagram(p, d));
  CHECK(pd.g == 10);
  CHECK(pd.k == 3);
  CHECK(pd.basis == d.surface.labels);
  for (int f = 0; f < 3; ++f) {
    REQUIRE(pd.families[f].size() == d.families[f].size());
    for (std::size_t i = 0; i < pd.families[f].size(); ++i) {
      CHECK(pd.families[f][i].cls == d.families[f][i].cls);
      CHECK(pd.families[f][i].support == d.families[f][i].support);
    }
  }
  CHECK_THROWS_AS(parse_diagram("{}"), input_error);
  CHECK_THROWS_AS(parse_diagram("[]"), input_error);
}
