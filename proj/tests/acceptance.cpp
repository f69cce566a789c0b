// Acceptance battery: eight end-to-end checks, one line of output each.
// Exit status is the number of failing checks.
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "trisect/corpus.hpp"
#include "trisect/diagram.hpp"
#include "trisect/render.hpp"
#include "trisect/verifier.hpp"

using namespace trisect;

namespace {

int failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail) {
  std::printf("%s: %d %s%s%s\n", ok ? "PASS" : "FAIL", idx, name,
              detail.empty() ? "" : " ", detail.c_str());
  if (!ok) ++failures;
}

TrisectionDiagram corpus_diagram(const CorpusEntry& e) {
  return build_diagram(e.pencil, /*force=*/!e.monodromy_passes);
}

// Deterministic single-curve mutations. Every one must break verification.
struct Mutant {
  std::string label;
  TrisectionDiagram diagram;
};

std::vector<Mutant> mutants(const TrisectionDiagram& d) {
  std::vector<Mutant> out;
  const CentralSurface& sf = d.surface;
  const std::size_t g = d.families[0].size();
  for (int f = 0; f < 3; ++f) {
    std::string fs = std::to_string(f + 1);
    std::vector<std::size_t> scale_at{0};
    if (g > 1) scale_at.push_back(g - 1);
    for (std::size_t i : scale_at) {
      Mutant m{"scale2_f" + fs + "_c" + std::to_string(i + 1), d};
      for (mpz_class& v : m.diagram.families[f][i].cls) v *= 2;
      out.push_back(std::move(m));
    }
    Mutant dr{"drop_f" + fs, d};
    dr.diagram.families[f].erase(dr.diagram.families[f].begin());
    out.push_back(std::move(dr));
    Mutant du{"dup_f" + fs, d};
    du.diagram.families[f].push_back(du.diagram.families[f][0]);
    out.push_back(std::move(du));
  }
  // replace a bare torus meridian in family 1 by its dual longitude
  std::size_t swaps = sf.l < 3 ? sf.l : 3;
  for (std::size_t i = 0; i < swaps; ++i) {
    Mutant m{"swap_mu_la_" + std::to_string(i + 1), d};
    m.diagram.families[0][2 * std::size_t(sf.h) + i].cls = sf.unit(sf.la(i));
    out.push_back(std::move(m));
  }
  // collide the first connector curve with another family's copy
  std::size_t c0 = g - sf.b;
  for (int f = 0; f < 3; ++f) {
    int donor = (f + 1) % 3;
    if (d.families[donor][c0].cls == d.families[f][c0].cls) donor = (f + 2) % 3;
    Mutant m{"collide_f" + std::to_string(f + 1) + "_conn1", d};
    m.diagram.families[f][c0].cls = d.families[donor][c0].cls;
    out.push_back(std::move(m));
  }
  return out;
}

void criterion1() {
  bool ok = trisection_parameters(0, 1, 0) == TrisectionParameters{1, 0} &&
            trisection_parameters(0, 4, 3) == TrisectionParameters{10, 3} &&
            trisection_parameters(1, 9, 12) == TrisectionParameters{31, 10};
  report(1, "parameter formulas on pinned triples", ok, "");
}

void criterion2() {
  const CorpusEntry* e = corpus_find("cp2_lines");
  TrisectionDiagram d = build_diagram(e->pencil);
  InvariantReport r = verify_diagram(e->pencil, d);
  bool ok = r.overall && r.params == TrisectionParameters{1, 0} &&
            r.euler_diagram == 3 && r.h1_diagram == CokernelResult{0, {}} &&
            d.families[0].size() == 1 &&
            d.families[0][0].cls == HomologyClass{1, 0} &&
            d.families[1][0].cls == HomologyClass{0, 1} &&
            d.families[2][0].cls == HomologyClass{1, 1};
  report(2, "projective plane end to end", ok,
         "families (1,0) (0,1) (1,1), chi=3, H1=0");
}

void criterion3() {
  std::mt19937 rng(1u);
  std::uniform_int_distribution<unsigned> H(0, 5), B(1, 6), L(0, 20);
  int bad = 0;
  for (int t = 0; t < 1000; ++t) {
    unsigned h = H(rng), b = B(rng), l = L(rng);
    TrisectionParameters tp = trisection_parameters(h, b, l);
    long lhs = 2L + tp.g - 3L * tp.k;
    long rhs = 2L * (2 - 2L * h) + long(l) - long(b);
    if (lhs != rhs) ++bad;
  }
  report(3, "euler identity on 1000 random shapes", bad == 0,
         bad ? std::to_string(bad) + " mismatches" : "");
}

void criterion4() {
  bool ok = check_monodromy(corpus_find("genus1_pencil")->pencil).passed &&
            !check_monodromy(corpus_find("genus1_truncated")->pencil).passed &&
            check_monodromy(corpus_find("cp2_conics")->pencil).passed &&
            check_monodromy(corpus_find("cp2_lines_achiral")->pencil).passed;
  report(4, "monodromy oracle on the corpus", ok, "");
}

void criterion5() {
  int built = 0, verified = 0;
  for (const CorpusEntry& e : corpus()) {
    TrisectionDiagram d = corpus_diagram(e);
    ++built;
    InvariantReport r = verify_diagram(e.pencil, d);
    if (r.overall) ++verified;
  }
  report(5, "builder oracle on the corpus", verified == 5,
         std::to_string(built) + " built, " + std::to_string(verified) +
             " verified");
}

void criterion6() {
  bool ok = true;
  std::string detail;
  int total = 0;
  for (const CorpusEntry& e : corpus()) {
    TrisectionDiagram d = corpus_diagram(e);
    std::vector<Mutant> ms = mutants(d);
    if (ms.size() < 10) {
      ok = false;
      detail += e.name + ": only " + std::to_string(ms.size()) + " mutants; ";
      continue;
    }
    for (const Mutant& m : ms) {
      InvariantReport r = verify_diagram(e.pencil, m.diagram);
      std::string first_fail;
      for (const CheckResult& c : r.checks)
        if (!c.passed) {
          first_fail = c.name;
          break;
        }
      if (r.overall || first_fail.empty()) {
        ok = false;
        detail += e.name + "/" + m.label + " survived; ";
      }
      ++total;
    }
  }
  report(6, "mutation suite flips verification", ok,
         ok ? std::to_string(total) + " mutants, all rejected with a named check"
            : detail);
}

void criterion7() {
  std::mt19937 rng(2u);
  std::uniform_int_distribution<int> dim(0, 12), val(-1000, 1000);
  int bad = 0;
  for (int t = 0; t < 1000; ++t) {
    IntegerMatrix m(dim(rng), dim(rng));
    for (mpz_class& x : m.a) x = val(rng);
    SmithResult s = smith_normal_form(m);
    if (multiply(multiply(s.u, m), s.v) != s.d) ++bad;
    mpz_class du = determinant(s.u), dv = determinant(s.v);
    if (!(du == 1 || du == -1) || !(dv == 1 || dv == -1)) ++bad;
    for (std::size_t i = 0; i + 1 < s.divisors.size(); ++i)
      if (s.divisors[i + 1] % s.divisors[i] != 0) ++bad;
  }
  // transvections: form preserved, chirality flip inverts
  std::uniform_int_distribution<int> small(-9, 9);
  IntegerMatrix form(6, 6);
  for (int i = 0; i < 3; ++i) {
    form.at(2 * i, 2 * i + 1) = 1;
    form.at(2 * i + 1, 2 * i) = -1;
  }
  for (int t = 0; t < 200; ++t) {
    HomologyClass c(6);
    for (mpz_class& x : c) x = small(rng);
    IntegerMatrix tp = transvection_matrix(form, c, 1);
    IntegerMatrix tm = transvection_matrix(form, c, -1);
    if (!multiply(tp, tm).is_identity()) ++bad;
    if (multiply(multiply(transpose(tp), form), tp) != form) ++bad;
  }
  report(7, "exact linear algebra properties", bad == 0,
         bad ? std::to_string(bad) + " violations" : "");
}

void criterion8() {
  bool ok = true;
  for (const char* name : {"cp2_lines", "cp2_conics", "genus1_pencil"}) {
    const CorpusEntry* e = corpus_find(name);
    std::string d1 = serialize_diagram(e->pencil, build_diagram(e->pencil));
    std::string d2 = serialize_diagram(e->pencil, build_diagram(e->pencil));
    std::string r1 = render_svg(build_diagram(e->pencil));
    std::string r2 = render_svg(build_diagram(e->pencil));
    if (d1 != d2 || r1 != r2) ok = false;
  }
  report(8, "byte identical rebuild and render", ok, "");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  return failures;
}
