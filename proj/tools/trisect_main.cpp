#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "trisect/corpus.hpp"
#include "trisect/diagram.hpp"
#include "trisect/errors.hpp"
#include "trisect/pencil.hpp"
#include "trisect/render.hpp"
#include "trisect/verifier.hpp"

namespace {

using namespace trisect;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write file: " + path);
  out << data;
}

// FILE arguments accept a path or corpus:<name>
PencilData load_pencil(const std::string& arg) {
  if (arg.rfind("corpus:", 0) == 0) {
    const CorpusEntry* e = corpus_find(arg.substr(7));
    if (!e) throw input_error("unknown corpus entry: " + arg.substr(7));
    return e->pencil;
  }
  return parse_pencil(read_file(arg));
}

std::string h1_string(const CokernelResult& h1) {
  std::string s;
  if (h1.free_rank == 1)
    s = "Z";
  else if (h1.free_rank > 1)
    s = "Z^" + std::to_string(h1.free_rank);
  for (const mpz_class& t : h1.torsion) {
    if (!s.empty()) s += "+";
    s += "Z/" + t.get_str();
  }
  return s.empty() ? "0" : s;
}

std::string check_json(const CheckResult& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["passed"] = c.passed;
  j["details"] = c.details;
  return j.dump(2) + "\n";
}

// Rebuild the surface from the pencil and adopt the parsed curve families.
TrisectionDiagram adopt_parsed(const PencilData& p, const ParsedDiagram& pd) {
  CentralSurface sf = build_central_surface(p);
  if (pd.g != sf.g || pd.basis != sf.labels)
    throw input_error("basis mismatch: diagram does not belong to this pencil");
  TrisectionDiagram d;
  d.surface = std::move(sf);
  d.families = pd.families;
  for (const auto& fam : d.families)
    for (const auto& c : fam)
      if (c.cls.size() != d.surface.rank())
        throw input_error("basis mismatch: curve class length");
  return d;
}

int run(int argc, char** argv) {
  CLI::App app{"trisection diagrams from combinatorial pencil data"};
  app.require_subcommand(1);

  std::string file, out_path, diagram_path;
  bool force = false;

  auto* c_check = app.add_subcommand("check", "validate a pencil and run the monodromy check");
  c_check->add_option("file", file, "pencil JSON path or corpus:<name>")->required();

  auto* c_tri = app.add_subcommand("trisect", "build a trisection diagram");
  c_tri->add_option("file", file, "pencil JSON path or corpus:<name>")->required();
  c_tri->add_option("-o,--output", out_path, "output path (default stdout)");
  c_tri->add_flag("--force", force, "build even if the monodromy check fails");

  auto* c_ver = app.add_subcommand("verify", "verify a diagram against its pencil");
  c_ver->add_option("file", file, "pencil JSON path or corpus:<name>")->required();
  c_ver->add_option("-d,--diagram", diagram_path, "diagram JSON (default: build it)");
  c_ver->add_flag("--force", force, "build even if the monodromy check fails");

  auto* c_inv = app.add_subcommand("invariants", "print g, k, euler characteristic, H1");
  c_inv->add_option("file", file, "pencil JSON path or corpus:<name>")->required();

  auto* c_cor = app.add_subcommand("corpus", "list or show built-in example pencils");
  c_cor->require_subcommand(1);
  auto* c_cor_list = c_cor->add_subcommand("list", "list entry names");
  std::string show_name;
  auto* c_cor_show = c_cor->add_subcommand("show", "show one entry");
  c_cor_show->add_option("name", show_name, "entry name")->required();

  auto* c_ren = app.add_subcommand("render", "render a diagram as schematic SVG");
  c_ren->add_option("input", file, "diagram JSON, pencil JSON, or corpus:<name>")->required();
  c_ren->add_option("-o,--output", out_path, "output path (default stdout)");
  c_ren->add_flag("--force", force, "build even if the monodromy check fails");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "E:2:" << e.what() << "\n";
    return 2;
  }

  if (c_check->parsed()) {
    PencilData p = load_pencil(file);
    CheckResult r = check_monodromy(p);
    std::cout << check_json(r);
    if (!r.passed) {
      std::cerr << "E:1:monodromy check failed\n";
      return 1;
    }
    return 0;
  }

  if (c_tri->parsed()) {
    PencilData p = load_pencil(file);
    TrisectionDiagram d = build_diagram(p, force);
    write_output(out_path, serialize_diagram(p, d));
    return 0;
  }

  if (c_ver->parsed()) {
    PencilData p = load_pencil(file);
    TrisectionDiagram d = diagram_path.empty()
                              ? build_diagram(p, force)
                              : adopt_parsed(p, parse_diagram(read_file(diagram_path)));
    InvariantReport rep = verify_diagram(p, d);
    std::cout << serialize_report(rep, p.name);
    if (!rep.overall) {
      std::cerr << "E:1:verification failed\n";
      return 1;
    }
    return 0;
  }

  if (c_inv->parsed()) {
    PencilData p = load_pencil(file);
    TrisectionParameters tp =
        trisection_parameters(p.h, p.b, static_cast<unsigned>(p.l()));
    PencilInvariants pi = expected_invariants(p);
    std::cout << "g=" << tp.g << " k=" << tp.k << " chi=" << pi.euler
              << " H1=" << h1_string(pi.h1) << "\n";
    return 0;
  }

  if (c_cor->parsed()) {
    if (c_cor_list->parsed()) {
      for (const auto& e : corpus()) std::cout << e.name << "\n";
      return 0;
    }
    const CorpusEntry* e = corpus_find(show_name);
    if (!e) throw input_error("unknown corpus entry: " + show_name);
    nlohmann::ordered_json j;
    j["name"] = e->name;
    j["note"] = e->note;
    j["pencil"] = nlohmann::ordered_json::parse(serialize_pencil(e->pencil));
    j["expected"] = {{"g", e->params.g},
                     {"k", e->params.k},
                     {"euler", e->euler},
                     {"h1_free_rank", e->h1.free_rank},
                     {"monodromy_passes", e->monodromy_passes}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (c_ren->parsed()) {
    TrisectionDiagram d;
    bool is_diagram_file = false;
    std::string text;
    if (file.rfind("corpus:", 0) != 0) {
      text = read_file(file);
      auto j = nlohmann::json::parse(text, nullptr, false);
      is_diagram_file = j.is_object() && j.contains("families") && j.contains("basis");
    }
    if (is_diagram_file) {
      ParsedDiagram pd = parse_diagram(text);
      d.surface.g = pd.g;
      d.surface.labels = pd.basis;
      if (pd.basis.size() != 2 * std::size_t(pd.g))
        throw input_error("basis mismatch: label count must be 2g");
      d.families = pd.families;
      for (const auto& fam : d.families)
        for (const auto& c : fam)
          if (c.cls.size() != 2 * std::size_t(pd.g))
            throw input_error("basis mismatch: curve class length");
    } else {
      PencilData p = load_pencil(file);
      d = build_diagram(p, force);
    }
    write_output(out_path, render_svg(d));
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const no_convention_error& e) {
    std::cerr << "E:3:" << e.what() << "\n" << e.scorecard.dump(2) << "\n";
    return 3;
  } catch (const check_failure& e) {
    std::cerr << "E:1:" << e.what() << "\n";
    return 1;
  } catch (const input_error& e) {
    std::cerr << "E:2:" << e.what() << "\n";
    return 2;
  } catch (const internal_error& e) {
    std::cerr << "E:3:" << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "E:3:unexpected: " << e.what() << "\n";
    return 3;
  }
}
