#include "trisect/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "trisect/errors.hpp"

namespace trisect {

namespace {

constexpr double kSize = 640.0;
constexpr double kCenter = 320.0;
constexpr double kRadius = 280.0;

struct Pt {
  double x, y;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

Pt vertex(std::size_t v, std::size_t total) {
  double a = -M_PI / 2 + 2 * M_PI * double(v) / double(total);
  return {kCenter + kRadius * std::cos(a), kCenter + kRadius * std::sin(a)};
}

// point on edge e at parameter u in (0,1)
Pt edge_point(std::size_t e, double u, std::size_t total) {
  Pt a = vertex(e, total), b = vertex((e + 1) % total, total);
  return {a.x + u * (b.x - a.x), a.y + u * (b.y - a.y)};
}

const char* family_color(int family) {
  switch (family) {
    case 1: return "red";
    case 2: return "blue";
    default: return "green";
  }
}

}  // namespace

std::string render_svg(const TrisectionDiagram& d) {
  const unsigned g = d.surface.g;
  if (g == 0) throw input_error("cannot render a genus-0 surface");
  const std::size_t edges = 4 * std::size_t(g);
  const std::size_t n = 2 * std::size_t(g);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
         "viewBox=\"0 0 640 640\">\n";
  out << "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";

  // 4g-gon; the edge word runs alpha beta alpha' beta' per symplectic pair,
  // primes marking the reversed copies
  out << "<polygon points=\"";
  for (std::size_t v = 0; v < edges; ++v) {
    Pt pt = vertex(v, edges);
    if (v) out << ' ';
    out << num(pt.x) << ',' << num(pt.y);
  }
  out << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  for (std::size_t p = 0; p < g; ++p) {
    for (int slot = 0; slot < 4; ++slot) {
      std::size_t e = 4 * p + slot;
      Pt m = edge_point(e, 0.5, edges);
      double fx = kCenter + (m.x - kCenter) * 1.07;
      double fy = kCenter + (m.y - kCenter) * 1.07;
      std::string label = d.surface.labels[2 * p + (slot % 2)];
      if (slot >= 2) label += "'";
      out << "<text x=\"" << num(fx) << "\" y=\"" << num(fy)
          << "\" font-size=\"11\" text-anchor=\"middle\" fill=\"#444\">" << label
          << "</text>\n";
    }
  }

  for (int f = 0; f < 3; ++f) {
    const auto& fam = d.families[f];
    for (std::size_t ci = 0; ci < fam.size(); ++ci) {
      const HomologyClass& cls = fam[ci].cls;
      if (cls.size() != n) throw input_error("basis mismatch: curve class length");
      double u = 0.30 + 0.40 * double(ci + 1) / double(fam.size() + 1);
      std::string path;
      std::string labels;
      for (std::size_t p = 0; p < g; ++p) {
        const mpz_class& alpha = cls[2 * p];
        const mpz_class& beta = cls[2 * p + 1];
        // a class running along the alpha direction crosses the beta edges
        if (alpha != 0) {
          Pt s = edge_point(4 * p + 1, u, edges), t = edge_point(4 * p + 3, u, edges);
          path += "M" + num(s.x) + " " + num(s.y) + " L" + num(t.x) + " " + num(t.y) + " ";
          if (alpha != 1 && alpha != -1)
            labels += "<text x=\"" + num((s.x + t.x) / 2) + "\" y=\"" +
                      num((s.y + t.y) / 2) + "\" font-size=\"10\" fill=\"" +
                      family_color(f + 1) + "\">" + alpha.get_str() + "</text>\n";
        }
        if (beta != 0) {
          Pt s = edge_point(4 * p, u, edges), t = edge_point(4 * p + 2, u, edges);
          path += "M" + num(s.x) + " " + num(s.y) + " L" + num(t.x) + " " + num(t.y) + " ";
          if (beta != 1 && beta != -1)
            labels += "<text x=\"" + num((s.x + t.x) / 2) + "\" y=\"" +
                      num((s.y + t.y) / 2) + "\" font-size=\"10\" fill=\"" +
                      family_color(f + 1) + "\">" + beta.get_str() + "</text>\n";
        }
      }
      if (!path.empty()) path.pop_back();
      out << "<path class=\"curve family" << (f + 1) << "\" d=\"" << path
          << "\" fill=\"none\" stroke=\"" << family_color(f + 1)
          << "\" stroke-width=\"1.2\" opacity=\"0.85\"/>\n";
      out << labels;
    }
  }

  out << "<text x=\"10\" y=\"630\" font-size=\"12\" fill=\"#888\">homology-schematic"
         "</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace trisect
