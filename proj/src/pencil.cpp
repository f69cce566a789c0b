#include "trisect/pencil.hpp"

#include <numeric>

#include <nlohmann/json.hpp>

#include "trisect/errors.hpp"

namespace trisect {

using nlohmann::ordered_json;

namespace {

void reject_unknown_keys(const ordered_json& obj, std::initializer_list<const char*> allowed,
                         const char* where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) ok = true;
    if (!ok) throw input_error(std::string("unknown key \"") + it.key() + "\" in " + where);
  }
}

bool primitive_or_zero(const HomologyClass& c) {
  mpz_class g = 0;
  for (const mpz_class& x : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g == 0 || g == 1;
}

}  // namespace

PencilData parse_pencil(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw input_error(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw input_error("pencil JSON must be an object");
  reject_unknown_keys(j, {"name", "h", "b", "cycles"}, "pencil");
  if (!j.contains("h") || !j["h"].is_number_unsigned())
    throw input_error("h must be a non-negative integer");
  if (!j.contains("b") || !j["b"].is_number_unsigned())
    throw input_error("b must be a positive integer");
  PencilData p;
  p.h = j["h"].get<unsigned>();
  p.b = j["b"].get<unsigned>();
  if (p.b < 1) throw input_error("b must be at least 1: base locus is nonempty");
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw input_error("name must be a string");
    p.name = j["name"].get<std::string>();
  }
  if (!j.contains("cycles") || !j["cycles"].is_array())
    throw input_error("cycles must be an array");
  const std::size_t rank = 2 * std::size_t(p.h) + p.b - 1;
  for (const auto& jc : j["cycles"]) {
    if (!jc.is_object()) throw input_error("each cycle must be an object");
    reject_unknown_keys(jc, {"class", "sign", "label"}, "cycle");
    if (!jc.contains("class") || !jc["class"].is_array())
      throw input_error("cycle class must be an array");
    VanishingCycle c;
    for (const auto& x : jc["class"]) {
      if (!x.is_number_integer()) throw input_error("cycle class entries must be integers");
      c.cls.emplace_back(static_cast<long>(x.get<long long>()));
    }
    if (c.cls.size() != rank)
      throw input_error("cycle class length must be " + std::to_string(rank));
    if (!jc.contains("sign") || !jc["sign"].is_number_integer())
      throw input_error("chirality must be +1 or -1");
    long long s = jc["sign"].get<long long>();
    if (s != 1 && s != -1) throw input_error("chirality must be +1 or -1");
    c.chirality = static_cast<int>(s);
    if (jc.contains("label")) {
      if (!jc["label"].is_string()) throw input_error("label must be a string");
      c.label = jc["label"].get<std::string>();
    }
    p.cycles.push_back(std::move(c));
  }
  validate_pencil(p);
  return p;
}

std::string serialize_pencil(const PencilData& p) {
  ordered_json j;
  if (!p.name.empty()) j["name"] = p.name;
  j["h"] = p.h;
  j["b"] = p.b;
  j["cycles"] = ordered_json::array();
  for (const auto& c : p.cycles) {
    ordered_json jc;
    ordered_json cls = ordered_json::array();
    for (const mpz_class& x : c.cls) {
      if (!x.fits_slong_p()) throw internal_error("cycle coordinate exceeds serializable range");
      cls.push_back(x.get_si());
    }
    jc["class"] = std::move(cls);
    jc["sign"] = c.chirality;
    if (!c.label.empty()) jc["label"] = c.label;
    j["cycles"].push_back(std::move(jc));
  }
  return j.dump(2) + "\n";
}

void validate_pencil(const PencilData& p) {
  if (p.b < 1) throw input_error("b must be at least 1: base locus is nonempty");
  const std::size_t rank = 2 * std::size_t(p.h) + p.b - 1;
  for (std::size_t i = 0; i < p.cycles.size(); ++i) {
    const auto& c = p.cycles[i];
    if (c.cls.size() != rank)
      throw input_error("cycle " + std::to_string(i + 1) + " class length must be " +
                        std::to_string(rank));
    if (c.chirality != 1 && c.chirality != -1)
      throw input_error("chirality must be +1 or -1");
    if (!primitive_or_zero(c.cls))
      throw input_error("cycle " + std::to_string(i + 1) +
                        " class must be primitive or zero");
  }
}

IntegerMatrix homological_monodromy(const PencilData& p) {
  validate_pencil(p);
  FiberBasis f = fiber_basis(p.h, p.b);
  IntegerMatrix form = fiber_intersection_form(f);
  IntegerMatrix m = IntegerMatrix::identity(f.rank());
  for (const auto& c : p.cycles)
    m = multiply(transvection_matrix(form, c.cls, c.chirality), m);
  return m;
}

CheckResult check_monodromy(const PencilData& p) {
  IntegerMatrix m = homological_monodromy(p);
  CheckResult r;
  r.name = "monodromy_identity";
  r.passed = m.is_identity();
  r.details["rank"] = m.rows;
  r.details["note"] = "necessary but not sufficient: only the action on fiber homology is checked";
  if (!r.passed) {
    ordered_json dev = ordered_json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t j = 0; j < m.cols; ++j) {
        mpz_class x = m.at(i, j) - (i == j ? 1 : 0);
        row.push_back(x.get_si());
      }
      dev.push_back(std::move(row));
    }
    r.details["deviation"] = std::move(dev);
  }
  return r;
}

PencilInvariants expected_invariants(const PencilData& p) {
  validate_pencil(p);
  PencilInvariants out;
  out.euler = 2L * (2 - 2 * long(p.h)) + long(p.l()) - long(p.b);
  std::vector<HomologyClass> capped;
  capped.reserve(p.cycles.size());
  for (const auto& c : p.cycles)
    capped.emplace_back(c.cls.begin(), c.cls.begin() + 2 * p.h);
  out.h1 = cokernel_divisors(2 * std::size_t(p.h), capped);
  return out;
}

}  // namespace trisect
