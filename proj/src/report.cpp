#include "seifert/report.hpp"

#include <sstream>

#include "seifert/notation.hpp"

namespace seifert::report {

namespace {

const char* kind_name(ComponentKind k) {
  return k == ComponentKind::Reducible ? "reducible" : "irreducible";
}

std::string sign_str(Sign s) { return std::string(1, sign_char(s)); }

}  // namespace

Json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return Json(n.get_si());
  return Json(n.get_str());
}

Json rational_json(const Rational& r) {
  if (r.is_integer()) return integer_json(r.num());
  return Json(r.str());
}

Json data_json(const BundleData& e) {
  Json arr = Json::array();
  arr.push_back(integer_json(e.background()));
  for (auto b : e.locals()) arr.push_back(b);
  return arr;
}

Json floer_json(const FloerTable& table) {
  Json out;
  out["manifold"] = notation::format(table.manifold);
  Json comps = Json::array();
  for (const auto& g : table.generators) {
    Json c;
    c["data"] = data_json(g.data);
    c["sign"] = sign_str(g.sign);
    c["dim"] = integer_json(g.data.background());
    c["grading"] = integer_json(g.grading);
    c["cs"] = cs_coefficient(table.manifold, g.data).str();
    comps.push_back(std::move(c));
  }
  out["components"] = std::move(comps);
  Json hf = Json::object();
  for (const auto& [grading, rank] : table.ranks) hf[grading.get_str()] = rank;
  out["hf"] = std::move(hf);
  return out;
}

std::string floer_text(const FloerTable& table) {
  std::ostringstream os;
  os << notation::format(table.manifold) << '\n';
  for (const auto& g : table.generators)
    os << "  " << notation::format(g.data) << ' ' << sign_char(g.sign) << "  grading "
       << g.grading.get_str() << "  cs " << cs_coefficient(table.manifold, g.data).str() << '\n';
  if (table.ranks.empty()) os << "HF = 0\n";
  for (const auto& [grading, rank] : table.ranks)
    os << "HF_" << grading.get_str() << " = Z^" << rank << '\n';
  return os.str();
}

std::string floer_csv(const FloerTable& table) {
  std::ostringstream os;
  os << "data,sign,dim,grading,cs\n";
  for (const auto& g : table.generators)
    os << '"' << notation::format(g.data) << "\"," << sign_char(g.sign) << ','
       << g.data.background().get_str() << ',' << g.grading.get_str() << ','
       << cs_coefficient(table.manifold, g.data).str() << '\n';
  return os.str();
}

Json components_json(const SeifertFibration& y, const CriticalSet& set) {
  Json out;
  out["manifold"] = notation::format(y);
  Json comps = Json::array();
  for (const auto& c : set.components) {
    Json j;
    j["kind"] = kind_name(c.kind);
    j["data"] = data_json(c.data);
    if (c.kind == ComponentKind::Irreducible) j["sign"] = sign_str(c.sign);
    j["degree"] = degree(c.data).str();
    j["dim"] = integer_json(c.complex_dim);
    if (c.kind == ComponentKind::Irreducible) j["grading"] = rational_json(c.grading);
    j["cs"] = c.cs_coefficient.str();
    comps.push_back(std::move(j));
  }
  out["components"] = std::move(comps);
  Json boundary = Json::array();
  for (const auto& b : set.boundary) boundary.push_back(data_json(b));
  out["boundary"] = std::move(boundary);
  return out;
}

std::string components_text(const SeifertFibration& y, const CriticalSet& set) {
  std::ostringstream os;
  os << notation::format(y) << '\n';
  for (const auto& c : set.components) {
    os << "  " << kind_name(c.kind) << ' ';
    if (c.kind == ComponentKind::Irreducible) os << sign_char(c.sign) << ' ';
    os << notation::format(c.data) << "  deg " << degree(c.data).str() << "  dim "
       << c.complex_dim.get_str();
    if (c.kind == ComponentKind::Irreducible) os << "  grading " << c.grading.str();
    os << "  cs " << c.cs_coefficient.str() << '\n';
  }
  return os.str();
}

std::string components_csv(const SeifertFibration& y, const CriticalSet& set) {
  (void)y;
  std::ostringstream os;
  os << "kind,sign,data,degree,dim,grading,cs\n";
  for (const auto& c : set.components) {
    const bool irr = c.kind == ComponentKind::Irreducible;
    os << kind_name(c.kind) << ',' << (irr ? sign_str(c.sign) : "") << ",\"" << notation::format(c.data)
       << "\"," << degree(c.data).str() << ',' << c.complex_dim.get_str() << ','
       << (irr ? c.grading.str() : "") << ',' << c.cs_coefficient.str() << '\n';
  }
  return os.str();
}

}  // namespace seifert::report
