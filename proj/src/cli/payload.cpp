#include <sstream>

#include "serre/cli.hpp"

namespace serre::cli {

namespace {

Json integer_json(const exact::Integer& v) {
  if (v.fits_int64()) return Json(v.to_int64());
  return Json(v.to_string());
}

Json optional_json(const std::optional<std::uint64_t>& v) { return v ? Json(*v) : Json(nullptr); }

void flatten(const Json& node, const std::string& prefix, std::ostringstream& os) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, os);
  } else if (node.is_array() && !node.empty() && (node.front().is_object() || node.front().is_array())) {
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], prefix + "[" + std::to_string(i) + "]", os);
  } else if (node.is_array()) {
    os << prefix << ":";
    for (const auto& v : node) os << ' ' << (v.is_string() ? v.get<std::string>() : v.dump());
    os << '\n';
  } else {
    os << prefix << ": " << (node.is_string() ? node.get<std::string>() : node.dump()) << '\n';
  }
}

}  // namespace

Json curve_json(const elliptic::EllipticCurveQ& e) {
  Json out = Json::array();
  for (const auto& a : e.coeffs()) out.push_back(integer_json(a));
  return out;
}

Json to_json(const galois::ImageReport& report, const elliptic::EllipticCurveQ& e) {
  Json classes = Json::object();
  for (auto c : galois::kAllClasses) classes[galois::to_string(c)] = optional_json(report.witness_for(c));
  Json out = Json::object();
  out["curve"] = curve_json(e);
  out["p"] = report.p;
  out["ell_max"] = report.ell_max;
  out["classes"] = std::move(classes);
  out["verdict"] = galois::to_string(report.verdict);
  return out;
}

Json to_json(const galois::SurjectivityScan& scan, const elliptic::EllipticCurveQ& e) {
  Json reports = Json::array();
  for (const auto& r : scan.reports) reports.push_back(to_json(r, e));
  Json out = Json::object();
  out["curve"] = curve_json(e);
  out["p_min"] = scan.p_min;
  out["p_max"] = scan.p_max;
  out["ell_max"] = scan.ell_max;
  out["all_proven"] = scan.all_proven();
  out["reports"] = std::move(reports);
  return out;
}

Json to_json(const qcurve::QuadraticFieldData& k, const exact::Integer& bound) {
  Json out = Json::object();
  out["D"] = k.D;
  out["disc"] = k.disc;
  out["f"] = k.f;
  out["h"] = k.h;
  out["h_plus"] = k.h_plus;
  out["bound"] = integer_json(bound);
  return out;
}

Json to_json(const qcurve::ResidueScan& scan) {
  Json out = Json::object();
  out["p"] = scan.p;
  out["d"] = integer_json(scan.d);
  out["violations"] = scan.violations;
  out["minkowski_ok"] = scan.minkowski_ok;
  out["h_minus_p"] = scan.h_minus_p;
  out["m_bound"] = scan.m_bound;
  return out;
}

std::string render_text(const Json& payload) {
  std::ostringstream os;
  if (payload.is_array()) {
    for (const auto& v : payload) os << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    return os.str();
  }
  flatten(payload, "", os);
  return os.str();
}

}  // namespace serre::cli
