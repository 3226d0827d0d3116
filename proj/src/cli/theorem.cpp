#include <algorithm>

#include "serre/cli.hpp"
#include "serre/modcurve.hpp"

namespace serre::cli {

const std::vector<exact::Integer>& expected_integral_j() {
  static const std::vector<exact::Integer> kValues{-12288000, -884736, -32768, -5000, -1728, 0, 1728, 8000, 54000, 287496};
  return kValues;
}

const std::vector<exact::Integer>& expected_non_cm() {
  static const std::vector<exact::Integer> kValues{-5000, -1728};
  return kValues;
}

elliptic::EllipticCurveQ curve_e1() { return elliptic::EllipticCurveQ::from_coeffs(0, -1, 0, -208, 1412); }
elliptic::EllipticCurveQ curve_e2() { return elliptic::EllipticCurveQ::from_coeffs(0, 0, 0, -54, 216); }

TheoremReport verify_theorem(const Config& config) {
  TheoremReport report;
  for (int q : modcurve::supported_levels()) {
    report.integral_j[q] = modcurve::search_integral_j(q, config.workers).j_values;
    for (const auto& j : report.integral_j[q]) report.union_j.push_back(j);
  }
  std::sort(report.union_j.begin(), report.union_j.end());
  report.union_j.erase(std::unique(report.union_j.begin(), report.union_j.end()), report.union_j.end());
  report.union_matches = report.union_j == expected_integral_j();
  if (!report.union_matches) report.diagnostics.push_back("integral j-invariants differ from the expected ten values");

  for (const auto& j : report.union_j) {
    if (!elliptic::is_cm_j(j)) report.non_cm.push_back(j);
  }
  report.cm_filter_matches = report.non_cm == expected_non_cm();
  if (!report.cm_filter_matches) report.diagnostics.push_back("CM filter does not leave exactly {-5000, -1728}");

  report.curves = {curve_e1(), curve_e2()};
  bool scans_ok = true;
  if (config.p_max <= kScanFloor || exact::primes_up_to(config.p_max).back() <= kScanFloor) {
    report.diagnostics.push_back("empty scan: no primes in (" + std::to_string(kScanFloor) + ", " +
                                 std::to_string(config.p_max) + "]");
    scans_ok = false;
  } else {
    for (const auto& e : report.curves) {
      const auto traces = config.cache_dir
                              ? cached_trace_table(e, cache_path(*config.cache_dir, e), config.ell_max, config.workers)
                              : elliptic::trace_table(e, config.ell_max, config.workers);
      auto scan = galois::surjectivity_scan(e, traces, kScanFloor, config.p_max, config.ell_max);
      for (const auto& r : scan.reports) {
        if (r.verdict != galois::Verdict::ProvenSurjective) {
          report.diagnostics.push_back("undetermined: curve [" + e.label() + "] at p = " + std::to_string(r.p));
        }
      }
      scans_ok = scans_ok && scan.all_proven();
      report.scans.push_back(std::move(scan));
    }
  }
  report.confirmed = report.union_matches && report.cm_filter_matches && scans_ok;
  return report;
}

Json to_json(const TheoremReport& report) {
  auto ints = [](const std::vector<exact::Integer>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.to_string());
    return a;
  };
  Json out = Json::object();
  Json per_q = Json::object();
  for (const auto& [q, values] : report.integral_j) per_q[std::to_string(q)] = ints(values);
  out["integral_j"] = std::move(per_q);
  out["union"] = ints(report.union_j);
  out["non_cm"] = ints(report.non_cm);
  Json scans = Json::array();
  for (std::size_t i = 0; i < report.scans.size(); ++i) scans.push_back(to_json(report.scans[i], report.curves[i]));
  out["scans"] = std::move(scans);
  Json undetermined = Json::array();
  for (std::size_t i = 0; i < report.scans.size(); ++i) {
    for (const auto& r : report.scans[i].reports) {
      if (r.verdict == galois::Verdict::ProvenSurjective) continue;
      Json entry = Json::object();
      entry["curve"] = curve_json(report.curves[i]);
      entry["p"] = r.p;
      undetermined.push_back(std::move(entry));
    }
  }
  out["undetermined"] = std::move(undetermined);
  out["diagnostics"] = report.diagnostics;
  out["verdict"] = report.confirmed ? "confirmed" : "not_confirmed";
  return out;
}

}  // namespace serre::cli
