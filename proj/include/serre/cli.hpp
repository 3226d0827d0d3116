#pragma once

// Command-line front end. Commands share one Config, emit JSON payloads and
// may persist Frobenius traces in a per-curve cache.

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "serre/elliptic.hpp"
#include "serre/galois.hpp"
#include "serre/qcurve.hpp"

namespace serre::cli {

using Json = nlohmann::ordered_json;

/// Process exit codes.
enum ExitCode : int { kSuccess = 0, kIncomplete = 1, kInvalidInput = 2, kCmGuard = 3 };

enum class OutputFormat { Json, Text };

struct Config {
  std::uint64_t ell_max = 100000;
  std::uint64_t p_max = 200;
  std::optional<std::filesystem::path> cache_dir;
  OutputFormat output = OutputFormat::Json;
  unsigned workers = 1;
};

/// Environment variable that overrides the cache directory of a config file.
inline constexpr const char* kCacheDirEnv = "SERRE_CACHE_DIR";

/// Applies `key = value` lines (ell_max, p_max, cache_dir, output, workers)
/// on top of `base`. Blank lines and '#' comments are ignored. Throws
/// InvalidInput on unknown keys or malformed values.
Config load_config_file(const std::filesystem::path& path, Config base = {});
Config parse_config_text(std::string_view text, Config base = {});

// ---- trace cache -----------------------------------------------------------

/// "<dir>/curve_<a1>_<a2>_<a3>_<a4>_<a6>.traces" with '-' written as 'm'.
std::filesystem::path cache_path(const std::filesystem::path& dir, const elliptic::EllipticCurveQ& e);

/// Reads `ell,a_ell` records. Throws CacheMismatch when the header names a
/// different curve or a record is malformed or out of order.
std::vector<elliptic::FrobeniusTrace> cache_load(const elliptic::EllipticCurveQ& e, const std::filesystem::path& path);

/// Writes header and records, replacing any existing file.
void cache_store(const elliptic::EllipticCurveQ& e, const std::filesystem::path& path,
                 const std::vector<elliptic::FrobeniusTrace>& table);

/// The table of good primes up to ell_max. Primes already on file are read
/// back. Missing ones are computed and appended in ell order.
std::vector<elliptic::FrobeniusTrace> cached_trace_table(const elliptic::EllipticCurveQ& e,
                                                         const std::filesystem::path& path, std::uint64_t ell_max,
                                                         unsigned workers = 1);

// ---- payloads --------------------------------------------------------------

Json curve_json(const elliptic::EllipticCurveQ& e);
Json to_json(const galois::ImageReport& report, const elliptic::EllipticCurveQ& e);
Json to_json(const galois::SurjectivityScan& scan, const elliptic::EllipticCurveQ& e);
Json to_json(const qcurve::QuadraticFieldData& k, const exact::Integer& bound);
Json to_json(const qcurve::ResidueScan& scan);

/// Flattened `path: value` lines, one per scalar.
std::string render_text(const Json& payload);

// ---- theorem replay --------------------------------------------------------

struct TheoremReport {
  std::map<int, std::vector<exact::Integer>> integral_j;
  std::vector<exact::Integer> union_j;
  std::vector<exact::Integer> non_cm;
  std::vector<elliptic::EllipticCurveQ> curves;
  std::vector<galois::SurjectivityScan> scans;
  std::vector<std::string> diagnostics;
  bool union_matches = false;
  bool cm_filter_matches = false;
  bool confirmed = false;
};

/// The ten integral j-invariants of X_sp^+(q), q in {3, 5, 7}, ascending.
const std::vector<exact::Integer>& expected_integral_j();
/// The two non-CM survivors, ascending.
const std::vector<exact::Integer>& expected_non_cm();
/// y^2 = x^3 - x^2 - 208x + 1412 and y^2 = x^3 - 54x + 216.
elliptic::EllipticCurveQ curve_e1();
elliptic::EllipticCurveQ curve_e2();

/// Scans start above this prime.
inline constexpr std::uint64_t kScanFloor = 37;

/// enumerate -> CM filter -> surjectivity scans of E1, E2 over (37, p_max].
TheoremReport verify_theorem(const Config& config);
Json to_json(const TheoremReport& report);

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace serre::cli
