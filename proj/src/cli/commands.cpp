#include <cstdlib>
#include <ostream>
#include <set>

#include <CLI11.hpp>

#include "serre/cli.hpp"
#include "serre/modcurve.hpp"

namespace serre::cli {

namespace {

struct Flags {
  std::string config_path;
  std::string output;
  std::string cache_dir;
  unsigned workers = 0;
  std::uint64_t ell_max = 0;
  std::uint64_t p_max = 0;
};

Config resolve_config(const Flags& flags) {
  Config cfg;
  if (!flags.config_path.empty()) cfg = load_config_file(flags.config_path, cfg);
  if (const char* env = std::getenv(kCacheDirEnv); env != nullptr && *env != '\0') cfg.cache_dir = std::filesystem::path(env);
  if (!flags.output.empty()) cfg.output = flags.output == "text" ? OutputFormat::Text : OutputFormat::Json;
  if (!flags.cache_dir.empty()) cfg.cache_dir = std::filesystem::path(flags.cache_dir);
  if (flags.workers != 0) cfg.workers = flags.workers;
  if (flags.ell_max != 0) cfg.ell_max = flags.ell_max;
  if (flags.p_max != 0) cfg.p_max = flags.p_max;
  return cfg;
}

void emit(const Json& payload, const Config& cfg, std::ostream& out) {
  if (cfg.output == OutputFormat::Text) {
    out << render_text(payload);
  } else {
    out << payload.dump(2) << '\n';
  }
}

Json decimal_array(const std::vector<exact::Integer>& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(v.to_string());
  return a;
}

int cmd_enumerate_integral_j(const std::string& q_arg, const Config& cfg, std::ostream& out) {
  std::vector<exact::Integer> values;
  if (q_arg == "all") {
    std::set<exact::Integer> all;
    for (int q : modcurve::supported_levels()) {
      for (auto& j : modcurve::search_integral_j(q, cfg.workers).j_values) all.insert(j);
    }
    values.assign(all.begin(), all.end());
  } else if (q_arg == "3" || q_arg == "5" || q_arg == "7") {
    values = modcurve::search_integral_j(std::stoi(q_arg), cfg.workers).j_values;
  } else {
    throw InvalidInput("--q must be 3, 5, 7 or all, got '" + q_arg + "'");
  }
  emit(decimal_array(values), cfg, out);
  return kSuccess;
}

int cmd_verify_theorem(const Config& cfg, std::ostream& out, std::ostream& err) {
  const TheoremReport report = verify_theorem(cfg);
  emit(to_json(report), cfg, out);
  if (report.confirmed) return kSuccess;
  for (const auto& d : report.diagnostics) err << "verify-theorem: " << d << '\n';
  return kIncomplete;
}

int cmd_classify(const std::string& curve_arg, std::uint64_t p, const Config& cfg, std::ostream& out) {
  const auto e = elliptic::EllipticCurveQ::parse(curve_arg);
  if (elliptic::is_cm_j(e.j())) {
    throw CmCurve("curve [" + e.label() + "] has CM (j = " + e.j().to_string() + "); refusing to classify");
  }
  const auto traces = cfg.cache_dir ? cached_trace_table(e, cache_path(*cfg.cache_dir, e), cfg.ell_max, cfg.workers)
                                    : elliptic::trace_table(e, cfg.ell_max, cfg.workers);
  const auto report = galois::classify_from_traces(traces, p, cfg.ell_max);
  emit(to_json(report, e), cfg, out);
  return report.verdict == galois::Verdict::ProvenSurjective ? kSuccess : kIncomplete;
}

int cmd_qcurve_bound(std::int64_t D, const Config& cfg, std::ostream& out) {
  const auto k = qcurve::field_data(D);
  emit(to_json(k, qcurve::noborel_bound(k.f, k.h_plus)), cfg, out);
  return kSuccess;
}

int cmd_kprops(std::uint64_t p, const Config& cfg, std::ostream& out) {
  const auto solutions = qcurve::kprops_solutions(p);
  Json list = Json::array();
  bool case2 = false;
  for (const auto& s : solutions) {
    Json item = Json::object();
    item["e"] = s.e;
    item["a"] = s.a;
    item["b"] = s.b;
    item["k"] = s.k;
    item["case"] = qcurve::to_string(s.label);
    list.push_back(std::move(item));
    case2 = case2 || s.label == qcurve::KpropsCase::Case2;
  }
  Json payload = Json::object();
  payload["p"] = p;
  payload["solutions"] = std::move(list);
  payload["case2"] = case2;
  emit(payload, cfg, out);
  return kSuccess;
}

int cmd_residue_scan(std::uint64_t p, const std::string& d_arg, std::optional<std::int64_t> field,
                     const std::vector<std::uint64_t>& ramified, const Config& cfg, std::ostream& out) {
  std::set<std::uint64_t> ram(ramified.begin(), ramified.end());
  if (field) {
    for (auto ell : qcurve::ramified_primes(*field)) ram.insert(ell);
  }
  emit(to_json(qcurve::residue_scan(p, exact::Integer::parse(d_arg), ram)), cfg, out);
  return kSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integral j-invariants on X_sp^+(q), mod-p surjectivity witnesses and Q-curve bounds", "serre"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags flags;
  app.add_option("--config", flags.config_path, "key=value config file, applied before flags");
  app.add_option("--output", flags.output, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--cache-dir", flags.cache_dir, "directory for per-curve trace caches");
  app.add_option("--workers", flags.workers, "threads for trace and window scans")->check(CLI::Range(1U, 1024U));

  std::string q_arg;
  auto* enumerate = app.add_subcommand("enumerate-integral-j", "integral j-invariants of rational points of X_sp^+(q)");
  enumerate->add_option("--q", q_arg, "3, 5, 7 or all")->required();

  auto* verify = app.add_subcommand("verify-theorem", "replay the integral-j and surjectivity computation");
  verify->add_option("--ell-max", flags.ell_max, "largest witness prime (default 100000)");
  verify->add_option("--p-max", flags.p_max, "largest p scanned (default 200)");

  std::string curve_arg;
  std::uint64_t p = 0;
  auto* classify = app.add_subcommand("classify", "Frobenius witnesses for one curve and one prime");
  classify->add_option("--curve", curve_arg, "a1,a2,a3,a4,a6")->required();
  classify->add_option("--p", p, "prime >= 5")->required();
  classify->add_option("--ell-max", flags.ell_max, "largest witness prime (default 100000)");

  std::int64_t disc = 0;
  auto* bound = app.add_subcommand("qcurve-bound", "2^(6fc+1)(2^(6fc)+1) for K = Q(sqrt D)");
  bound->add_option("--disc", disc, "squarefree D")->required();

  std::uint64_t kp = 0;
  auto* kprops = app.add_subcommand("kprops", "solutions of the tame inertia exponent congruences");
  kprops->add_option("--p", kp, "prime >= 5")->required();

  std::uint64_t rp = 0;
  std::string d_arg;
  std::int64_t field = 0;
  std::vector<std::uint64_t> ramified;
  auto* residue = app.add_subcommand("residue-scan", "quadratic-residue endgame for p = 3 (mod 4)");
  residue->add_option("--p", rp, "prime = 3 (mod 4)")->required();
  residue->add_option("--d", d_arg, "isogeny degree d")->required();
  auto* field_opt = residue->add_option("--field", field, "squarefree D of K; its ramified primes are excluded");
  residue->add_option("--ramified", ramified, "extra ramified primes to exclude")->delimiter(',');

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "serre: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    const Config cfg = resolve_config(flags);
    if (*enumerate) return cmd_enumerate_integral_j(q_arg, cfg, out);
    if (*verify) return cmd_verify_theorem(cfg, out, err);
    if (*classify) return cmd_classify(curve_arg, p, cfg, out);
    if (*bound) return cmd_qcurve_bound(disc, cfg, out);
    if (*kprops) return cmd_kprops(kp, cfg, out);
    if (*residue) {
      return cmd_residue_scan(rp, d_arg, *field_opt ? std::optional<std::int64_t>(field) : std::nullopt, ramified, cfg,
                              out);
    }
  } catch (const CmCurve& e) {
    err << "serre: " << e.what() << '\n';
    return kCmGuard;
  } catch (const EmptyScan& e) {
    err << "serre: " << e.what() << '\n';
    return kIncomplete;
  } catch (const InvalidInput& e) {
    err << "serre: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const SingularCurve& e) {
    err << "serre: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const UnsupportedPrime& e) {
    err << "serre: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const CacheMismatch& e) {
    err << "serre: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const Error& e) {
    err << "serre: " << e.what() << '\n';
    return kIncomplete;
  }
  return kInvalidInput;
}

}  // namespace serre::cli
