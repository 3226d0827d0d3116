#include <charconv>
#include <fstream>

#include "serre/cli.hpp"

namespace serre::cli {

namespace {

std::string header_line(const elliptic::EllipticCurveQ& e) { return "# curve " + e.label(); }

template <typename T>
bool parse_number(std::string_view s, T& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

std::filesystem::path cache_path(const std::filesystem::path& dir, const elliptic::EllipticCurveQ& e) {
  std::string name = "curve";
  for (const auto& a : e.coeffs()) {
    std::string s = a.to_string();
    if (!s.empty() && s[0] == '-') s[0] = 'm';
    name += "_" + s;
  }
  return dir / (name + ".traces");
}

std::vector<elliptic::FrobeniusTrace> cache_load(const elliptic::EllipticCurveQ& e, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CacheMismatch("cannot open trace cache " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != header_line(e)) {
    throw CacheMismatch("trace cache " + path.string() + " does not belong to curve [" + e.label() + "]");
  }
  std::vector<elliptic::FrobeniusTrace> table;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    elliptic::FrobeniusTrace t;
    if (comma == std::string::npos || !parse_number(std::string_view(line).substr(0, comma), t.ell) ||
        !parse_number(std::string_view(line).substr(comma + 1), t.a_ell)) {
      throw CacheMismatch("malformed record at " + path.string() + ":" + std::to_string(line_no));
    }
    if (!table.empty() && t.ell <= table.back().ell) {
      throw CacheMismatch("records out of order at " + path.string() + ":" + std::to_string(line_no));
    }
    table.push_back(t);
  }
  return table;
}

void cache_store(const elliptic::EllipticCurveQ& e, const std::filesystem::path& path,
                 const std::vector<elliptic::FrobeniusTrace>& table) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write trace cache " + path.string());
  out << header_line(e) << '\n';
  for (const auto& t : table) out << t.ell << ',' << t.a_ell << '\n';
}

std::vector<elliptic::FrobeniusTrace> cached_trace_table(const elliptic::EllipticCurveQ& e,
                                                         const std::filesystem::path& path, std::uint64_t ell_max,
                                                         unsigned workers) {
  std::vector<elliptic::FrobeniusTrace> table;
  std::uint64_t covered = 0;
  if (std::filesystem::exists(path)) {
    table = cache_load(e, path);
    if (!table.empty()) covered = table.back().ell;
  } else {
    cache_store(e, path, {});
  }

  if (ell_max > covered) {
    // Everything good up to `covered` is on file; compute the rest and append.
    const auto fresh = elliptic::trace_table(e, covered + 1, ell_max, workers);
    if (!fresh.empty()) {
      std::ofstream out(path, std::ios::app);
      if (!out) throw Error("cannot append to trace cache " + path.string());
      for (const auto& t : fresh) out << t.ell << ',' << t.a_ell << '\n';
      table.insert(table.end(), fresh.begin(), fresh.end());
    }
  }

  std::erase_if(table, [&](const elliptic::FrobeniusTrace& t) { return t.ell > ell_max; });
  return table;
}

}  // namespace serre::cli
