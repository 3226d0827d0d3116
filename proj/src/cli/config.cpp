#include <charconv>
#include <fstream>
#include <sstream>

#include "serre/cli.hpp"

namespace serre::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_u64(std::string_view key, std::string_view value) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw InvalidInput("config: " + std::string(key) + " expects a non-negative integer, got '" + std::string(value) + "'");
  }
  return out;
}

}  // namespace

Config parse_config_text(std::string_view text, Config base) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw InvalidInput("config line " + std::to_string(line_no) + ": expected key=value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "ell_max") {
      base.ell_max = parse_u64(key, value);
    } else if (key == "p_max") {
      base.p_max = parse_u64(key, value);
    } else if (key == "workers") {
      base.workers = static_cast<unsigned>(parse_u64(key, value));
    } else if (key == "cache_dir") {
      base.cache_dir = std::filesystem::path(std::string(value));
    } else if (key == "output") {
      if (value == "json") {
        base.output = OutputFormat::Json;
      } else if (value == "text") {
        base.output = OutputFormat::Text;
      } else {
        throw InvalidInput("config: output must be json or text");
      }
    } else {
      throw InvalidInput("config line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    }
  }
  return base;
}

Config load_config_file(const std::filesystem::path& path, Config base) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), std::move(base));
}

}  // namespace serre::cli
