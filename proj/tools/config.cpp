#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace nekcli {

using nek::Error;
using nek::ErrorKind;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty() || !std::isfinite(v))
    throw Error(ErrorKind::InvalidArgument, "not a finite number: '" + text + "'");
  return v;
}

template <typename T>
T parse_integer(const std::string& text) {
  const std::string t = trim(text);
  T v{};
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw Error(ErrorKind::InvalidArgument, "not an integer: '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (trim(s).empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

}  // namespace

cplx parse_complex(const std::string& text) {
  if (const auto at = text.find('@'); at != std::string::npos)
    return std::polar(parse_double(text.substr(0, at)), parse_double(text.substr(at + 1)));
  const auto parts = split(text, ',');
  if (parts.size() == 1) return parse_double(parts[0]);
  if (parts.size() == 2) return {parse_double(parts[0]), parse_double(parts[1])};
  throw Error(ErrorKind::InvalidArgument, "not a complex number: '" + text + "'");
}

Config::Config(const std::vector<KeySpec>& keys) {
  for (const auto& k : keys) values_[k.name] = k.fallback;
}

void Config::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::InvalidArgument, path + ":" + std::to_string(lineno) + ": expected key=value");
    set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void Config::set(const std::string& key, const std::string& value) {
  const auto it = values_.find(key);
  if (it == values_.end()) throw Error(ErrorKind::InvalidArgument, "unknown key '" + key + "'");
  it->second = value;
}

bool Config::has(const std::string& key) const { return !raw(key).empty(); }

const std::string& Config::raw(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw Error(ErrorKind::InvalidArgument, "unknown key '" + key + "'");
  return it->second;
}

const std::string& Config::str(const std::string& key) const { return raw(key); }

int Config::integer(const std::string& key) const { return parse_integer<int>(raw(key)); }

std::int64_t Config::int64(const std::string& key) const { return parse_integer<std::int64_t>(raw(key)); }

std::uint64_t Config::uint64(const std::string& key) const { return parse_integer<std::uint64_t>(raw(key)); }

double Config::real(const std::string& key) const { return parse_double(raw(key)); }

cplx Config::complex(const std::string& key) const { return parse_complex(raw(key)); }

std::vector<cplx> Config::complex_list(const std::string& key) const {
  std::vector<cplx> out;
  for (const auto& item : split(raw(key), ';')) out.push_back(parse_complex(item));
  return out;
}

std::vector<int> Config::int_list(const std::string& key) const {
  std::vector<int> out;
  for (const auto& item : split(raw(key), ',')) out.push_back(parse_integer<int>(item));
  return out;
}

}  // namespace nekcli
