#include "report.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "version.hpp"

namespace nekcli {

json to_json(nek::cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void Report::check(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

json report_json(const Report& r) {
  json j;
  j["meta"] = {{"version", kVersion}, {"seed", r.seed}, {"command", r.command}, {"params", r.params}};
  j["rows"] = json::array();
  for (const auto& row : r.rows) j["rows"].push_back(row);
  j["checks"] = json::array();
  for (const auto& c : r.checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return j;
}

void write_json(const Report& r, std::ostream& out) { out << report_json(r).dump(2) << '\n'; }

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string scalar_text(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return format_double(v.get<double>());
  return v.dump();
}

void flatten(const json& row, std::vector<std::pair<std::string, std::string>>& out) {
  for (const auto& [key, v] : row.items()) {
    if (v.is_object() && v.contains("re") && v.contains("im") && v.size() == 2) {
      out.emplace_back(key + "_re", scalar_text(v["re"]));
      out.emplace_back(key + "_im", scalar_text(v["im"]));
    } else {
      out.emplace_back(key, v.is_structured() ? v.dump() : scalar_text(v));
    }
  }
}

void write_table(const std::vector<json>& rows, std::ostream& out) {
  std::vector<std::vector<std::pair<std::string, std::string>>> flat(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) flatten(rows[i], flat[i]);
  std::vector<std::string> header;
  for (const auto& row : flat)
    for (const auto& [k, v] : row)
      if (std::find(header.begin(), header.end(), k) == header.end()) header.push_back(k);
  for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << csv_field(header[c]);
  out << "\r\n";
  for (const auto& row : flat) {
    std::map<std::string, std::string> cells(row.begin(), row.end());
    for (std::size_t c = 0; c < header.size(); ++c) {
      const auto it = cells.find(header[c]);
      out << (c ? "," : "") << (it == cells.end() ? "" : csv_field(it->second));
    }
    out << "\r\n";
  }
}

}  // namespace

void write_csv(const Report& r, std::ostream& out) {
  if (!r.rows.empty()) {
    write_table(r.rows, out);
    return;
  }
  if (r.checks.empty()) {
    out << "name,pass,detail\r\n";
    return;
  }
  std::vector<json> rows;
  for (const auto& c : r.checks) rows.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  write_table(rows, out);
}

}  // namespace nekcli
