#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "nek/common.hpp"

namespace nekcli {

using json = nlohmann::ordered_json;

json to_json(nek::cplx z);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string command;
  std::uint64_t seed = 0;
  json params = json::object();
  std::vector<json> rows;
  std::vector<Check> checks;

  bool all_pass() const;
  void check(std::string name, bool pass, std::string detail);
};

json report_json(const Report& r);
void write_json(const Report& r, std::ostream& out);
/// Rows as CSV with a header; complex fields become name_re, name_im. A
/// report without rows writes its checks instead.
void write_csv(const Report& r, std::ostream& out);

/// Shortest round-trip decimal form.
std::string format_double(double x);

}  // namespace nekcli
