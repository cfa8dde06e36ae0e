#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nek/common.hpp"

namespace nekcli {

using nek::cplx;

struct KeySpec {
  std::string name;
  std::string fallback;  // empty means "unset"
  std::string help;
};

/// Merged key=value settings: defaults, then a config file, then flags.
class Config {
 public:
  explicit Config(const std::vector<KeySpec>& keys);

  /// Reads key=value lines; '#' starts a comment. Unknown keys are errors.
  void load_file(const std::string& path);
  void set(const std::string& key, const std::string& value);

  bool has(const std::string& key) const;
  const std::string& str(const std::string& key) const;
  int integer(const std::string& key) const;
  std::int64_t int64(const std::string& key) const;
  std::uint64_t uint64(const std::string& key) const;
  double real(const std::string& key) const;
  cplx complex(const std::string& key) const;
  std::vector<cplx> complex_list(const std::string& key) const;
  std::vector<int> int_list(const std::string& key) const;

  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  const std::string& raw(const std::string& key) const;
  std::map<std::string, std::string> values_;
};

/// "x", "x,y" (real, imaginary) or "r@phi" (polar).
cplx parse_complex(const std::string& text);

}  // namespace nekcli
