#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"
#include "report.hpp"

namespace nekcli {

struct Command {
  std::string name;
  std::string description;
  std::vector<KeySpec> keys;  // command-specific; common keys are added by the driver
  std::function<void(const Config&, Report&, std::ostream& log)> run;
};

const std::vector<Command>& commands();

/// Names accepted by the verify command.
const std::vector<std::string>& verify_suites();
/// Runs one suite (or "all"), appending checks; timing goes to log.
void run_verify_suite(const std::string& suite, std::uint64_t seed, Report& report, std::ostream& log);

}  // namespace nekcli
