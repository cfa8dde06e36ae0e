#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <memory>

#include "CLI11.hpp"
#include "commands.hpp"

namespace nekcli {

using nek::Error;
using nek::ErrorKind;

namespace {

const std::vector<KeySpec> kCommonKeys = {
    {"format", "json", "json or csv"},
    {"out", "", "output file (default: standard output)"},
    {"seed", "1", "random seed"},
    {"threads", "0", "worker thread cap (0: hardware concurrency)"},
};

// Keys that do not change the computed values and stay out of meta.params.
bool is_plumbing(const std::string& key) { return key == "format" || key == "out" || key == "threads"; }

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateFactor:
    case ErrorKind::GridViolation:
    case ErrorKind::PoleHit:
    case ErrorKind::SingularKac:
    case ErrorKind::CapExceeded:
      return kDegenerate;
    default:
      return kBadInput;
  }
}

struct Bound {
  const Command* command = nullptr;
  CLI::App* app = nullptr;
  std::map<std::string, std::string> flags;
  std::string config_path;
  std::string positional_suite;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  CLI::App app{"Instanton partition function toolkit"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");  // -h is free for the highest weight
  std::vector<std::unique_ptr<Bound>> bound;
  for (const auto& cmd : commands()) {
    auto b = std::make_unique<Bound>();
    b->command = &cmd;
    b->app = app.add_subcommand(cmd.name, cmd.description);
    b->app->set_help_flag("--help", "print help");
    b->app->add_option("--config", b->config_path, "key=value file; flags override it");
    std::vector<KeySpec> keys = kCommonKeys;
    keys.insert(keys.end(), cmd.keys.begin(), cmd.keys.end());
    for (const auto& k : keys) {
      std::string help = k.help;
      if (!k.fallback.empty()) help += " [" + k.fallback + "]";
      b->app->add_option("--" + k.name, b->flags[k.name], help);
    }
    if (cmd.name == "verify") b->app->add_option("name", b->positional_suite, "suite name (same as --suite)");
    bound.push_back(std::move(b));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  const Bound* active = nullptr;
  for (const auto& b : bound)
    if (b->app->parsed()) active = b.get();

  try {
    std::vector<KeySpec> keys = kCommonKeys;
    keys.insert(keys.end(), active->command->keys.begin(), active->command->keys.end());
    Config config(keys);
    if (!active->config_path.empty()) config.load_file(active->config_path);
    for (const auto& k : keys) {
      if (active->app->count("--" + k.name) > 0) config.set(k.name, active->flags.at(k.name));
    }
    if (!active->positional_suite.empty()) config.set("suite", active->positional_suite);
    const std::string format = config.str("format");
    if (format != "json" && format != "csv") throw Error(ErrorKind::InvalidArgument, "format must be json or csv");
    const int threads = config.integer("threads");
    if (threads < 0) throw Error(ErrorKind::InvalidArgument, "threads must be nonnegative");
    nek::set_max_threads(static_cast<unsigned>(threads));

    Report report;
    report.command = active->command->name;
    report.seed = config.uint64("seed");
    for (const auto& [key, value] : config.values())
      if (!is_plumbing(key) && key != "seed") report.params[key] = value;
    active->command->run(config, report, err);

    std::ofstream file;
    std::ostream* sink = &out;
    if (config.has("out")) {
      file.open(config.str("out"), std::ios::binary);
      if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + config.str("out"));
      sink = &file;
    }
    if (format == "json") {
      write_json(report, *sink);
    } else {
      write_csv(report, *sink);
    }
    for (const auto& c : report.checks)
      if (!c.pass) err << "check failed: " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    err << "elapsed " << secs << " s\n";
    return report.all_pass() ? kOk : kVerificationFailure;
  } catch (const Error& e) {
    err << "error (" << nek::to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

}  // namespace nekcli
