// Batch front-end: named subcommands wrapping the experiments and demos,
// strict JSON config in, CSV or JSON out, reproducible seeds.
//
// Exit codes: 0 success, 1 bound-verdict failure (some estimate fell outside
// its bounds beyond the confidence interval), 2 config error, 3 I/O error.

#ifndef RSS_CLI_HPP
#define RSS_CLI_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace rss {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdict = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t master_seed = 0;
  std::string output_path;  // empty = stdout
  std::string format = "json";
  int workers = 1;

  nlohmann::json resolved() const;
};

// Strict parse: unknown keys anywhere in the config are rejected with a
// ConfigError naming the offending field.
RunConfig parse_config(const nlohmann::json& j);

// Executes the command and writes the result atomically; returns an exit code.
int run(const RunConfig& config);

struct CliOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<int> workers;
};

// Loads the config file, applies command-line overrides, runs.
int run_config_file(const std::string& path, const CliOverrides& overrides);

}  // namespace rss

#endif  // RSS_CLI_HPP
