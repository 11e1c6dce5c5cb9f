#pragma once

#include <cubic/parallel.hpp>

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cubic::verify {

enum class Status { pass, fail, skipped };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct CheckResult {
  std::string check_id;
  int n = 0;
  Status status = Status::skipped;
  std::string computed;
  std::string expected;
  std::int64_t elapsed_ms = 0;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

void to_json(nlohmann::json& j, const CheckResult& r);
void from_json(const nlohmann::json& j, CheckResult& r);

enum class Format { text, json };

struct RunConfig {
  int n_min = 1;
  int n_max = 1;
  std::set<std::string> suites;  // subset of the registered suite names
  Format format = Format::text;
  std::optional<std::string> out;
};

/// Registered suites: grassmann, fano, hodge, diagonal.
const std::vector<std::string>& suite_names();

/// Validates and normalises a config ("all" expands to every suite). Throws
/// UsageError on n_min < 1, n_min > n_max or an unknown suite name.
RunConfig make_config(int n_min, int n_max, const std::vector<std::string>& suites, Format format,
                      std::optional<std::string> out = std::nullopt);

struct Outcome {
  std::string computed;
  std::string expected;
};

struct Check {
  std::string id;
  std::string suite;
  int n_min;
  int n_max;
  std::function<Outcome(int)> run;
};

const std::vector<Check>& registry();

/// Every (check, n) pair in range; out-of-range pairs are reported as
/// skipped with their precondition. Sorted by (check_id, n).
std::vector<CheckResult> run(const RunConfig& config, Execution exec = Execution::parallel);

std::string emit(const std::vector<CheckResult>& results, Format format);

/// 0 when nothing failed, 1 otherwise.
int exit_code(const std::vector<CheckResult>& results);

}  // namespace cubic::verify
