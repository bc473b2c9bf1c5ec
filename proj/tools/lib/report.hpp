#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace jtk::cli {

using json = nlohmann::json;

enum class Status { pass, fail, skipped, needs_higher_degree };

std::string_view status_name(Status s);

struct Check {
  std::string name;
  json params = json::object();
  Status status = Status::pass;
  json details = json::object();
};

inline constexpr int kReportSchema = 1;

struct Report {
  std::string command;
  std::string suite;
  std::vector<std::string> triples;
  std::uint64_t seed = 0;
  json options = json::object();
  std::vector<Check> checks;

  void add(Check c) { checks.push_back(std::move(c)); }
  std::size_t count(Status s) const;
  /// 1 if any check failed, or under `strict` if any check needs a higher degree; else 0.
  int exit_code(bool strict) const;
  /// Schema-1 document; checks sorted by (name, params).
  json to_json() const;
};

}  // namespace jtk::cli
