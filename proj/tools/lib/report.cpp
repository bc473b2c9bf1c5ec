#include "report.hpp"

#include <algorithm>

#include "jtk/version.hpp"

namespace jtk::cli {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
    case Status::needs_higher_degree: return "needs-higher-degree";
  }
  return "fail";
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const Check& c) { return c.status == s; }));
}

int Report::exit_code(bool strict) const {
  if (count(Status::fail) > 0) return 1;
  if (strict && count(Status::needs_higher_degree) > 0) return 1;
  return 0;
}

json Report::to_json() const {
  std::vector<const Check*> sorted;
  for (const auto& c : checks) sorted.push_back(&c);
  std::stable_sort(sorted.begin(), sorted.end(), [](const Check* a, const Check* b) {
    if (a->name != b->name) return a->name < b->name;
    return a->params.dump() < b->params.dump();
  });
  json arr = json::array();
  for (const Check* c : sorted)
    arr.push_back({{"name", c->name}, {"params", c->params}, {"status", status_name(c->status)}, {"details", c->details}});
  json summary = json::object();
  for (Status s : {Status::pass, Status::fail, Status::skipped, Status::needs_higher_degree})
    summary[std::string(status_name(s))] = count(s);
  return {{"schema", kReportSchema},
          {"version", jtk::version()},
          {"command", command},
          {"suite", suite},
          {"triples", triples},
          {"seed", seed},
          {"options", options},
          {"checks", arr},
          {"summary", summary},
          {"warning", count(Status::needs_higher_degree) > 0}};
}

}  // namespace jtk::cli
