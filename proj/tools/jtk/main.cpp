#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "jtk/error.hpp"
#include "jtk/version.hpp"

using namespace jtk::cli;

namespace {

std::string text_for(const Report& r) {
  std::ostringstream os;
  json doc = r.to_json();
  if (r.command == "info") {
    const auto& d = doc["checks"][0]["details"];
    os << r.triples.front() << "  d=" << d["d"] << " r=" << d["r"] << " a=" << d["a"] << " b=" << d["b"]
       << " genus=" << d["genus"] << (d["tube"].get<bool>() ? " (tube)" : "") << '\n';
    os << "basis:";
    for (const auto& b : d["basis"]) os << ' ' << b.get<std::string>();
    os << "\nframe:\n";
    for (const auto& e : d["frame"]) os << "  " << e.get<std::string>() << '\n';
    return os.str();
  }
  if (r.command == "decompose") {
    for (const auto& c : doc["checks"]) {
      const auto& d = c["details"];
      if (c["name"] == "decompose.component") {
        os << c["params"]["lambda"].get<std::string>() << ": " << d["component"].get<std::string>();
        if (d.contains("norm_share")) os << "   [" << d["norm_share"].get<std::string>() << " of |f|^2]";
        os << '\n';
      } else {
        os << "residual: " << d["residual"].get<std::string>() << " (" << c["status"].get<std::string>() << ")\n";
      }
    }
    return os.str();
  }
  if (r.command == "fibers") {
    os << "lambda=" << doc["options"]["lambda"].get<std::string>() << " degree=" << doc["options"]["degree"] << '\n';
    os << "l  kind     fiber  dim P_W  status  point\n";
    std::vector<json> rows(doc["checks"].begin(), doc["checks"].end());
    std::stable_sort(rows.begin(), rows.end(), [](const json& a, const json& b) {
      auto key = [](const json& c) {
        const auto& p = c["params"];
        return std::make_tuple(p["l"].get<unsigned>(), p["kind"].get<std::string>(), p["index"].get<unsigned>());
      };
      return key(a) < key(b);
    });
    for (const auto& c : rows) {
      const auto& p = c["params"];
      const auto& d = c["details"];
      os << p["l"] << "  " << p["kind"].get<std::string>() << (p["kind"] == "frame" ? "    " : "  ");
      if (d.contains("fiber_dim")) {
        os << d["fiber_dim"] << "      " << d["target_dim"] << "        " << c["status"].get<std::string>() << "    "
           << d["point"].get<std::string>();
      } else {
        os << "-      -        " << c["status"].get<std::string>();
      }
      os << '\n';
    }
    return os.str();
  }
  return render_text(r);
}

int emit(const Report& r, const std::string& json_path, bool strict) {
  std::string doc = r.to_json().dump(2) + "\n";
  if (json_path == "-") {
    std::cout << doc;
  } else {
    std::cout << text_for(r);
    if (!json_path.empty()) {
      std::ofstream out(json_path);
      if (!out) {
        std::cerr << "jtk: cannot write " << json_path << '\n';
        return 2;
      }
      out << doc;
    }
  }
  int code = r.exit_code(strict);
  if (code == 0 && r.count(Status::needs_higher_degree) > 0)
    std::cerr << "jtk: warning: some checks need a higher degree bound (use --degree)\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on hermitian Jordan triples and partition ideals"};
  app.set_version_flag("--version", std::string(jtk::version()));
  app.require_subcommand(1);

  std::vector<std::string> triples;
  std::string triple, partition, poly, json_path, suite = "all";
  unsigned degree = 0;
  std::uint64_t seed = 1;
  bool strict = false;

  auto* info = app.add_subcommand("info", "Print dimension, rank, multiplicities, basis and frame");
  info->add_option("--triple", triple, "Triple descriptor, e.g. matrix:2x3")->required();
  info->add_option("--json", json_path, "Write the JSON report to a file ('-' for stdout)");

  auto* dec = app.add_subcommand("decompose", "Split a polynomial into K-type components");
  dec->add_option("--triple", triple, "Triple descriptor")->required();
  dec->add_option("poly", poly, "Polynomial in z0, z1, ...")->required();
  dec->add_option("--json", json_path, "Write the JSON report to a file ('-' for stdout)");

  auto* fib = app.add_subcommand("fibers", "Fiber dimensions of J^lambda along the rank strata");
  fib->add_option("--triple", triple, "Triple descriptor")->required();
  fib->add_option("--partition", partition, "Partition, e.g. 2,1")->required();
  auto* fib_deg = fib->add_option("--degree", degree, "Truncation degree (default |lambda|+3)");
  fib->add_option("--seed", seed, "Seed for sampled points");
  fib->add_option("--json", json_path, "Write the JSON report to a file ('-' for stdout)");
  fib->add_flag("--strict", strict, "Exit 1 when a fiber did not stabilize");

  auto* ver = app.add_subcommand("verify", "Run verification suites");
  ver->add_option("--triple", triples, "Triple descriptor; repeatable (default: reference set)");
  ver->add_option("--suite", suite, "jordan, ktype, ideals, localize, kernels or all")
      ->check(CLI::IsMember({"all", "jordan", "ktype", "ideals", "localize", "kernels"}));
  auto* ver_deg = ver->add_option("--degree", degree, "Truncation degree (default |lambda|+3)");
  ver->add_option("--seed", seed, "Seed for all sampled randomness");
  ver->add_option("--json", json_path, "Write the JSON report to a file ('-' for stdout)");
  ver->add_flag("--strict", strict, "Exit 1 when a check needs a higher degree");

  CLI11_PARSE(app, argc, argv);

  try {
    Options opt;
    opt.seed = seed;
    if (*info) return emit(cmd_info(triple), json_path, false);
    if (*dec) return emit(cmd_decompose(triple, poly), json_path, false);
    if (*fib) {
      if (*fib_deg) opt.degree = degree;
      return emit(cmd_fibers(triple, partition, opt), json_path, strict);
    }
    if (*ver_deg) opt.degree = degree;
    if (triples.empty()) triples = reference_triples();
    return emit(cmd_verify(triples, suite, opt), json_path, strict);
  } catch (const jtk::Error& e) {
    std::cerr << "jtk: " << e.what() << '\n';
    return 2;
  }
}
