#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace jtk::cli {

struct Options {
  /// Overrides the per-partition default |λ|+3.
  std::optional<unsigned> degree;
  std::uint64_t seed = 1;
};

/// matrix:2x2, matrix:2x3, sym:2, asym:4, spin:3, spin:4.
const std::vector<std::string>& reference_triples();
/// jordan, ktype, ideals, localize, kernels.
const std::vector<std::string>& suite_names();

Report cmd_info(const std::string& triple);
Report cmd_decompose(const std::string& triple, const std::string& poly);
Report cmd_fibers(const std::string& triple, const std::string& partition, const Options& opt);
/// suite is one of suite_names() or "all"; throws InvalidArgument otherwise.
Report cmd_verify(const std::vector<std::string>& triples, const std::string& suite, const Options& opt);

/// One line per check plus a summary line.
std::string render_text(const Report& r);

}  // namespace jtk::cli
