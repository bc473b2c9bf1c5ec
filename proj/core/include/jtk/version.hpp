#pragma once

namespace jtk {

/// Library version, "major.minor.patch".
const char* version() noexcept;

}  // namespace jtk
