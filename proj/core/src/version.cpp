#include "jtk/version.hpp"

namespace jtk {

const char* version() noexcept { return JTK_VERSION; }

}  // namespace jtk
