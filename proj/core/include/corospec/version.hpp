#pragma once

namespace corospec {

inline constexpr const char* kVersion = "0.1.0";

} // namespace corospec
