#pragma once

namespace connkit {

inline constexpr const char* kKernelVersion = "0.1.0";

}  // namespace connkit
