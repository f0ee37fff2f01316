#pragma once

namespace hinembed {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hinembed
