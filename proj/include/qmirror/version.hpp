#pragma once

namespace qmirror {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qmirror
