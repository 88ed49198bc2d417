#pragma once

namespace restab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace restab
