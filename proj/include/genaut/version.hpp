#pragma once

namespace genaut {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace genaut
