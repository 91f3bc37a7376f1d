#pragma once

namespace tonetext {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace tonetext
