#pragma once

namespace rbp {
inline constexpr const char* kVersion = "0.1.0";
}
