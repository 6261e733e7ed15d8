#pragma once

namespace gifpsi {

inline constexpr const char* version = "0.1.0";

}  // namespace gifpsi
