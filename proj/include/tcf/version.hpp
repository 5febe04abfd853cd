#pragma once

namespace tcf {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tcf
