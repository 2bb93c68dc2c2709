#pragma once

namespace linkctr {

inline constexpr const char* kVersion = "0.1.0";

} // namespace linkctr
