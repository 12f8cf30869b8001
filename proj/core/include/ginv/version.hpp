#pragma once

namespace ginv {

inline constexpr char kVersion[] = "1.0.0";

} // namespace ginv
