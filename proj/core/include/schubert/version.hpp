#pragma once

namespace schubert {

inline constexpr const char* engine_version = "schubert 0.1.0";

}  // namespace schubert
