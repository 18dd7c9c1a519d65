#pragma once

namespace lukadmit {

/// Schema version stamped into every JSON document we emit.
inline constexpr int json_schema_version = 1;
inline constexpr const char* tool_version = "1.0.0";

}  // namespace lukadmit
