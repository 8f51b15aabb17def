// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>

#include "margin/engine_config.hpp"
#include "margin/snapshot.hpp"

namespace margin {

inline constexpr const char* kSnapshotSchema = "margin-snapshot/1";
inline constexpr const char* kConfigSchema = "margin-config/1";

/// Parses and fully validates a forecast snapshot file (see docs/formats.md).
/// Violations are reported with file:line and field context.
ForecastSnapshot load_snapshot(const std::string& path);
ForecastSnapshot parse_snapshot(std::istream& in, const std::string& name);

/// Canonical serialization; loading the output reproduces the snapshot
/// field-for-field.
std::string serialize_snapshot(const ForecastSnapshot& snapshot);
void save_snapshot(const ForecastSnapshot& snapshot, const std::string& path);

/// Parses and fully validates a JSON model configuration. Gamma continuity,
/// quantile-crossing, and table-ordering checks all run here.
EngineConfig load_config(const std::string& path);
EngineConfig parse_config(const std::string& json_text, const std::string& name);

}  // namespace margin
