#pragma once

// Named sweeps reproducing the published figure regimes. Axis ranges are chosen
// generously around the visible features; see README for the per-preset table.

#include <string>
#include <string_view>
#include <vector>

#include "blockade/sweep.hpp"

namespace blockade::cli {

inline constexpr int kLineSamples = 200;  // points per 1-D axis
inline constexpr int kMapSamples = 101;   // points per axis of a 2-D map

const std::vector<std::string>& preset_names();

// Throws ConfigError for an unknown name.
SweepSpec preset_spec(std::string_view name);

}  // namespace blockade::cli
