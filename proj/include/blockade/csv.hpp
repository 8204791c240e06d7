#pragma once

// CSV layout:
//   # key = value            effective configuration, one line per key
//   col1,col2,...            header
//   v,v,...                  rows, "%.12g", gaps written as NA
//   # gap row=<i> kind=<k>: <message>   one line per failed grid point

#include <istream>
#include <ostream>
#include <string>

#include "blockade/sweep.hpp"

namespace blockade::cli {

inline constexpr const char* kGapMarker = "NA";

void write_csv(std::ostream& out, const SweepResult& result);
void emit_csv(const SweepResult& result, const std::string& path);  // throws std::runtime_error on I/O failure

SweepResult read_csv(std::istream& in);

}  // namespace blockade::cli
