#pragma once

// Flat key = value configuration files mirroring SweepSpec.
//
//   preset  = fig6a            # optional; explicit keys below override it
//   n_atoms = 2
//   drive   = atom             # cavity | atom
//   g = 0.5
//   delta_c = 20
//   axis1   = delta_a -20 20 200
//   axis2   = none             # or "<name> <start> <stop> <count>"
//   outputs = g2_zero g2_analytic pop:+,1
//   units   = kappa            # kappa | MHz (MHz rates are divided by kappa)
//   solver  = auto             # auto | dense | sparse
//
// Remaining keys: kappa, gamma, eta, delta_a, n_max, drive_phase.

#include <istream>
#include <string>
#include <vector>

#include "blockade/sweep.hpp"

namespace blockade::cli {

const std::vector<std::string>& config_keys();

SweepSpec parse_config(std::istream& in, const std::string& origin = "<config>");
SweepSpec load_config(const std::string& path);

// Effective configuration as "key = value" lines, in config_keys() order; feeding
// them back through parse_config reproduces the spec.
std::vector<std::string> echo_config(const SweepSpec& spec);

// "%.12g"
std::string format_number(double v);

}  // namespace blockade::cli
