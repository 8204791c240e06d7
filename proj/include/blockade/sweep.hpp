#pragma once

// Parameter sweeps over one or two axes: every grid point runs model -> steady ->
// observables independently, and rows come back in axis1-major order.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "blockade/model.hpp"
#include "blockade/steady.hpp"

namespace blockade::cli {

enum class Units { Kappa, MHz };
enum class SolverChoice { Auto, Dense, Sparse };

const char* to_string(Units u);
const char* to_string(SolverChoice s);

// Swept parameter. Names are SystemParams fields (g, gamma, eta, delta_a, delta_c,
// drive_phase) or the composite "Delta", which sets delta_a = Delta, delta_c = -2 Delta.
// Axis values are always in units of kappa (radians for drive_phase).
struct Axis {
    std::string name;
    double start = 0.0;
    double stop = 0.0;
    int count = 2;

    double value(int i) const;
    std::vector<double> values() const;
    std::string column() const;  // e.g. "g_over_kappa"
    void validate() const;
};

const std::vector<std::string>& axis_names();

// Output names: g2_zero, g2_analytic, g2_approx, mean_photons, counting_rate, pop:<label>
// (labels as in hilbert.hpp, e.g. pop:+,1). Population labels are checked against an
// (n_atoms, n_max) space.
std::string output_column(const std::string& output);
void validate_output(const std::string& output, int n_atoms, int n_max);

struct SweepSpec {
    SystemParams base;               // rates in `units`; base.n_max ignored unless n_max_set
    bool n_max_set = false;
    Units units = Units::Kappa;
    Axis axis1{"g", 0.1, 2.0, 200};
    std::optional<Axis> axis2;
    std::vector<std::string> outputs{"g2_zero", "g2_analytic", "mean_photons"};
    std::optional<std::string> preset;
    SolverChoice solver = SolverChoice::Auto;

    // Base parameters in kappa units with the truncation resolved.
    SystemParams resolved_base() const;
    SystemParams point(double v1, std::optional<double> v2 = std::nullopt) const;
    std::size_t size() const;
    std::vector<std::string> columns() const;
    void validate() const;
};

SteadyOptions solver_options(SolverChoice choice, Index dim);

struct Gap {
    std::size_t row = 0;
    std::string kind;     // undefined_statistics, degenerate_steady_state, ...
    std::string message;

    bool operator==(const Gap&) const = default;
};

using Cell = std::optional<double>;  // empty = gap marker

struct SweepResult {
    std::vector<std::string> echo;   // effective config, "key = value"
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<Gap> gaps;
};

// BLOCKADE_THREADS if set and valid, else `requested` if > 0, else hardware concurrency.
int worker_count(int requested = 0);

// Runs f(0..n-1) on `threads` workers (see worker_count). Indices are handed out in
// order; the first exception thrown by any call is rethrown after all workers join.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& f);

SweepResult run_sweep(const SweepSpec& spec, int threads = 0);

}  // namespace blockade::cli
