#include "blockade/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "blockade/analytics.hpp"
#include "blockade/config.hpp"
#include "blockade/errors.hpp"
#include "blockade/observables.hpp"

namespace blockade::cli {

const char* to_string(Units u) { return u == Units::Kappa ? "kappa" : "MHz"; }

const char* to_string(SolverChoice s) {
    switch (s) {
        case SolverChoice::Auto: return "auto";
        case SolverChoice::Dense: return "dense";
        case SolverChoice::Sparse: return "sparse";
    }
    return "auto";
}

const std::vector<std::string>& axis_names() {
    static const std::vector<std::string> names{"g", "gamma", "eta", "delta_a", "delta_c", "Delta", "drive_phase"};
    return names;
}

double Axis::value(int i) const {
    if (i == count - 1) return stop;
    return start + (stop - start) * double(i) / double(count - 1);
}

std::vector<double> Axis::values() const {
    std::vector<double> v(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) v[std::size_t(i)] = value(i);
    return v;
}

std::string Axis::column() const { return name == "drive_phase" ? "drive_phase_rad" : name + "_over_kappa"; }

void Axis::validate() const {
    if (std::find(axis_names().begin(), axis_names().end(), name) == axis_names().end()) {
        throw ConfigError("axis: unknown parameter '" + name + "'");
    }
    if (count < 2) throw ConfigError("axis " + name + ": count must be >= 2");
    if (!std::isfinite(start) || !std::isfinite(stop)) throw ConfigError("axis " + name + ": bounds must be finite");
}

namespace {

bool starts_with(const std::string& s, std::string_view prefix) { return s.rfind(prefix, 0) == 0; }

std::string sanitize_label(const std::string& label) {
    std::string out;
    for (char c : label) {
        if (c == '+') out += "plus";
        else if (c == '-') out += "minus";
        else if (c != ',') out += c;
    }
    return out;
}

void apply_axis(SystemParams& p, const std::string& name, double v) {
    if (name == "g") p.g = v;
    else if (name == "gamma") p.gamma = v;
    else if (name == "eta") p.eta = v;
    else if (name == "delta_a") p.delta_a = v;
    else if (name == "delta_c") p.delta_c = v;
    else if (name == "drive_phase") p.drive_phase = v;
    else if (name == "Delta") {
        p.delta_a = v;
        p.delta_c = -2.0 * v;
    } else {
        throw ConfigError("axis: unknown parameter '" + name + "'");
    }
}

bool touches(const Axis& axis, const std::string& field) {
    if (axis.name == "Delta") return field == "delta_a" || field == "delta_c";
    return axis.name == field;
}

}  // namespace

std::string output_column(const std::string& output) {
    if (output == "counting_rate") return "counting_rate_over_kappa";
    if (starts_with(output, "pop:")) return "pop_" + sanitize_label(output.substr(4));
    return output;
}

void validate_output(const std::string& output, int n_atoms, int n_max) {
    static const std::vector<std::string> plain{"g2_zero", "g2_analytic", "g2_approx", "mean_photons", "counting_rate"};
    if (std::find(plain.begin(), plain.end(), output) != plain.end()) return;
    if (starts_with(output, "pop:")) {
        try {
            basis_state<double>(SpaceSpec::make(n_atoms, n_max), output.substr(4));
        } catch (const UnknownLabel& e) {
            throw ConfigError("output '" + output + "': " + e.what());
        }
        return;
    }
    throw ConfigError("unknown output '" + output + "'");
}

SystemParams SweepSpec::resolved_base() const {
    SystemParams p = base;
    if (units == Units::MHz) {
        p = p.in_kappa_units();
    } else if (p.kappa != 1.0) {
        throw ConfigError("units = kappa: every rate is already in units of kappa, so kappa must be 1");
    }
    if (!n_max_set) {
        double eta = p.eta;
        for (const Axis* axis : {&axis1, axis2 ? &*axis2 : nullptr}) {
            if (axis && axis->name == "eta") eta = std::max({eta, std::abs(axis->start), std::abs(axis->stop)});
        }
        p.n_max = default_n_max(eta);
    }
    return p;
}

SystemParams SweepSpec::point(double v1, std::optional<double> v2) const {
    SystemParams p = resolved_base();
    apply_axis(p, axis1.name, v1);
    if (axis2) {
        if (!v2) throw ConfigError("point: second axis value missing");
        apply_axis(p, axis2->name, *v2);
    }
    return p;
}

std::size_t SweepSpec::size() const {
    return std::size_t(axis1.count) * (axis2 ? std::size_t(axis2->count) : 1u);
}

std::vector<std::string> SweepSpec::columns() const {
    std::vector<std::string> cols{axis1.column()};
    if (axis2) cols.push_back(axis2->column());
    for (const auto& o : outputs) cols.push_back(output_column(o));
    return cols;
}

void SweepSpec::validate() const {
    axis1.validate();
    if (axis2) {
        axis2->validate();
        for (const char* f : {"g", "gamma", "eta", "delta_a", "delta_c", "drive_phase"}) {
            if (touches(axis1, f) && touches(*axis2, f)) {
                throw ConfigError("axis1 and axis2 both set '" + std::string(f) + "'");
            }
        }
    }
    if (outputs.empty()) throw ConfigError("outputs: at least one output is required");
    const SystemParams resolved = resolved_base();
    for (const auto& o : outputs) validate_output(o, base.n_atoms, resolved.n_max);
    auto cols = columns();
    std::sort(cols.begin(), cols.end());
    if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) throw ConfigError("duplicate output column");
    resolved.validate();
}

SteadyOptions solver_options(SolverChoice choice, Index dim) {
    SteadyOptions opt;
    switch (choice) {
        case SolverChoice::Dense: opt.solver = SteadySolver::DenseLU; break;
        case SolverChoice::Sparse: opt.solver = SteadySolver::SparseLU; break;
        // Dense LU cost grows as D^6; beyond one-atom spaces the sparse path is ~10x faster.
        case SolverChoice::Auto: opt.solver = dim < 24 ? SteadySolver::DenseLU : SteadySolver::SparseLU; break;
    }
    return opt;
}

int worker_count(int requested) {
    if (const char* env = std::getenv("BLOCKADE_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n > 0) return int(std::min(n, 1024L));
    }
    if (requested > 0) return requested;
    return int(std::max(1u, std::thread::hardware_concurrency()));
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& f) {
    const std::size_t n_workers = std::min<std::size_t>(std::size_t(worker_count(threads)), n);
    if (n_workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto run = [&] {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
            try {
                f(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(n);
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (std::size_t w = 0; w < n_workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

namespace {

struct PointResult {
    std::vector<Cell> cells;
    std::optional<Gap> gap;
};

PointResult evaluate_point(const SweepSpec& spec, const SystemParams& p, std::vector<Cell> axis_cells) {
    PointResult out;
    out.cells = std::move(axis_cells);
    const std::size_t first_output = out.cells.size();
    out.cells.resize(first_output + spec.outputs.size());
    auto set_gap = [&](const char* kind, const std::string& msg) {
        if (!out.gap) out.gap = Gap{0, kind, msg};
    };

    std::optional<DensityMatrix<double>> rho;
    try {
        const SpaceSpec space = p.space();
        rho = steady_state(liouvillian<double>(p), solver_options(spec.solver, space.dim()));
        const DensityCheck chk = rho->check();
        if (!chk.ok()) {
            set_gap("invalid_state", "steady state violates density-matrix invariants (hermiticity " +
                                         std::to_string(chk.hermiticity_error) + ", min eigenvalue " +
                                         std::to_string(chk.min_eigenvalue) + ")");
            rho.reset();
        }
    } catch (const DegenerateSteadyState& e) {
        set_gap("degenerate_steady_state", e.what());
    } catch (const std::exception& e) {
        set_gap("solver_error", e.what());
    }

    const SpaceSpec space = p.space();
    for (std::size_t k = 0; k < spec.outputs.size(); ++k) {
        const std::string& o = spec.outputs[k];
        Cell value;
        if (o == "g2_analytic") {
            value = analytics::analytic_g2(p);
        } else if (o == "g2_approx") {
            if (p.n_atoms == 2 && p.drive == Drive::Atom) {
                try {
                    const auto r = analytics::g2_approx_detuned(p);
                    if (r.valid) value = r.value;
                } catch (const SingularSystem&) {
                }
            }
        } else if (rho) {
            if (o == "g2_zero") {
                try {
                    value = double(g2_zero(*rho, space));
                } catch (const UndefinedStatistics& e) {
                    set_gap("undefined_statistics", e.what());
                }
            } else if (o == "mean_photons") {
                value = double(mean_photons(*rho, space));
            } else if (o == "counting_rate") {
                value = double(counting_rate(*rho, p));
            } else if (starts_with(o, "pop:")) {
                value = double(dicke_population(*rho, space, o.substr(4)));
            }
        }
        if (value && !std::isfinite(*value)) {
            set_gap("non_finite", output_column(o) + " evaluated to a non-finite number");
            value.reset();
        }
        out.cells[first_output + k] = value;
    }
    return out;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec, int threads) {
    spec.validate();
    SweepResult result;
    result.echo = echo_config(spec);
    result.columns = spec.columns();

    const std::vector<double> v1 = spec.axis1.values();
    const std::vector<double> v2 = spec.axis2 ? spec.axis2->values() : std::vector<double>{};
    const std::size_t n2 = spec.axis2 ? v2.size() : 1;
    const std::size_t total = spec.size();
    std::vector<PointResult> points(total);

    auto work = [&](std::size_t idx) {
        const std::size_t i = idx / n2;
        const std::size_t j = idx % n2;
        std::vector<Cell> axis_cells{v1[i]};
        std::optional<double> second;
        if (spec.axis2) {
            second = v2[j];
            axis_cells.push_back(v2[j]);
        }
        try {
            const SystemParams p = spec.point(v1[i], second);
            p.validate();
            points[idx] = evaluate_point(spec, p, std::move(axis_cells));
        } catch (const std::exception& e) {
            // Invalid parameters at this grid point (e.g. a negative rate on the axis).
            PointResult r;
            r.cells.assign(result.columns.size(), std::nullopt);
            r.cells[0] = v1[i];
            if (spec.axis2) r.cells[1] = v2[j];
            r.gap = Gap{0, "invalid_parameters", e.what()};
            points[idx] = std::move(r);
        }
    };

    parallel_for(total, threads, work);

    result.rows.reserve(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        if (points[idx].gap) {
            Gap g = *points[idx].gap;
            g.row = idx;
            result.gaps.push_back(std::move(g));
        }
        result.rows.push_back(std::move(points[idx].cells));
    }
    return result;
}

}  // namespace blockade::cli
