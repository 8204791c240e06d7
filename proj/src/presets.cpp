#include "blockade/presets.hpp"

#include "blockade/errors.hpp"

namespace blockade::cli {

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"fig2a", "fig2b", "fig4a", "fig4b", "fig6a",
                                                "fig6b", "fig7a", "fig7b", "fig8a", "fig8b"};
    return names;
}

namespace {

// Shared weak-drive base: gamma = kappa, eta = 0.01 kappa, resonant.
SweepSpec weak_drive(int n_atoms, Drive drive) {
    SweepSpec s;
    s.base.n_atoms = n_atoms;
    s.base.drive = drive;
    s.base.kappa = 1.0;
    s.base.gamma = 1.0;
    s.base.eta = 0.01;
    s.base.delta_a = 0.0;
    s.base.delta_c = 0.0;
    s.outputs = {"g2_zero", "g2_analytic", "mean_photons"};
    return s;
}

SweepSpec coupling_line(int n_atoms, Drive drive, double g_max) {
    SweepSpec s = weak_drive(n_atoms, drive);
    s.axis1 = Axis{"g", 0.05, g_max, kLineSamples};
    return s;
}

SweepSpec detuned_two_atoms(double g) {
    SweepSpec s = weak_drive(2, Drive::Atom);
    s.base.g = g;
    s.base.delta_c = 20.0;
    return s;
}

SweepSpec detuning_line(double g) {
    SweepSpec s = detuned_two_atoms(g);
    s.axis1 = Axis{"delta_a", -20.0, 20.0, kLineSamples};
    s.outputs = {"g2_zero", "g2_analytic", "g2_approx", "pop:+,1", "mean_photons"};
    return s;
}

SweepSpec detuning_map(double g) {
    SweepSpec s = detuned_two_atoms(g);
    s.axis1 = Axis{"delta_c", -40.0, 40.0, kMapSamples};
    s.axis2 = Axis{"delta_a", -20.0, 20.0, kMapSamples};
    s.outputs = {"g2_zero", "g2_analytic", "g2_approx", "mean_photons"};
    return s;
}

// Rates given as nu/2pi in MHz, converted to kappa units at run time.
SweepSpec interference_line_map(std::vector<std::string> outputs) {
    SweepSpec s;
    s.base.n_atoms = 2;
    s.base.drive = Drive::Atom;
    s.units = Units::MHz;
    s.base.kappa = 2.8;
    s.base.gamma = 3.0;
    s.base.eta = 1.4;
    s.axis1 = Axis{"Delta", -20.0, 20.0, kMapSamples};
    s.axis2 = Axis{"g", 0.1, 10.0, kMapSamples};
    s.outputs = std::move(outputs);
    return s;
}

}  // namespace

SweepSpec preset_spec(std::string_view name) {
    SweepSpec s;
    if (name == "fig2a") s = coupling_line(1, Drive::Cavity, 3.0);
    else if (name == "fig2b") s = coupling_line(1, Drive::Atom, 10.0);
    else if (name == "fig4a") s = coupling_line(2, Drive::Cavity, 3.0);
    else if (name == "fig4b") s = coupling_line(2, Drive::Atom, 3.0);
    else if (name == "fig6a") s = detuning_line(0.5);
    else if (name == "fig6b") s = detuning_line(5.0);
    else if (name == "fig7a") s = detuning_map(0.5);
    else if (name == "fig7b") s = detuning_map(5.0);
    else if (name == "fig8a") s = interference_line_map({"g2_zero", "mean_photons"});
    else if (name == "fig8b") s = interference_line_map({"counting_rate", "mean_photons"});
    else throw ConfigError("unknown preset '" + std::string(name) + "'");
    s.preset = std::string(name);
    return s;
}

}  // namespace blockade::cli
