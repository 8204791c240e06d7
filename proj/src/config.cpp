#include "blockade/config.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "blockade/errors.hpp"
#include "blockade/presets.hpp"

namespace blockade::cli {

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys{"preset", "n_atoms", "drive", "g",     "kappa",  "gamma",
                                               "eta",    "delta_a", "delta_c", "drive_phase", "n_max", "units",
                                               "axis1",  "axis2",   "outputs", "solver"};
    return keys;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

double parse_double(const std::string& text, const std::string& where) {
    const char* begin = text.c_str();
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || errno == ERANGE) throw ConfigError(where + ": '" + text + "' is not a number");
    return v;
}

int parse_int(const std::string& text, const std::string& where) {
    const char* begin = text.c_str();
    char* end = nullptr;
    errno = 0;
    const long v = std::strtol(begin, &end, 10);
    if (end == begin || *end != '\0' || errno == ERANGE || v < -1000000 || v > 1000000) {
        throw ConfigError(where + ": '" + text + "' is not an integer");
    }
    return int(v);
}

std::optional<Axis> parse_axis(const std::string& value, const std::string& where) {
    const auto w = words(value);
    if (w.size() == 1 && w[0] == "none") return std::nullopt;
    if (w.size() != 4) throw ConfigError(where + ": expected '<name> <start> <stop> <count>' or 'none'");
    Axis a{w[0], parse_double(w[1], where), parse_double(w[2], where), parse_int(w[3], where)};
    a.validate();
    return a;
}

void apply_key(SweepSpec& s, const std::string& key, const std::string& value, const std::string& where) {
    if (key == "preset") {
        s.preset = value;  // the preset body was applied before any explicit key
    } else if (key == "n_atoms") {
        s.base.n_atoms = parse_int(value, where);
    } else if (key == "drive") {
        if (value == "cavity") s.base.drive = Drive::Cavity;
        else if (value == "atom") s.base.drive = Drive::Atom;
        else throw ConfigError(where + ": drive must be 'cavity' or 'atom'");
    } else if (key == "g") {
        s.base.g = parse_double(value, where);
    } else if (key == "kappa") {
        s.base.kappa = parse_double(value, where);
    } else if (key == "gamma") {
        s.base.gamma = parse_double(value, where);
    } else if (key == "eta") {
        s.base.eta = parse_double(value, where);
    } else if (key == "delta_a") {
        s.base.delta_a = parse_double(value, where);
    } else if (key == "delta_c") {
        s.base.delta_c = parse_double(value, where);
    } else if (key == "drive_phase") {
        s.base.drive_phase = parse_double(value, where);
    } else if (key == "n_max") {
        s.base.n_max = parse_int(value, where);
        s.n_max_set = true;
    } else if (key == "units") {
        if (value == "kappa") s.units = Units::Kappa;
        else if (value == "MHz") s.units = Units::MHz;
        else throw ConfigError(where + ": units must be 'kappa' or 'MHz'");
    } else if (key == "axis1") {
        auto a = parse_axis(value, where);
        if (!a) throw ConfigError(where + ": axis1 cannot be 'none'");
        s.axis1 = *a;
    } else if (key == "axis2") {
        s.axis2 = parse_axis(value, where);
    } else if (key == "outputs") {
        s.outputs = words(value);
    } else if (key == "solver") {
        if (value == "auto") s.solver = SolverChoice::Auto;
        else if (value == "dense") s.solver = SolverChoice::Dense;
        else if (value == "sparse") s.solver = SolverChoice::Sparse;
        else throw ConfigError(where + ": solver must be 'auto', 'dense' or 'sparse'");
    } else {
        throw ConfigError(where + ": unknown key '" + key + "'");
    }
}

std::string axis_text(const Axis& a) {
    return a.name + " " + format_number(a.start) + " " + format_number(a.stop) + " " + std::to_string(a.count);
}

}  // namespace

SweepSpec parse_config(std::istream& in, const std::string& origin) {
    std::vector<std::pair<std::string, std::string>> entries;
    std::map<std::string, int> seen;
    int line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        const std::string where = origin + ":" + std::to_string(line_no);
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) throw ConfigError(where + ": expected 'key = value'");
        if (auto [it, fresh] = seen.emplace(key, line_no); !fresh) {
            throw ConfigError(where + ": key '" + key + "' already set on line " + std::to_string(it->second));
        }
        entries.emplace_back(std::move(key), std::move(value));
    }

    SweepSpec spec;
    for (const auto& [key, value] : entries) {
        if (key == "preset") spec = preset_spec(value);
    }
    for (const auto& [key, value] : entries) {
        apply_key(spec, key, value, origin + ":" + std::to_string(seen[key]));
    }
    spec.validate();
    return spec;
}

SweepSpec load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    return parse_config(in, path);
}

std::vector<std::string> echo_config(const SweepSpec& spec) {
    const SystemParams& b = spec.base;
    std::vector<std::string> lines;
    auto add = [&](const std::string& key, const std::string& value) { lines.push_back(key + " = " + value); };
    if (spec.preset) add("preset", *spec.preset);
    add("n_atoms", std::to_string(b.n_atoms));
    add("drive", to_string(b.drive));
    add("g", format_number(b.g));
    add("kappa", format_number(b.kappa));
    add("gamma", format_number(b.gamma));
    add("eta", format_number(b.eta));
    add("delta_a", format_number(b.delta_a));
    add("delta_c", format_number(b.delta_c));
    add("drive_phase", format_number(b.drive_phase));
    add("n_max", std::to_string(spec.resolved_base().n_max));
    add("units", to_string(spec.units));
    add("axis1", axis_text(spec.axis1));
    add("axis2", spec.axis2 ? axis_text(*spec.axis2) : "none");
    std::string outs;
    for (const auto& o : spec.outputs) outs += (outs.empty() ? "" : " ") + o;
    add("outputs", outs);
    add("solver", to_string(spec.solver));
    return lines;
}

}  // namespace blockade::cli
