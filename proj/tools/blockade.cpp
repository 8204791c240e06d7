// blockade: steady-state photon statistics sweeps for one- and two-atom cavity QED.
//
//   blockade sweep --config <file> --out <csv>
//   blockade preset <name> --out <csv>
//   blockade check [--verbose]

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <iostream>

#include "blockade/acceptance.hpp"
#include "blockade/config.hpp"
#include "blockade/csv.hpp"
#include "blockade/presets.hpp"
#include "blockade/sweep.hpp"

namespace {

int run_and_write(const blockade::cli::SweepSpec& spec, const std::string& out) {
    const auto result = blockade::cli::run_sweep(spec);
    blockade::cli::emit_csv(result, out);
    std::cerr << "wrote " << result.rows.size() << " rows to " << out;
    if (!result.gaps.empty()) std::cerr << " (" << result.gaps.size() << " gap rows, see '# gap' lines)";
    std::cerr << '\n';
    return 0;
}

int run_check(bool verbose) {
    int failed = 0;
    blockade::acceptance::run_all([&](const blockade::acceptance::CriterionResult& r) {
        std::printf("[%s] %2d %s\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str());
        if (verbose || !r.passed) {
            for (const auto& d : r.details) std::printf("        %s\n", d.c_str());
        }
        std::fflush(stdout);
        failed += !r.passed;
    });
    std::printf("%d/%d criteria passed\n", blockade::acceptance::kCriterionCount - failed,
                blockade::acceptance::kCriterionCount);
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steady-state photon blockade sweeps for one- and two-atom cavity QED"};
    app.require_subcommand(1);

    std::string config_path, out_path, preset_name;
    auto* sweep = app.add_subcommand("sweep", "Run a sweep described by a key = value config file");
    sweep->add_option("--config", config_path, "Config file")->required()->check(CLI::ExistingFile);
    sweep->add_option("--out", out_path, "Output CSV path")->required();

    auto* preset = app.add_subcommand("preset", "Run a named figure preset");
    preset->add_option("name", preset_name, "Preset name")
        ->required()
        ->check(CLI::IsMember(blockade::cli::preset_names()));
    std::string preset_out;
    preset->add_option("--out", preset_out, "Output CSV path")->required();

    bool verbose = false;
    auto* check = app.add_subcommand("check", "Run the acceptance checks; exit code 1 if any fails");
    check->add_flag("--verbose,-v", verbose, "Print measured values for passing checks too");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sweep) return run_and_write(blockade::cli::load_config(config_path), out_path);
        if (*preset) return run_and_write(blockade::cli::preset_spec(preset_name), preset_out);
        if (*check) return run_check(verbose);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
