// relspin: sampled relativistic spin-1/2 wavepacket experiments.
//
// Subcommands: entropy-scan, wigner, gauge-check, entangle-scan.
// Exit codes: 0 success, 1 configuration error, 2 numerical failure.

#include "relspin/experiments.hpp"
#include "relspin/numerics.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

struct CommonFlags {
    std::string config_path;
    std::string out_path;
    std::string format;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "Path to a key = value config file");
    cmd->add_option("--out", flags.out_path, "Output path (default: config 'out' or stdout)");
    cmd->add_option("--format", flags.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

relspin::ExperimentConfig load(const std::string& experiment, const CommonFlags& flags) {
    relspin::ExperimentConfig cfg =
        flags.config_path.empty()
            ? relspin::default_config(experiment)
            : relspin::parse_config_file(flags.config_path, experiment);
    if (!flags.out_path.empty()) cfg.out = flags.out_path;
    if (!flags.format.empty()) cfg.format = flags.format;
    cfg.validate();
    return cfg;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw relspin::config_error("cannot open output file '" + out_path + "'");
    out << text;
}

int run(const std::string& experiment, const CommonFlags& flags) {
    const relspin::ExperimentConfig cfg = load(experiment, flags);
    std::string text;
    if (experiment == "entropy-scan") {
        text = relspin::render(relspin::run_entropy_scan(cfg), cfg.format);
    } else if (experiment == "wigner") {
        text = relspin::render(relspin::run_wigner_table(cfg), cfg.format);
    } else if (experiment == "gauge-check") {
        text = relspin::render(relspin::run_gauge_check(cfg), cfg.format);
    } else {
        text = relspin::render(relspin::run_entangle_scan(cfg), cfg.format);
    }
    emit(text, cfg.out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Relativistic spin qubits on sampled wavepackets"};
    app.require_subcommand(1);

    const char* names[] = {"entropy-scan", "wigner", "gauge-check", "entangle-scan"};
    const char* blurbs[] = {
        "Reduced-spin entropy before/after a boost, canonical vs comparison frame",
        "Composed Wigner rotation angles against the closed-form oracle",
        "Invariance of t.W under the gauge shift t -> t + theta P",
        "Two-qubit negativity before/after a boost, canonical vs comparison frame",
    };
    CommonFlags flags[4];
    for (int i = 0; i < 4; ++i) {
        add_common_flags(app.add_subcommand(names[i], blurbs[i]), flags[i]);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        relspin::numerics::set_thread_count(relspin::numerics::thread_count_from_env());
        for (int i = 0; i < 4; ++i) {
            if (app.get_subcommand(names[i])->parsed()) {
                return run(names[i], flags[i]);
            }
        }
        return 1;
    } catch (const relspin::numerical_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 2;
    } catch (const relspin::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
