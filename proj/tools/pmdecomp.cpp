#include "pmdecomp/errors.hpp"
#include "pmdecomp/report.hpp"
#include "pmdecomp/serialize.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace pmdecomp;

constexpr int kExitInvalidModel = 2;
constexpr int kExitComplexity = 3;

struct CliArgs {
    std::string map_path;
    std::string delta;
    RunConfig cfg;
    std::string out;
    std::string orbit_x;
    std::size_t orbit_n = 16;
};

void apply_delta(CliArgs& args) {
    if (!args.delta.empty()) args.cfg.delta = parse_rational(args.delta);
    if (const char* cap = std::getenv("PMDECOMP_CELL_CAP")) {
        args.cfg.cell_cap = static_cast<std::size_t>(std::stoull(cap));
    }
}

void write_or_print(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ConfigError("cannot write to " + out_path);
    out << text;
}

std::string map_basename(const std::string& path) {
    return std::filesystem::path(path).filename().string();
}

int run_validate(CliArgs& args) {
    apply_delta(args);
    Model m = load_model_file(args.map_path);
    write_or_print(args.out, validate_summary(m).dump(2) + "\n");
    return 0;
}

int run_decompose(CliArgs& args) {
    apply_delta(args);
    Model m = load_model_file(args.map_path);
    Json report = decompose_report(m, args.cfg, map_basename(args.map_path));
    write_or_print(args.out, report.dump(2) + "\n");
    return 0;
}

int run_orbit(CliArgs& args) {
    apply_delta(args);
    Model m = load_model_file(args.map_path);
    write_or_print(args.out, orbit_line(m, parse_rational(args.orbit_x), args.orbit_n) + "\n");
    return 0;
}

int run_plotdata(CliArgs& args) {
    apply_delta(args);
    Model m = load_model_file(args.map_path);
    std::filesystem::path dir = args.out.empty() ? "." : args.out;
    std::filesystem::create_directories(dir);
    write_or_print((dir / "cobweb.csv").string(), cobweb_csv(m, args.cfg));
    write_or_print((dir / "regions.csv").string(), regions_csv(m, args.cfg));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"decomposition of piecewise affine interval maps into invariant components"};
    app.require_subcommand(1);

    CliArgs args;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--map", args.map_path, "map JSON file")->required();
        cmd->add_option("--delta", args.delta, "cell resolution as a rational, e.g. 1/256");
        cmd->add_option("--depth", args.cfg.depth, "saturation depth");
        cmd->add_option("--cascade-m", args.cfg.cascade_m, "cascade basis size");
        cmd->add_option("--stages", args.cfg.stages, "cascade stages to report");
        cmd->add_option("--grid", args.cfg.grid, "oracle grid subdivisions");
        cmd->add_option("--steps", args.cfg.steps, "oracle orbit steps");
        cmd->add_option("--out", args.out, "output path (default: stdout)");
    };

    CLI::App* validate = app.add_subcommand("validate", "check a map model and print its summary");
    add_common(validate);
    CLI::App* decompose = app.add_subcommand("decompose", "compute the full decomposition report");
    add_common(decompose);
    CLI::App* orbit = app.add_subcommand("orbit", "print an exact forward orbit");
    add_common(orbit);
    orbit->add_option("--x", args.orbit_x, "start point")->required();
    orbit->add_option("--n", args.orbit_n, "number of steps");
    CLI::App* plotdata = app.add_subcommand("plotdata", "emit cobweb and region CSV files");
    add_common(plotdata);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return run_validate(args);
        if (decompose->parsed()) return run_decompose(args);
        if (orbit->parsed()) return run_orbit(args);
        if (plotdata->parsed()) return run_plotdata(args);
    } catch (const ComplexityExceededError& e) {
        std::cout << Json{{"error", e.code()}, {"detail", e.what()}, {"partial", true}}.dump(2)
                  << "\n";
        return kExitComplexity;
    } catch (const Error& e) {
        std::cout << Json{{"error", e.code()}, {"detail", e.what()}}.dump(2) << "\n";
        return kExitInvalidModel;
    } catch (const std::exception& e) {
        std::cout << Json{{"error", "invalid_input"}, {"detail", e.what()}}.dump(2) << "\n";
        return kExitInvalidModel;
    }
    return 0;
}
