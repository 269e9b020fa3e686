#include <CLI11.hpp>
#include <iostream>

#include "rmlab/commands.hpp"
#include "rmlab/errors.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string output_path;
    std::string format;
    std::uint64_t seed = 0;
    bool verbose = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "run configuration file")->required();
    cmd->add_option("--output", args.output_path, "output path (default: from config/stdout)");
    cmd->add_option("--format", args.format, "csv or json (overrides config)");
    cmd->add_option("--seed", args.seed, "seed for fit-initializer retries");
    cmd->add_flag("--verbose", args.verbose, "progress to stderr");
}

rmlab::cli::RunConfig make_config(const CommonArgs& args) {
    rmlab::cli::RunConfig cfg = rmlab::cli::load_config(args.config_path);
    if (!args.output_path.empty()) cfg.output_path = args.output_path;
    if (!args.format.empty()) {
        if (args.format == "csv") cfg.format = rmlab::cli::OutputFormat::Csv;
        else if (args.format == "json") cfg.format = rmlab::cli::OutputFormat::Json;
        else throw rmlab::ConfigError("--format must be csv or json");
    }
    cfg.seed = args.seed;
    cfg.verbose = args.verbose;
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"scattering laboratory for the inverted Rosen-Morse barrier"};
    app.require_subcommand(1);

    CommonArgs args;
    CLI::App* transmission =
        app.add_subcommand("transmission", "transmission curves and oracle discrepancies");
    CLI::App* poles = app.add_subcommand("poles", "S-matrix pole table in k and E");
    CLI::App* csm = app.add_subcommand("csm", "complex-scaled spectra per angle");
    CLI::App* completeness =
        app.add_subcommand("completeness", "completeness errors and CSM residuals");
    for (CLI::App* cmd : {transmission, poles, csm, completeness}) add_common(cmd, args);

    CLI11_PARSE(app, argc, argv);

    try {
        const rmlab::cli::RunConfig cfg = make_config(args);
        if (transmission->parsed()) return rmlab::cli::cmd_transmission(cfg);
        if (poles->parsed()) return rmlab::cli::cmd_poles(cfg);
        if (csm->parsed()) return rmlab::cli::cmd_csm(cfg);
        if (completeness->parsed()) return rmlab::cli::cmd_completeness(cfg);
    } catch (const rmlab::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const rmlab::Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
