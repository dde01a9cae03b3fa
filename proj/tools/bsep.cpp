#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bsep/cli_io.hpp"

int main(int argc, char** argv) {
    CLI::App app{"bsep: bounded separation of singularities toolkit"};
    app.require_subcommand(1);

    std::string config_path, out_dir;
    int refine = -1;
    long seed = -1;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "scenario config (JSON)")->required();
        cmd->add_option("--out", out_dir, "output directory");
        cmd->add_option("--refine", refine, "extra refinement levels");
        cmd->add_option("--seed", seed, "seed for randomized probe grids");
    };
    CLI::App* classify = app.add_subcommand("classify", "Theorem-8 trichotomy for a pair");
    CLI::App* split = app.add_subcommand("split", "cutting -> dbar -> splitting pipeline");
    CLI::App* witness = app.add_subcommand("witness", "schedule sweep and blow-up certificates");
    CLI::App* theorem9 = app.add_subcommand("theorem9", "disc-chain splitting certificates");
    for (CLI::App* cmd : {classify, split, witness, theorem9}) add_common(cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        bsep::ScenarioConfig cfg = bsep::load_config(config_path);
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (refine >= 0) cfg.refine = refine;
        if (seed >= 0) cfg.seed = static_cast<unsigned long>(seed);
        if (classify->parsed()) return bsep::cmd_classify(cfg);
        if (split->parsed()) return bsep::cmd_split(cfg);
        if (witness->parsed()) return bsep::cmd_witness(cfg);
        return bsep::cmd_theorem9(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    }
}
