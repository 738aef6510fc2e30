#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xband/pipeline.hpp"

namespace {

// swallows log lines when XBAND_LOG asks for quiet
struct NullBuf : std::streambuf {
    int overflow(int c) override { return c; }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"banded x-drop seed extension with a tile-machine cost simulator"};

    xband::RunConfig cfg;
    long long synth_pairs = 0;
    long long synth_length = 1000;
    double synth_p = 0.9;
    std::string placement = "center";
    std::string policy = "steal";
    long long rng_seed = 42;
    bool sweep = false;
    long long sweep_length = 2000;
    std::vector<int> sweep_xs = {1, 5, 10, 15, 20};

    app.add_option("--fasta", cfg.fasta_path, "FASTA input");
    app.add_option("--seeds", cfg.seeds_path, "seed list (h_id v_id h_pos v_pos)");
    app.add_option("--overlaps", cfg.overlaps_path,
                   "Matrix Market overlap matrix with seed positions");
    app.add_option("--matrix", cfg.matrix_path, "substitution matrix file");
    app.add_option("--match", cfg.match, "match reward");
    app.add_option("--mismatch", cfg.mismatch, "mismatch penalty");
    app.add_option("--gap", cfg.gap, "gap penalty");
    app.add_option("--x", cfg.x, "x-drop threshold");
    app.add_option("--band", cfg.band, "antidiagonal buffer width");
    app.add_option("--seed-len", cfg.k, "seed length k");
    app.add_option("--tiles", cfg.tiles, "tile slots per device batch");
    app.add_option("--workers", cfg.workers, "workers per tile");
    app.add_option("--devices", cfg.devices, "device count");
    app.add_option("--tile-memory", cfg.tile_memory, "bytes per tile");
    app.add_option("--frequency", cfg.frequency, "cost units per second");
    app.add_flag("--multicomparison", cfg.multicomparison,
                 "pack multiple comparisons per tile via the sequence graph");
    app.add_option("--policy", policy, "worker policy: static or steal")
        ->check(CLI::IsMember({"static", "steal"}));
    app.add_option("--synth", synth_pairs, "synthesize this many pairs");
    app.add_option("--synth-length", synth_length, "synthetic sequence length");
    app.add_option("--synth-p", synth_p, "per-base match probability");
    app.add_option("--synth-placement", placement, "seed placement: center or random")
        ->check(CLI::IsMember({"center", "random"}));
    app.add_option("--rng-seed", rng_seed, "generator seed");
    app.add_flag("--sweep-band", sweep, "run the band-width survey and exit");
    app.add_option("--sweep-length", sweep_length, "survey sequence length");
    app.add_option("--sweep-x", sweep_xs, "survey x values");
    app.add_option("--out", cfg.out_path, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    NullBuf null_buf;
    std::ostream null_log(&null_buf);
    const char* verbosity = std::getenv("XBAND_LOG");
    const bool quiet =
        verbosity && (std::string(verbosity) == "0" || std::string(verbosity) == "quiet");
    std::ostream& log = quiet ? null_log : std::cerr;

    cfg.policy = (policy == "static") ? xband::Policy::StaticRoundRobin
                                      : xband::Policy::WorkSteal;

    if (sweep) {
        try {
            std::vector<double> grid;
            for (int i = 10; i >= 0; --i) grid.push_back(double(i) / 10.0);
            std::string tsv = xband::sweep_band(size_t(sweep_length), sweep_xs,
                                                grid, uint64_t(rng_seed));
            if (cfg.out_path.empty()) {
                std::cout << tsv;
            } else {
                std::ofstream out(cfg.out_path, std::ios::binary);
                if (!out) {
                    log << "input error: cannot write '" << cfg.out_path << "'\n";
                    return 2;
                }
                out << tsv;
            }
        } catch (const xband::InputError& e) {
            log << "input error: " << e.what() << "\n";
            return 2;
        } catch (const std::exception& e) {
            log << "internal error: " << e.what() << "\n";
            return 4;
        }
        return 0;
    }

    if (synth_pairs > 0) {
        cfg.use_synth = true;
        cfg.synth.pairs = size_t(synth_pairs);
        cfg.synth.length = size_t(synth_length);
        cfg.synth.p_match = synth_p;
        cfg.synth.k = cfg.k;
        cfg.synth.placement = (placement == "random")
                                  ? xband::SeedPlacement::UniformRandom
                                  : xband::SeedPlacement::Center;
        cfg.synth.rng_seed = uint64_t(rng_seed);
    }

    xband::PipelineResult res = xband::run_pipeline(cfg, log);
    if (res.exit_code == 0 || res.exit_code == 3) {
        if (cfg.out_path.empty()) std::cout << res.results_text;
        log << "wall cost " << res.summary.wall_cost << ", "
            << res.summary.batch_count << " batches, gcups "
            << res.summary.gcups << "\n";
    }
    return res.exit_code;
}
