#ifndef XBAND_PIPELINE_HPP
#define XBAND_PIPELINE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "xband/bsp.hpp"
#include "xband/io.hpp"
#include "xband/partition.hpp"

namespace xband {

struct RunConfig {
    // inputs; either synthetic or files
    bool use_synth = false;
    SynthParams synth;
    std::string fasta_path;
    std::string seeds_path;
    std::string overlaps_path;
    std::string matrix_path;   // switches scoring to a substitution matrix

    // scoring
    Score match = 1, mismatch = -1, gap = -1, x = 15;
    int k = 17;

    // kernel + machine
    int band = 1024;
    int tiles = 8;         // slots per device batch
    int workers = 6;
    int devices = 1;
    size_t tile_memory = 624 * 1024;
    double frequency = 1.33e9;
    Policy policy = Policy::WorkSteal;
    bool multicomparison = false;

    std::string out_path;  // empty -> stdout
};

struct PipelineResult {
    int exit_code = 0;
    std::vector<SeedAlignment> alignments;  // task order, completed tasks
    std::vector<FailedUnit> failed;
    RunSummary summary;
    SimReport sim;
    size_t partition_count = 0;
    std::string results_text;
};

/* End-to-end run: ingest, partition, split, schedule, align every unit
 * once, replay the schedule on the cost simulator, write the table.
 * Exit codes: 0 clean, 2 input error, 3 band failures on some units,
 * 4 internal fault. */
PipelineResult run_pipeline(const RunConfig& cfg, std::ostream& log);

/* Band-width survey: for each (x, error rate) generate one synthetic pair,
 * extend with an effectively unbounded band and report the spread. */
std::string sweep_band(size_t length, const std::vector<int>& xs,
                       const std::vector<double>& p_grid, uint64_t rng_seed);

/* Throughput in billions of cell updates per second for one h x v problem
 * solved in t seconds. */
double gcups(double h_len, double v_len, double seconds);

}  // namespace xband

#endif
