#ifndef XBAND_IO_HPP
#define XBAND_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "xband/align.hpp"
#include "xband/sequence.hpp"

namespace xband {

struct Dataset {
    SequenceStore store;
    std::vector<ExtensionTask> tasks;
    int k = 0;
};

/* FASTA, uppercased, CRLF tolerant. Records are indexed in file order; the
 * first header token is kept as the name. Symbols are validated against
 * `allowed` at ingestion. */
SequenceStore parse_fasta(const std::string& text, const std::string& allowed = "ACGTN");

/* Seed list: one task per line, four integers (h_id, v_id, h_seed, v_seed),
 * '#' comments and blank lines skipped. */
std::vector<ExtensionTask> parse_seeds(const std::string& text);

/* Matrix Market coordinate overlaps: entry (i, j) is a task between
 * sequences i-1 and j-1. pattern entries seed both positions at 0; integer
 * entries must carry two value columns, h_seed then v_seed. */
std::vector<ExtensionTask> parse_overlaps(const std::string& text);

enum class SeedPlacement : uint8_t { Center, UniformRandom };

struct SynthParams {
    size_t pairs = 1;
    size_t length = 1000;
    double p_match = 0.9;      // per-symbol probability of keeping H's base
    int k = 17;
    SeedPlacement placement = SeedPlacement::Center;
    uint64_t rng_seed = 42;
};

/* Deterministic synthetic pairs: H uniform over ACGT, V a copy whose
 * non-seed positions mutate to a strictly different base with probability
 * 1 - p_match. The planted seed region is identical on both and the task
 * points at it. Identical params give identical datasets on every run. */
Dataset generate_synthetic(const SynthParams& p);

struct RunSummary {
    double gcups = 0.0;
    double wall_seconds = 0.0;
    long long wall_cost = 0;
    size_t batch_count = 0;
    size_t transmitted_bytes = 0;
    size_t transmitted_seqs = 0;
    long long total_cells = 0;
    size_t failed_units = 0;
};

struct FailedUnit {
    int task_id = 0;
    char side = '?';
    int observed_spread = 0;
};

/* Result table: one row per finished extension, (task_id, L before R)
 * order, then a '# total' trailer and a '#'-prefixed summary block. */
std::string write_results(const std::vector<SeedAlignment>& alignments,
                          const std::vector<FailedUnit>& failed,
                          const RunSummary& summary);

}  // namespace xband

#endif
