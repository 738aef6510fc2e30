#ifndef XBAND_PARTITION_HPP
#define XBAND_PARTITION_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "xband/align.hpp"
#include "xband/sequence.hpp"

namespace xband {

/* Comparison graph: one vertex per referenced sequence, one edge per task.
 * A partition is a set of co-resident sequences (omega) plus the tasks that
 * run entirely inside that set. */
struct OverlapGraph {
    struct Vertex {
        uint32_t seq_id = 0;
        size_t length = 0;
    };
    std::vector<Vertex> vertices;                      // ascending seq_id
    std::vector<ExtensionTask> edges;                  // input order
    std::map<uint32_t, std::vector<int>> adjacency;    // seq_id -> edge ids, input order
};

OverlapGraph build_graph(const std::vector<ExtensionTask>& tasks,
                         const SequenceStore& store);

/* Per-tile memory budget. reserved covers the kernel score buffers for all
 * workers; what remains pays for resident sequence bytes plus fixed
 * per-sequence and per-unit bookkeeping. */
struct TileBudget {
    size_t total_bytes = 624 * 1024;
    size_t reserved = 0;
    size_t per_seq_overhead = 16;
    size_t per_unit_overhead = 48;

    static TileBudget make(int band, int workers = 6,
                           size_t total = 624 * 1024);

    size_t sequence_budget() const { return total_bytes - reserved; }
    bool fits(size_t seq_bytes, size_t n_seqs, size_t n_units) const {
        return seq_bytes + n_seqs * per_seq_overhead + n_units * per_unit_overhead
               <= sequence_budget();
    }
};

enum class Side : uint8_t { L, R };

/* Half of a seed extension, self-describing enough to run on any tile that
 * holds both sequences. */
struct WorkUnit {
    int unit_id = 0;   // 2*task_id for L, 2*task_id+1 for R
    int task_id = 0;
    Side side = Side::L;
    uint32_t h_id = 0, v_id = 0;
    size_t h_origin = 0, v_origin = 0;
    size_t h_len = 0, v_len = 0;
    long long est_cost = 0;
};

struct Partition {
    int index = 0;
    std::vector<uint32_t> omega;   // resident sequence ids, ascending
    std::vector<int> task_ids;     // edges folded into this partition
    std::vector<WorkUnit> units;   // filled by attach_units
    size_t seq_bytes = 0;

    long long est_cost() const;
};

/* Splits one task into its left and right extension units. */
std::pair<WorkUnit, WorkUnit> split_lr(const ExtensionTask& t,
                                       const SequenceStore& store, int k);

long long estimate_cost(const WorkUnit& u);

/* Greedy sequence-reuse packing: walk vertices in id order, pull each
 * vertex's tasks (and transitively its partners' tasks) into the open
 * partition until the next sequence would blow the budget, then seal it and
 * start a fresh one around the overflowing edge. */
std::vector<Partition> greedy_partition(const OverlapGraph& g, const TileBudget& budget);

/* One partition per task, no reuse. The baseline the greedy packing is
 * measured against. */
std::vector<Partition> singleton_partitions(const std::vector<ExtensionTask>& tasks,
                                            const SequenceStore& store,
                                            const TileBudget& budget);

void attach_units(std::vector<Partition>& parts,
                  const std::vector<ExtensionTask>& tasks,
                  const SequenceStore& store, int k);

/* A batch maps partitions onto K tile slots; slots may co-host several
 * partitions when their combined footprint fits. */
struct Batch {
    struct Slot {
        std::vector<int> partition_ids;
        long long cost = 0;
        size_t seq_bytes = 0;   // sum over partitions; each partition ships
        size_t n_seqs = 0;      // its own residency block, no cross-partition
        size_t n_units = 0;     // dedup (reuse happens inside a partition)
        std::vector<uint32_t> omega;  // union, ascending, informational
    };
    int index = 0;
    std::vector<Slot> tiles;
    long long est_makespan = 0;
};

/* LPT over partition costs: heaviest partition first into the least-loaded
 * slot that still has room, opening a new batch only when no slot in the
 * current one fits. */
std::vector<Batch> schedule_batches(const std::vector<Partition>& parts, int K,
                                    const TileBudget& budget);

}  // namespace xband

#endif
