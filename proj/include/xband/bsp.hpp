#ifndef XBAND_BSP_HPP
#define XBAND_BSP_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "xband/align.hpp"
#include "xband/partition.hpp"

namespace xband {

/* StaticRoundRobin preassigns unit i to worker i mod workers, executed in
 * list order per worker. WorkSteal keeps that assignment but lets a worker
 * that runs out of its own units take the earliest not-yet-started unit
 * from the shared list, so no unit starts later than it would statically. */
enum class Policy : uint8_t { StaticRoundRobin, WorkSteal };

/* How a unit's cost is obtained. Estimated uses the length product carried
 * on the unit; Measured uses real kernel cell counts, either looked up in
 * unit_cells (filled by a prior alignment pass) or by running the kernel
 * right here via store/scheme. frequency converts abstract cost to seconds. */
struct CostModel {
    enum class Mode : uint8_t { Estimated, Measured };
    Mode mode = Mode::Estimated;
    double frequency = 1.33e9;

    const std::unordered_map<int, long long>* unit_cells = nullptr;
    const SequenceStore* store = nullptr;
    const ScoringScheme* scheme = nullptr;
    int band = 1024;
};

struct TileReport {
    struct Exec {
        int unit_id = 0;
        int worker = 0;
        long long start = 0, end = 0;
    };
    struct Failed {
        int unit_id = 0;
        int observed_spread = 0;
    };
    std::vector<long long> per_worker_cost;
    long long tile_cost = 0;
    double utilization = 0.0;   // mean worker busy fraction of tile_cost
    std::vector<Exec> executed; // unit_id order
    std::vector<Failed> failed;
};

/* Simulates one tile: workers pick units under the given policy, tile cost
 * is the maximum worker load. Measured-mode band failures cost the cells
 * burned before the abort and the tile keeps going. */
TileReport run_tile(const std::vector<WorkUnit>& units, Policy policy,
                    const CostModel& model, int workers = 6);

struct BatchReport {
    int batch = 0;
    long long batch_cost = 0;          // max tile cost, BSP barrier
    size_t transmitted_bytes = 0;      // unique sequence bytes sent to slots
    size_t transmitted_seqs = 0;
    std::vector<TileReport> tiles;
};

BatchReport run_batch(const Batch& b, const std::vector<Partition>& parts,
                      Policy policy, const CostModel& model, int workers = 6);

struct DeviceSpan {
    int batch = 0;
    long long start = 0, end = 0;
};

struct SimReport {
    long long wall_cost = 0;
    std::vector<BatchReport> batches;              // by batch index
    std::vector<std::vector<DeviceSpan>> devices;  // per-device timeline
    size_t transmitted_bytes = 0;
    size_t transmitted_seqs = 0;
};

/* Devices drain the batch queue front-to-back; a device takes the next
 * batch the moment it goes idle, ties broken by device index. */
SimReport run_devices(const std::vector<Batch>& batches,
                      const std::vector<Partition>& parts, int n_devices,
                      Policy policy, const CostModel& model, int workers = 6);

double time_from_cost(long long cost, double frequency);

}  // namespace xband

#endif
