#include "xband/bsp.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "xband/errors.hpp"

namespace xband {

namespace {

struct ResolvedCost {
    long long cost = 0;
    std::optional<TileReport::Failed> failure;
};

ResolvedCost unit_cost(const WorkUnit& u, const CostModel& model,
                       std::optional<BandBuffers>& scratch) {
    if (model.mode == CostModel::Mode::Estimated) return {u.est_cost, {}};
    if (model.unit_cells) {
        auto it = model.unit_cells->find(u.unit_id);
        if (it != model.unit_cells->end()) return {it->second, {}};
    }
    if (!model.store || !model.scheme)
        throw InputError("measured cost for unit " + std::to_string(u.unit_id) +
                         " is not resolvable: no cached cells and no kernel inputs");
    const Dir dir = (u.side == Side::L) ? Dir::Left : Dir::Right;
    SeqView h = make_view((*model.store)[u.h_id], u.h_origin, dir, u.h_len);
    SeqView v = make_view((*model.store)[u.v_id], u.v_origin, dir, u.v_len);
    if (!scratch) scratch.emplace(model.band);
    try {
        ExtensionResult r = xdrop_extend(h, v, *model.scheme, model.band, &*scratch);
        return {r.cells, {}};
    } catch (const BandExceededError& e) {
        return {e.cells, TileReport::Failed{u.unit_id, e.observed_spread}};
    }
}

}  // namespace

TileReport run_tile(const std::vector<WorkUnit>& units, Policy policy,
                    const CostModel& model, int workers) {
    if (workers < 1) throw InputError("worker count must be at least 1");

    TileReport rep;
    rep.per_worker_cost.assign(size_t(workers), 0);
    std::vector<long long> finish(size_t(workers), 0);
    std::optional<BandBuffers> scratch;

    std::vector<long long> cost(units.size(), 0);
    for (size_t i = 0; i < units.size(); ++i) {
        ResolvedCost rc = unit_cost(units[i], model, scratch);
        cost[i] = rc.cost;
        if (rc.failure) rep.failed.push_back(*rc.failure);
    }

    auto run_on = [&](size_t i, int w) {
        TileReport::Exec ex;
        ex.unit_id = units[i].unit_id;
        ex.worker = w;
        ex.start = finish[size_t(w)];
        ex.end = ex.start + cost[i];
        finish[size_t(w)] = ex.end;
        rep.per_worker_cost[size_t(w)] += cost[i];
        rep.executed.push_back(ex);
    };

    if (policy == Policy::StaticRoundRobin) {
        for (size_t i = 0; i < units.size(); ++i)
            run_on(i, int(i % size_t(workers)));
    } else {
        // Eventual work stealing on top of the static assignment: each
        // worker runs its own round-robin share in list order; once out of
        // own units it takes the earliest not-yet-started unit from the
        // shared list. Simultaneous grabs resolve by worker index, so a
        // unit runs exactly once and never starts later than it would
        // under the static assignment.
        std::vector<char> started(units.size(), 0);
        std::vector<size_t> own_next(static_cast<size_t>(workers));
        for (size_t w = 0; w < size_t(workers); ++w) own_next[w] = w;
        size_t global_next = 0;
        std::vector<char> active(size_t(workers), 1);
        int n_active = workers;
        while (n_active > 0) {
            int w = -1;
            for (int c = 0; c < workers; ++c)
                if (active[size_t(c)] &&
                    (w < 0 || finish[size_t(c)] < finish[size_t(w)]))
                    w = c;
            size_t& own = own_next[size_t(w)];
            while (own < units.size() && started[own]) own += size_t(workers);
            while (global_next < units.size() && started[global_next])
                ++global_next;
            size_t pick = own < units.size() ? own : global_next;
            if (pick >= units.size()) {
                active[size_t(w)] = 0;
                --n_active;
                continue;
            }
            started[pick] = 1;
            run_on(pick, w);
        }
    }

    for (long long f : finish) rep.tile_cost = std::max(rep.tile_cost, f);
    long long busy = 0;
    for (long long c : rep.per_worker_cost) busy += c;
    rep.utilization = rep.tile_cost > 0
                          ? double(busy) / (double(workers) * double(rep.tile_cost))
                          : 1.0;
    std::sort(rep.executed.begin(), rep.executed.end(),
              [](const TileReport::Exec& a, const TileReport::Exec& b) {
                  return a.unit_id < b.unit_id;
              });
    std::sort(rep.failed.begin(), rep.failed.end(),
              [](const TileReport::Failed& a, const TileReport::Failed& b) {
                  return a.unit_id < b.unit_id;
              });
    return rep;
}

BatchReport run_batch(const Batch& b, const std::vector<Partition>& parts,
                      Policy policy, const CostModel& model, int workers) {
    BatchReport rep;
    rep.batch = b.index;
    for (const Batch::Slot& slot : b.tiles) {
        std::vector<WorkUnit> units;
        for (int pid : slot.partition_ids) {
            const Partition& p = parts.at(size_t(pid));
            units.insert(units.end(), p.units.begin(), p.units.end());
        }
        TileReport tr = run_tile(units, policy, model, workers);
        rep.batch_cost = std::max(rep.batch_cost, tr.tile_cost);
        rep.transmitted_bytes += slot.seq_bytes;
        rep.transmitted_seqs += slot.n_seqs;
        rep.tiles.push_back(std::move(tr));
    }
    return rep;
}

SimReport run_devices(const std::vector<Batch>& batches,
                      const std::vector<Partition>& parts, int n_devices,
                      Policy policy, const CostModel& model, int workers) {
    if (n_devices < 1) throw InputError("device count must be at least 1");

    SimReport rep;
    rep.devices.assign(size_t(n_devices), {});
    std::vector<long long> device_end(size_t(n_devices), 0);

    for (const Batch& b : batches) {
        BatchReport br = run_batch(b, parts, policy, model, workers);

        int d = 0;
        for (int c = 1; c < n_devices; ++c)
            if (device_end[c] < device_end[d]) d = c;
        DeviceSpan span;
        span.batch = b.index;
        span.start = device_end[d];
        span.end = span.start + br.batch_cost;
        device_end[d] = span.end;
        rep.devices[size_t(d)].push_back(span);

        rep.transmitted_bytes += br.transmitted_bytes;
        rep.transmitted_seqs += br.transmitted_seqs;
        rep.batches.push_back(std::move(br));
    }

    for (long long e : device_end) rep.wall_cost = std::max(rep.wall_cost, e);
    return rep;
}

double time_from_cost(long long cost, double frequency) {
    if (frequency <= 0.0) throw InputError("frequency must be positive");
    return double(cost) / frequency;
}

}  // namespace xband
