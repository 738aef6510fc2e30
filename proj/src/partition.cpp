#include "xband/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "xband/errors.hpp"

namespace xband {

OverlapGraph build_graph(const std::vector<ExtensionTask>& tasks,
                         const SequenceStore& store) {
    OverlapGraph g;
    std::set<uint32_t> ids;
    for (const ExtensionTask& t : tasks) {
        if (t.h_id >= store.size() || t.v_id >= store.size())
            throw DanglingReference("task " + std::to_string(t.task_id) +
                                    " references an unknown sequence");
        ids.insert(t.h_id);
        ids.insert(t.v_id);
    }
    for (uint32_t id : ids)
        g.vertices.push_back({id, store[id].symbols.size()});
    g.edges = tasks;
    for (int e = 0; e < (int)tasks.size(); ++e) {
        g.adjacency[tasks[e].h_id].push_back(e);
        if (tasks[e].v_id != tasks[e].h_id)
            g.adjacency[tasks[e].v_id].push_back(e);
    }
    return g;
}

TileBudget TileBudget::make(int band, int workers, size_t total) {
    TileBudget b;
    b.total_bytes = total;
    b.reserved = size_t(workers) * 2 * size_t(band) * sizeof(Score);
    if (b.reserved > b.total_bytes)
        throw InputError("band buffers for " + std::to_string(workers) +
                         " workers at width " + std::to_string(band) +
                         " do not fit in " + std::to_string(total) + " bytes");
    return b;
}

std::pair<WorkUnit, WorkUnit> split_lr(const ExtensionTask& t,
                                       const SequenceStore& store, int k) {
    if (t.h_id >= store.size() || t.v_id >= store.size())
        throw DanglingReference("task " + std::to_string(t.task_id) +
                                " references an unknown sequence");
    const size_t hn = store[t.h_id].symbols.size();
    const size_t vn = store[t.v_id].symbols.size();
    if (t.h_seed + size_t(k) > hn || t.v_seed + size_t(k) > vn)
        throw SeedOutOfBounds("seed of task " + std::to_string(t.task_id) +
                              " does not fit inside its sequences");

    WorkUnit l;
    l.unit_id = 2 * t.task_id;
    l.task_id = t.task_id;
    l.side = Side::L;
    l.h_id = t.h_id;
    l.v_id = t.v_id;
    l.h_origin = t.h_seed;
    l.v_origin = t.v_seed;
    l.h_len = t.h_seed;
    l.v_len = t.v_seed;
    l.est_cost = estimate_cost(l);

    WorkUnit r = l;
    r.unit_id = 2 * t.task_id + 1;
    r.side = Side::R;
    r.h_origin = t.h_seed + size_t(k);
    r.v_origin = t.v_seed + size_t(k);
    r.h_len = hn - t.h_seed - size_t(k);
    r.v_len = vn - t.v_seed - size_t(k);
    r.est_cost = estimate_cost(r);
    return {l, r};
}

long long estimate_cost(const WorkUnit& u) {
    return (long long)u.h_len * (long long)u.v_len;
}

long long Partition::est_cost() const {
    long long c = 0;
    for (const WorkUnit& u : units) c += u.est_cost;
    return c;
}

namespace {

struct OpenPartition {
    std::set<uint32_t> omega;
    std::vector<int> task_ids;
    size_t seq_bytes = 0;
};

void seal(std::vector<Partition>& out, OpenPartition& p) {
    if (p.task_ids.empty()) return;
    Partition sealed;
    sealed.index = (int)out.size();
    sealed.omega.assign(p.omega.begin(), p.omega.end());
    sealed.task_ids = std::move(p.task_ids);
    sealed.seq_bytes = p.seq_bytes;
    out.push_back(std::move(sealed));
    p = OpenPartition{};
}

}  // namespace

std::vector<Partition> greedy_partition(const OverlapGraph& g,
                                        const TileBudget& budget) {
    std::vector<Partition> out;
    std::vector<char> taken(g.edges.size(), 0);
    std::map<uint32_t, size_t> len;
    for (const auto& v : g.vertices) len[v.seq_id] = v.length;

    OpenPartition p;
    for (const auto& start : g.vertices) {
        std::vector<uint32_t> worklist{start.seq_id};
        size_t wi = 0;
        while (wi < worklist.size()) {
            const uint32_t w = worklist[wi];
            auto it = g.adjacency.find(w);
            bool reseeded = false;
            if (it != g.adjacency.end()) {
                for (int e : it->second) {
                    if (taken[e]) continue;
                    const ExtensionTask& t = g.edges[e];

                    const uint32_t need[2] = {t.h_id, t.v_id};
                    const int nn = (t.v_id == t.h_id) ? 1 : 2;
                    size_t add_bytes = 0, add_seqs = 0;
                    for (int q = 0; q < nn; ++q) {
                        if (p.omega.count(need[q])) continue;
                        add_bytes += len[need[q]];
                        ++add_seqs;
                    }
                    const size_t n_units = 2 * (p.task_ids.size() + 1);
                    if (budget.fits(p.seq_bytes + add_bytes,
                                    p.omega.size() + add_seqs, n_units)) {
                        for (uint32_t id : {t.h_id, t.v_id}) {
                            if (p.omega.insert(id).second) {
                                p.seq_bytes += len[id];
                                worklist.push_back(id);
                            }
                        }
                        p.task_ids.push_back(t.task_id);
                        taken[e] = 1;
                        continue;
                    }

                    // the open partition cannot take this edge; seal it and
                    // grow a fresh one around the edge's own endpoints
                    size_t fresh_bytes = len[t.h_id];
                    size_t fresh_seqs = 1;
                    if (t.v_id != t.h_id) {
                        fresh_bytes += len[t.v_id];
                        ++fresh_seqs;
                    }
                    if (!budget.fits(fresh_bytes, fresh_seqs, 2))
                        throw TaskTooLarge(t.task_id,
                                           "sequences of task " +
                                               std::to_string(t.task_id) +
                                               " exceed the tile budget alone");
                    seal(out, p);
                    p.omega.insert(t.h_id);
                    p.omega.insert(t.v_id);
                    p.seq_bytes = fresh_bytes;
                    p.task_ids.push_back(t.task_id);
                    taken[e] = 1;
                    worklist.clear();
                    worklist.push_back(t.h_id);
                    if (t.v_id != t.h_id) worklist.push_back(t.v_id);
                    wi = 0;
                    reseeded = true;
                    break;
                }
            }
            if (!reseeded) ++wi;
        }
    }
    seal(out, p);
    return out;
}

std::vector<Partition> singleton_partitions(const std::vector<ExtensionTask>& tasks,
                                            const SequenceStore& store,
                                            const TileBudget& budget) {
    std::vector<Partition> out;
    out.reserve(tasks.size());
    for (const ExtensionTask& t : tasks) {
        if (t.h_id >= store.size() || t.v_id >= store.size())
            throw DanglingReference("task " + std::to_string(t.task_id) +
                                    " references an unknown sequence");
        Partition p;
        p.index = (int)out.size();
        p.omega.push_back(t.h_id);
        if (t.v_id != t.h_id) p.omega.push_back(t.v_id);
        std::sort(p.omega.begin(), p.omega.end());
        p.task_ids.push_back(t.task_id);
        for (uint32_t id : p.omega) p.seq_bytes += store[id].symbols.size();
        if (!budget.fits(p.seq_bytes, p.omega.size(), 2))
            throw TaskTooLarge(t.task_id, "sequences of task " +
                                              std::to_string(t.task_id) +
                                              " exceed the tile budget alone");
        out.push_back(std::move(p));
    }
    return out;
}

void attach_units(std::vector<Partition>& parts,
                  const std::vector<ExtensionTask>& tasks,
                  const SequenceStore& store, int k) {
    std::map<int, const ExtensionTask*> by_id;
    for (const ExtensionTask& t : tasks) by_id[t.task_id] = &t;
    for (Partition& p : parts) {
        p.units.clear();
        for (int tid : p.task_ids) {
            auto it = by_id.find(tid);
            if (it == by_id.end())
                throw DanglingReference("partition " + std::to_string(p.index) +
                                        " references unknown task " +
                                        std::to_string(tid));
            auto [l, r] = split_lr(*it->second, store, k);
            p.units.push_back(l);
            p.units.push_back(r);
        }
    }
}

std::vector<Batch> schedule_batches(const std::vector<Partition>& parts, int K,
                                    const TileBudget& budget) {
    if (K < 1) throw InputError("tiles per device must be at least 1");

    std::vector<int> order(parts.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const long long ca = parts[a].est_cost(), cb = parts[b].est_cost();
        if (ca != cb) return ca > cb;
        return parts[a].index < parts[b].index;
    });

    std::vector<Batch> batches;
    auto open_batch = [&]() {
        Batch b;
        b.index = (int)batches.size();
        b.tiles.resize(size_t(K));
        batches.push_back(std::move(b));
    };
    open_batch();

    for (int pi : order) {
        const Partition& p = parts[pi];
        Batch& cur = batches.back();

        // least-loaded slot first, slot index breaking ties; take the first
        // slot whose combined resident set still fits the tile
        std::vector<int> slots(static_cast<size_t>(K));
        std::iota(slots.begin(), slots.end(), 0);
        std::stable_sort(slots.begin(), slots.end(), [&](int a, int b) {
            if (cur.tiles[a].cost != cur.tiles[b].cost)
                return cur.tiles[a].cost < cur.tiles[b].cost;
            return a < b;
        });

        auto try_place = [&](Batch::Slot& slot) -> bool {
            const size_t bytes = slot.seq_bytes + p.seq_bytes;
            const size_t seqs = slot.n_seqs + p.omega.size();
            const size_t units = slot.n_units + p.units.size();
            if (!budget.fits(bytes, seqs, units)) return false;
            std::vector<uint32_t> merged;
            std::set_union(slot.omega.begin(), slot.omega.end(),
                           p.omega.begin(), p.omega.end(),
                           std::back_inserter(merged));
            slot.partition_ids.push_back(p.index);
            slot.cost += p.est_cost();
            slot.omega = std::move(merged);
            slot.seq_bytes = bytes;
            slot.n_seqs = seqs;
            slot.n_units = units;
            return true;
        };

        bool placed = false;
        for (int s : slots)
            if (try_place(cur.tiles[s])) {
                placed = true;
                break;
            }
        if (!placed) {
            open_batch();
            if (!try_place(batches.back().tiles[0]))
                throw TaskTooLarge(p.task_ids.empty() ? -1 : p.task_ids.front(),
                                   "partition " + std::to_string(p.index) +
                                       " exceeds the tile budget on an empty tile");
        }
    }

    for (Batch& b : batches) {
        b.est_makespan = 0;
        for (const auto& slot : b.tiles)
            b.est_makespan = std::max(b.est_makespan, slot.cost);
    }
    return batches;
}

}  // namespace xband
