#include "xband/pipeline.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "xband/errors.hpp"
#include "xband/scoring.hpp"

namespace xband {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ScoringScheme build_scheme(const RunConfig& cfg, std::string& alphabet_out) {
    if (!cfg.matrix_path.empty()) {
        SubMatrix m = parse_submatrix(read_file(cfg.matrix_path));
        alphabet_out = m.alphabet;
        return ScoringScheme::from_matrix(m, cfg.gap, cfg.x);
    }
    alphabet_out = "ACGTN";
    return ScoringScheme::match_mismatch(cfg.match, cfg.mismatch, cfg.gap, cfg.x);
}

Dataset ingest(const RunConfig& cfg, const std::string& alphabet) {
    if (cfg.use_synth) return generate_synthetic(cfg.synth);
    Dataset ds;
    ds.k = cfg.k;
    if (cfg.fasta_path.empty())
        throw InputError("no input: provide a FASTA file or synthetic parameters");
    ds.store = parse_fasta(read_file(cfg.fasta_path), alphabet);
    if (!cfg.seeds_path.empty())
        ds.tasks = parse_seeds(read_file(cfg.seeds_path));
    else if (!cfg.overlaps_path.empty())
        ds.tasks = parse_overlaps(read_file(cfg.overlaps_path));
    else
        throw InputError("no tasks: provide a seed list or an overlap matrix");
    return ds;
}

}  // namespace

double gcups(double h_len, double v_len, double seconds) {
    if (seconds <= 0.0) throw ZeroTime("cannot rate work done in zero time");
    return h_len * v_len / seconds / 1e9;
}

PipelineResult run_pipeline(const RunConfig& cfg, std::ostream& log) {
    PipelineResult res;
    try {
        std::string alphabet;
        const ScoringScheme scheme = build_scheme(cfg, alphabet);
        const Dataset ds = ingest(cfg, alphabet);
        const TileBudget budget =
            TileBudget::make(cfg.band, cfg.workers, cfg.tile_memory);

        std::vector<Partition> parts =
            cfg.multicomparison
                ? greedy_partition(build_graph(ds.tasks, ds.store), budget)
                : singleton_partitions(ds.tasks, ds.store, budget);
        attach_units(parts, ds.tasks, ds.store, ds.k);
        std::vector<Batch> batches =
            schedule_batches(parts, cfg.tiles, budget);
        res.partition_count = parts.size();

        // the other partitioning mode, metrics only, to make the reuse
        // effect visible in the log
        {
            std::vector<Partition> alt =
                cfg.multicomparison
                    ? singleton_partitions(ds.tasks, ds.store, budget)
                    : greedy_partition(build_graph(ds.tasks, ds.store), budget);
            attach_units(alt, ds.tasks, ds.store, ds.k);
            std::vector<Batch> alt_batches =
                schedule_batches(alt, cfg.tiles, budget);
            size_t alt_bytes = 0;
            for (const Batch& b : alt_batches)
                for (const auto& slot : b.tiles) alt_bytes += slot.seq_bytes;
            size_t own_bytes = 0;
            for (const Batch& b : batches)
                for (const auto& slot : b.tiles) own_bytes += slot.seq_bytes;
            const char* own = cfg.multicomparison ? "multi" : "single";
            const char* other = cfg.multicomparison ? "single" : "multi";
            log << "partitions(" << own << "): " << parts.size() << ", batches: "
                << batches.size() << ", transmitted bytes: " << own_bytes << "\n";
            log << "partitions(" << other << "): " << alt.size() << ", batches: "
                << alt_batches.size() << ", transmitted bytes: " << alt_bytes
                << "\n";
        }

        // one real kernel run per unit; the simulator replays these counts
        std::unordered_map<int, long long> unit_cells;
        std::vector<SeedAlignment> done;
        BandBuffers scratch(cfg.band);
        for (const ExtensionTask& t : ds.tasks) {
            auto [l, r] = split_lr(t, ds.store, ds.k);
            const Sequence& hs = ds.store[t.h_id];
            const Sequence& vs = ds.store[t.v_id];

            SeedAlignment a;
            a.task_id = t.task_id;
            for (int i = 0; i < ds.k; ++i)
                a.seed_score += sim(scheme, hs.symbols[t.h_seed + size_t(i)],
                                    vs.symbols[t.v_seed + size_t(i)]);

            bool ok = true;
            for (const WorkUnit* u : {&l, &r}) {
                const Dir dir = (u->side == Side::L) ? Dir::Left : Dir::Right;
                SeqView hv = make_view(hs, u->h_origin, dir, u->h_len);
                SeqView vv = make_view(vs, u->v_origin, dir, u->v_len);
                try {
                    ExtensionResult er =
                        xdrop_extend(hv, vv, scheme, cfg.band, &scratch);
                    unit_cells[u->unit_id] = er.cells;
                    (u->side == Side::L ? a.left : a.right) = er;
                } catch (const BandExceededError& e) {
                    unit_cells[u->unit_id] = e.cells;
                    res.failed.push_back({t.task_id,
                                          u->side == Side::L ? 'L' : 'R',
                                          e.observed_spread});
                    ok = false;
                }
            }
            if (ok) {
                a.total = a.left.score + a.seed_score + a.right.score;
                done.push_back(a);
            }
        }
        res.alignments = std::move(done);

        CostModel model;
        model.mode = CostModel::Mode::Measured;
        model.frequency = cfg.frequency;
        model.unit_cells = &unit_cells;
        model.store = &ds.store;
        model.scheme = &scheme;
        model.band = cfg.band;
        res.sim = run_devices(batches, parts, cfg.devices, cfg.policy, model,
                              cfg.workers);

        res.summary.wall_cost = res.sim.wall_cost;
        res.summary.wall_seconds = time_from_cost(res.sim.wall_cost, cfg.frequency);
        res.summary.batch_count = batches.size();
        res.summary.transmitted_bytes = res.sim.transmitted_bytes;
        res.summary.transmitted_seqs = res.sim.transmitted_seqs;
        res.summary.failed_units = res.failed.size();
        for (const auto& kv : unit_cells) res.summary.total_cells += kv.second;
        if (res.summary.wall_seconds > 0.0) {
            double products = 0.0;
            for (const ExtensionTask& t : ds.tasks)
                products += double(ds.store[t.h_id].symbols.size()) *
                            double(ds.store[t.v_id].symbols.size());
            res.summary.gcups = gcups(products, 1.0, res.summary.wall_seconds);
        }

        res.results_text = write_results(res.alignments, res.failed, res.summary);
        if (!cfg.out_path.empty()) {
            std::ofstream out(cfg.out_path, std::ios::binary);
            if (!out) throw InputError("cannot write '" + cfg.out_path + "'");
            out << res.results_text;
        }
        res.exit_code = res.failed.empty() ? 0 : 3;
    } catch (const InputError& e) {
        log << "input error: " << e.what() << "\n";
        res.exit_code = 2;
    } catch (const std::exception& e) {
        log << "internal error: " << e.what() << "\n";
        res.exit_code = 4;
    }
    return res;
}

std::string sweep_band(size_t length, const std::vector<int>& xs,
                       const std::vector<double>& p_grid, uint64_t rng_seed) {
    std::ostringstream out;
    out << "x\terror_rate\tdelta_w\n";
    for (int x : xs) {
        for (double p : p_grid) {
            SynthParams sp;
            sp.pairs = 1;
            sp.length = length;
            sp.p_match = p;
            sp.k = 17;
            sp.placement = SeedPlacement::Center;
            sp.rng_seed = rng_seed;
            Dataset ds = generate_synthetic(sp);
            ScoringScheme scheme = ScoringScheme::match_mismatch(1, -1, -1, x);
            SeqView h = make_view(ds.store[0], 0, Dir::Right,
                                  ds.store[0].symbols.size());
            SeqView v = make_view(ds.store[1], 0, Dir::Right,
                                  ds.store[1].symbols.size());
            ExtensionResult r =
                xdrop_extend(h, v, scheme, int(length) + 1, nullptr);
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.2f", 1.0 - p);
            out << x << '\t' << buf << '\t' << r.delta_w << '\n';
        }
    }
    return out.str();
}

}  // namespace xband
