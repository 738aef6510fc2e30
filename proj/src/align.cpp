#include "xband/align.hpp"

#include <algorithm>
#include <limits>

namespace xband {

namespace {

constexpr Score kDead = std::numeric_limits<Score>::min();

/* Antidiagonal d holds cells (i, j) with i + j = d; i is the v-offset.
 * Cells are addressed by the folded diagonal u = floor(d/2) - i, chosen so
 * a cell and its diagonal predecessor two antidiagonals back share the same
 * u. Row d then overwrites row d-2 slot-for-slot: every diagonal value is
 * read exactly once, right before the cell that consumed it lands in its
 * place. Gap sources live on the other row and are never written during a
 * sweep. Slots are u modulo the band width; since one sweep spans at most
 * band consecutive u values, the folding never aliases inside a window. */
struct Row {
    Score* s = nullptr;
    long long k = 0;        // u = k - i for the stored antidiagonal
    long long fl = 0;       // live i-range of the stored antidiagonal
    long long ll = -1;      // fl > ll means no live cell
};

inline int slot_of(long long k, long long i, int width) {
    long long u = (k - i) % width;
    return int(u < 0 ? u + width : u);
}

inline Score read_row(const Row& r, long long i, int width) {
    if (i < r.fl || i > r.ll) return kDead;
    return r.s[slot_of(r.k, i, width)];
}

ExtensionResult extend_impl(const SeqView& h, const SeqView& v,
                            const ScoringScheme& scheme, int band,
                            BandBuffers& buf) {
    const long long m = (long long)h.length;
    const long long n = (long long)v.length;
    const Score gap = scheme.gap;
    const Score x = scheme.x;

    Row rows[2] = {{buf.rows[0].data()}, {buf.rows[1].data()}};

    Score t = 0;
    long long best_d = 0, best_i = 0;
    long long cells = 1;  // the origin cell
    int delta_w = 1;

    rows[0].k = 0;
    rows[0].fl = rows[0].ll = 0;
    rows[0].s[0] = 0;
    rows[1].fl = 0;
    rows[1].ll = -1;
    buf.lower = 0;
    buf.upper = 0;

    for (long long d = 1; d <= n + m + 1; ++d) {
        Row& cur = rows[d & 1];        // holds d-2, rewritten in place
        Row& prev = rows[1 - (d & 1)]; // holds d-1

        const bool have_prev = prev.fl <= prev.ll;
        const bool have_pp = cur.fl <= cur.ll;
        if (!have_prev && !have_pp) break;

        // cells a gap step can reach from d-1, plus cells a diagonal step
        // can reach from d-2
        long long lo = std::numeric_limits<long long>::max();
        long long hi = std::numeric_limits<long long>::min();
        if (have_prev) {
            lo = prev.fl;
            hi = prev.ll + 1;
        }
        if (have_pp) {
            lo = std::min(lo, cur.fl + 1);
            hi = std::max(hi, cur.ll + 1);
        }
        lo = std::max(lo, d > m ? d - m : 0);
        hi = std::min(hi, std::min(d, n));

        const long long k_new = d / 2;
        if (lo > hi) {
            // nothing reachable on this antidiagonal; a diagonal step from
            // d-1 may still land on d+1
            cur.k = k_new;
            cur.fl = 0;
            cur.ll = -1;
            continue;
        }

        const long long w = hi - lo + 1;
        if (w > band) throw BandExceededError(int(w), cells);
        if (int(w) > delta_w) delta_w = int(w);
        buf.lower = int(lo);
        buf.upper = int(hi);
        cells += w;

        long long first_live = -1, last_live = -1;
        const long long pp_fl = cur.fl, pp_ll = cur.ll;
        for (long long i = lo; i <= hi; ++i) {
            const long long j = d - i;
            const int sigma = slot_of(k_new, i, band);

            Score val = kDead;
            if (i - 1 >= pp_fl && i - 1 <= pp_ll) {  // implies i >= 1 and j >= 1
                const Score diag = cur.s[sigma];
                if (diag != kDead)
                    val = diag + scheme.sim_raw((unsigned char)v.at(i - 1),
                                                (unsigned char)h.at(j - 1));
            }
            if (j >= 1) {
                const Score left = read_row(prev, i, band);
                if (left != kDead) val = std::max(val, left + gap);
            }
            if (i >= 1) {
                const Score up = read_row(prev, i - 1, band);
                if (up != kDead) val = std::max(val, up + gap);
            }

            if (val != kDead) {
                if (val > t) {
                    t = val;
                    best_d = d;
                    best_i = i;
                }
                if (val < t - x) val = kDead;
            }

            cur.s[sigma] = val;
            if (val != kDead) {
                if (first_live < 0) first_live = i;
                last_live = i;
            }
        }

        cur.k = k_new;
        if (first_live < 0) {
            cur.fl = 0;
            cur.ll = -1;
        } else {
            cur.fl = first_live;
            cur.ll = last_live;
        }
    }

    ExtensionResult r;
    r.score = t;
    r.h_ext = int(best_d - best_i);
    r.v_ext = int(best_i);
    r.cells = cells;
    r.delta_w = delta_w;
    return r;
}

}  // namespace

BandBuffers::BandBuffers(int delta_b) : width(delta_b) {
    if (delta_b < 1) throw InputError("band width must be at least 1");
    rows[0].assign(size_t(delta_b), kDead);
    rows[1].assign(size_t(delta_b), kDead);
}

ExtensionResult xdrop_extend(const SeqView& h, const SeqView& v,
                             const ScoringScheme& scheme, int band,
                             BandBuffers* scratch) {
    if (scratch) {
        if (scratch->width != band)
            throw InputError("scratch buffers sized for band " +
                             std::to_string(scratch->width) + ", kernel asked for " +
                             std::to_string(band));
        return extend_impl(h, v, scheme, band, *scratch);
    }
    BandBuffers local(band);
    return extend_impl(h, v, scheme, band, local);
}

ExtensionResult xdrop_full_oracle(const SeqView& h, const SeqView& v,
                                  const ScoringScheme& scheme) {
    const long long m = (long long)h.length;
    const long long n = (long long)v.length;
    const Score gap = scheme.gap;
    const Score x = scheme.x;

    std::vector<Score> s(size_t((n + 1) * (m + 1)), kDead);
    auto at = [&](long long i, long long j) -> Score& {
        return s[size_t(i * (m + 1) + j)];
    };

    Score t = 0;
    long long best_d = 0, best_i = 0;
    at(0, 0) = 0;

    // live bounds of the previous two antidiagonals, kept to report the
    // same window widths the banded kernel would see
    long long fl_prev = 0, ll_prev = 0;    // antidiagonal d-1
    long long fl_pp = 0, ll_pp = -1;       // antidiagonal d-2
    int delta_w = 1;

    for (long long d = 1; d <= n + m; ++d) {
        const long long i_lo = std::max(0LL, d - m);
        const long long i_hi = std::min(d, n);
        long long first_live = -1, last_live = -1;
        for (long long i = i_lo; i <= i_hi; ++i) {
            const long long j = d - i;
            Score val = kDead;
            if (i >= 1 && j >= 1 && at(i - 1, j - 1) != kDead)
                val = at(i - 1, j - 1) + scheme.sim_raw((unsigned char)v.at(i - 1),
                                                        (unsigned char)h.at(j - 1));
            if (j >= 1 && at(i, j - 1) != kDead)
                val = std::max(val, at(i, j - 1) + gap);
            if (i >= 1 && at(i - 1, j) != kDead)
                val = std::max(val, at(i - 1, j) + gap);
            if (val != kDead) {
                if (val > t) {
                    t = val;
                    best_d = d;
                    best_i = i;
                }
                if (val < t - x) val = kDead;
                if (val != kDead) {
                    if (first_live < 0) first_live = i;
                    last_live = i;
                }
            }
            at(i, j) = val;
        }

        const bool have_prev = fl_prev <= ll_prev;
        const bool have_pp = fl_pp <= ll_pp;
        if (have_prev || have_pp) {
            long long lo = std::numeric_limits<long long>::max();
            long long hi = std::numeric_limits<long long>::min();
            if (have_prev) {
                lo = fl_prev;
                hi = ll_prev + 1;
            }
            if (have_pp) {
                lo = std::min(lo, fl_pp + 1);
                hi = std::max(hi, ll_pp + 1);
            }
            lo = std::max(lo, i_lo);
            hi = std::min(hi, i_hi);
            if (lo <= hi && int(hi - lo + 1) > delta_w) delta_w = int(hi - lo + 1);
        }

        fl_pp = fl_prev;
        ll_pp = ll_prev;
        if (first_live < 0) {
            fl_prev = 0;
            ll_prev = -1;
        } else {
            fl_prev = first_live;
            ll_prev = last_live;
        }
    }

    ExtensionResult r;
    r.score = t;
    r.h_ext = int(best_d - best_i);
    r.v_ext = int(best_i);
    r.cells = (n + 1) * (m + 1);
    r.delta_w = delta_w;
    return r;
}

SeedAlignment extend_seed(const ExtensionTask& task, const SequenceStore& store,
                          int k, const ScoringScheme& scheme, int band,
                          BandBuffers* scratch) {
    if (task.h_id >= store.size() || task.v_id >= store.size())
        throw DanglingReference("task " + std::to_string(task.task_id) +
                                " references an unknown sequence");
    const Sequence& hs = store[task.h_id];
    const Sequence& vs = store[task.v_id];
    if (task.h_seed + size_t(k) > hs.symbols.size() ||
        task.v_seed + size_t(k) > vs.symbols.size())
        throw SeedOutOfBounds("seed of task " + std::to_string(task.task_id) +
                              " does not fit inside its sequences");

    SeedAlignment out;
    out.task_id = task.task_id;
    for (int i = 0; i < k; ++i)
        out.seed_score += sim(scheme, hs.symbols[task.h_seed + i],
                              vs.symbols[task.v_seed + i]);

    SeqView hl = make_view(hs, task.h_seed, Dir::Left, task.h_seed);
    SeqView vl = make_view(vs, task.v_seed, Dir::Left, task.v_seed);
    try {
        out.left = xdrop_extend(hl, vl, scheme, band, scratch);
    } catch (BandExceededError& e) {
        e.side = 'L';
        throw;
    }

    SeqView hr = make_view(hs, task.h_seed + k, Dir::Right,
                           hs.symbols.size() - task.h_seed - k);
    SeqView vr = make_view(vs, task.v_seed + k, Dir::Right,
                           vs.symbols.size() - task.v_seed - k);
    try {
        out.right = xdrop_extend(hr, vr, scheme, band, scratch);
    } catch (BandExceededError& e) {
        e.side = 'R';
        throw;
    }

    out.total = out.left.score + out.seed_score + out.right.score;
    return out;
}

}  // namespace xband
