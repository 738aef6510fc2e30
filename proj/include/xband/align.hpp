#ifndef XBAND_ALIGN_HPP
#define XBAND_ALIGN_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "xband/scoring.hpp"
#include "xband/sequence.hpp"

namespace xband {

/* One seed to extend: sequence ids plus the seed start on each side. The
 * seed itself spans k symbols from those starts. */
struct ExtensionTask {
    int task_id = 0;
    uint32_t h_id = 0, v_id = 0;
    size_t h_seed = 0, v_seed = 0;
};

/* The kernel's entire score storage: two rows of exactly `width` cells.
 * Row d%2 holds antidiagonal d, so writing antidiagonal d reuses the row of
 * d-2 in place. lower/upper are the v-offsets of the first and last
 * unpruned cell on the most recently finished antidiagonal. */
struct BandBuffers {
    int width = 0;
    std::array<std::vector<Score>, 2> rows;
    int lower = 0;
    int upper = 0;

    explicit BandBuffers(int delta_b);
    size_t cell_capacity() const { return rows[0].size() + rows[1].size(); }
};

struct ExtensionResult {
    Score score = 0;
    int h_ext = 0;       // columns consumed on the horizontal view
    int v_ext = 0;       // rows consumed on the vertical view
    long long cells = 0; // cells actually evaluated
    int delta_w = 0;     // widest live antidiagonal spread seen

    bool operator==(const ExtensionResult&) const = default;
};

struct SeedAlignment {
    int task_id = 0;
    ExtensionResult left, right;
    Score seed_score = 0;
    Score total = 0;
};

/* X-drop extension of v against h from their common origin, banded to at
 * most `band` live cells per antidiagonal. Throws BandExceededError when
 * the live spread would not fit. Pass `scratch` to reuse buffers across
 * calls; its width must equal `band`. */
ExtensionResult xdrop_extend(const SeqView& h, const SeqView& v,
                             const ScoringScheme& scheme, int band,
                             BandBuffers* scratch = nullptr);

/* Reference implementation on a dense (n+1)x(m+1) matrix, no windowing.
 * Same scores, extents and delta_w as the banded kernel whenever the band
 * suffices; cells counts every matrix cell. */
ExtensionResult xdrop_full_oracle(const SeqView& h, const SeqView& v,
                                  const ScoringScheme& scheme);

/* Extends a seed in both directions and stitches the three scores. Band
 * failures are rethrown with the failing side attributed. */
SeedAlignment extend_seed(const ExtensionTask& t, const SequenceStore& store,
                          int k, const ScoringScheme& scheme, int band,
                          BandBuffers* scratch = nullptr);

}  // namespace xband

#endif
