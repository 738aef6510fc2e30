#ifndef XBAND_SEQUENCE_HPP
#define XBAND_SEQUENCE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "xband/errors.hpp"

namespace xband {

struct Sequence {
    uint32_t id = 0;          // dense index into the store
    std::string name;         // first header token, informational only
    std::string symbols;      // uppercase residues
};

using SequenceStore = std::vector<Sequence>;

/* A direction-aware window into a sequence. Right walks forward from
 * origin; Left walks backward starting at origin-1, so element i of a Left
 * view is symbols[origin-1-i]. Extensions on both sides of a seed then run
 * through one kernel that only ever sees a forward index space. */
enum class Dir : uint8_t { Left, Right };

struct SeqView {
    const Sequence* seq = nullptr;
    size_t origin = 0;
    Dir dir = Dir::Right;
    size_t length = 0;

    // Unchecked element access, kernel hot path. Callers validate bounds
    // once at view construction.
    char at(size_t i) const {
        return dir == Dir::Right ? seq->symbols[origin + i]
                                 : seq->symbols[origin - 1 - i];
    }
};

// Builds a view after range-checking it against the backing sequence.
SeqView make_view(const Sequence& s, size_t origin, Dir dir, size_t length);

// Checked element access; throws OutOfRange on i >= length.
char view_at(const SeqView& v, size_t i);

}  // namespace xband

#endif
