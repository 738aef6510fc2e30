#ifndef XBAND_SCORING_HPP
#define XBAND_SCORING_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "xband/errors.hpp"

namespace xband {

using Score = int;

/* Square substitution matrix over an explicit residue alphabet, as loaded
 * from an NCBI-format file. */
struct SubMatrix {
    std::string alphabet;
    std::vector<Score> cells;  // alphabet.size()^2, row-major

    Score at(char a, char b) const;
};

/* Pairwise similarity plus gap/x-drop parameters. Two flavors: plain
 * match/mismatch over the DNA alphabet (N never matches anything, itself
 * included), or a substitution matrix that alone decides every pair. Both
 * compile into a flat byte-pair table so the kernel does one load per cell. */
class ScoringScheme {
public:
    static ScoringScheme match_mismatch(Score match, Score mismatch, Score gap, Score x);
    static ScoringScheme from_matrix(const SubMatrix& m, Score gap, Score x);

    // Table lookup without validity checks; symbols must have passed
    // ingestion validation.
    Score sim_raw(unsigned char a, unsigned char b) const {
        return table_[size_t(a) * 256 + b];
    }

    bool known(unsigned char c) const { return valid_[c]; }
    const std::string& alphabet() const { return alphabet_; }

    Score gap = -1;
    Score x = 0;

private:
    ScoringScheme() : table_(256 * 256, 0) {}
    std::vector<int16_t> table_;
    std::array<bool, 256> valid_{};
    std::string alphabet_;
};

// Checked similarity; throws UnknownSymbol when either side is outside the
// scheme's alphabet.
Score sim(const ScoringScheme& s, char a, char b);

SubMatrix parse_submatrix(const std::string& text);

}  // namespace xband

#endif
