#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "xband/scoring.hpp"

using namespace xband;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("match/mismatch scheme scores the DNA alphabet") {
    auto s = ScoringScheme::match_mismatch(2, -3, -4, 7);
    CHECK(sim(s, 'A', 'A') == 2);
    CHECK(sim(s, 'C', 'C') == 2);
    CHECK(sim(s, 'G', 'T') == -3);
    CHECK(sim(s, 'T', 'G') == -3);
    CHECK(s.gap == -4);
    CHECK(s.x == 7);
    CHECK(s.alphabet() == "ACGTN");
}

TEST_CASE("N matches nothing, not even itself") {
    auto s = ScoringScheme::match_mismatch(1, -1, -1, 3);
    CHECK(sim(s, 'N', 'N') == -1);
    CHECK(sim(s, 'N', 'A') == -1);
    CHECK(sim(s, 'G', 'N') == -1);
}

TEST_CASE("unknown symbols are rejected by checked lookup") {
    auto s = ScoringScheme::match_mismatch(1, -1, -1, 3);
    CHECK_THROWS_AS(sim(s, 'Z', 'A'), UnknownSymbol);
    CHECK_THROWS_AS(sim(s, 'A', '!'), UnknownSymbol);
    CHECK_NOTHROW(sim(s, 'N', 'N'));
}

TEST_CASE("parameter validation on the match/mismatch constructor") {
    CHECK_THROWS_AS(ScoringScheme::match_mismatch(0, -1, -1, 3), InputError);
    CHECK_THROWS_AS(ScoringScheme::match_mismatch(1, 0, -1, 3), InputError);
    CHECK_THROWS_AS(ScoringScheme::match_mismatch(1, -1, 0, 3), InputError);
    CHECK_THROWS_AS(ScoringScheme::match_mismatch(1, -1, -1, -1), InputError);
    CHECK_NOTHROW(ScoringScheme::match_mismatch(1, -1, -1, 0));
}

TEST_CASE("toy substitution matrix parses into a usable scheme") {
    const std::string text =
        "# comment line\n"
        "   A  B\n"
        "A  1 -1\n"
        "B -1  1\n";
    SubMatrix m = parse_submatrix(text);
    CHECK(m.alphabet == "AB");
    CHECK(m.at('A', 'A') == 1);
    CHECK(m.at('A', 'B') == -1);
    auto s = ScoringScheme::from_matrix(m, -2, 5);
    CHECK(sim(s, 'B', 'B') == 1);
    CHECK(sim(s, 'A', 'B') == -1);
    CHECK(s.gap == -2);
    CHECK_THROWS_AS(sim(s, 'C', 'A'), UnknownSymbol);
}

TEST_CASE("ragged matrix rows are rejected") {
    CHECK_THROWS_AS(parse_submatrix("  A B\nA 1 -1 3\nB -1 1\n"), NonSquare);
    CHECK_THROWS_AS(parse_submatrix("  A B\nA 1\nB -1 1\n"), NonSquare);
}

TEST_CASE("missing or reordered rows are rejected") {
    CHECK_THROWS_AS(parse_submatrix("  A B\nA 1 -1\n"), NonSquare);
    CHECK_THROWS_AS(parse_submatrix("  A B\nB -1 1\nA 1 -1\n"), MissingEntry);
}

TEST_CASE("matrix scheme only validates gap and x") {
    const std::string text = "  A B\nA 1 -1\nB -1 1\n";
    SubMatrix m = parse_submatrix(text);
    CHECK_THROWS_AS(ScoringScheme::from_matrix(m, 0, 5), InputError);
    CHECK_THROWS_AS(ScoringScheme::from_matrix(m, -1, -2), InputError);
}

TEST_CASE("BLOSUM62 loads with the full protein alphabet") {
    SubMatrix m = parse_submatrix(slurp(std::string(XBAND_DATA_DIR) + "/BLOSUM62"));
    CHECK(m.alphabet.size() == 24);
    CHECK(m.at('A', 'A') == 4);
    CHECK(m.at('W', 'W') == 11);
    CHECK(m.at('*', '*') == 1);
    CHECK(m.at('A', 'R') == m.at('R', 'A'));
    auto s = ScoringScheme::from_matrix(m, -11, 20);
    CHECK(sim(s, 'W', 'W') == 11);
}
