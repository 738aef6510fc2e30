#include "xband/scoring.hpp"

#include <cctype>
#include <sstream>

namespace xband {

Score SubMatrix::at(char a, char b) const {
    size_t ia = alphabet.find(a);
    size_t ib = alphabet.find(b);
    if (ia == std::string::npos) throw UnknownSymbol(a);
    if (ib == std::string::npos) throw UnknownSymbol(b);
    return cells[ia * alphabet.size() + ib];
}

ScoringScheme ScoringScheme::match_mismatch(Score match, Score mismatch, Score gap, Score x) {
    if (match <= 0) throw InputError("match score must be positive");
    if (mismatch >= 0) throw InputError("mismatch score must be negative");
    if (gap >= 0) throw InputError("gap score must be negative");
    if (x < 0) throw InputError("x-drop threshold must be non-negative");

    ScoringScheme s;
    s.gap = gap;
    s.x = x;
    s.alphabet_ = "ACGTN";
    for (char c : s.alphabet_) s.valid_[(unsigned char)c] = true;
    for (char a : s.alphabet_)
        for (char b : s.alphabet_) {
            // N is a wildcard for "unknown", it matches nothing.
            Score v = (a == b && a != 'N') ? match : mismatch;
            s.table_[size_t((unsigned char)a) * 256 + (unsigned char)b] = int16_t(v);
        }
    return s;
}

ScoringScheme ScoringScheme::from_matrix(const SubMatrix& m, Score gap, Score x) {
    if (gap >= 0) throw InputError("gap score must be negative");
    if (x < 0) throw InputError("x-drop threshold must be non-negative");
    if (m.alphabet.empty() || m.cells.size() != m.alphabet.size() * m.alphabet.size())
        throw InputError("substitution matrix is not square over its alphabet");

    ScoringScheme s;
    s.gap = gap;
    s.x = x;
    s.alphabet_ = m.alphabet;
    for (char c : m.alphabet) s.valid_[(unsigned char)c] = true;
    for (size_t i = 0; i < m.alphabet.size(); ++i)
        for (size_t j = 0; j < m.alphabet.size(); ++j) {
            unsigned char a = m.alphabet[i], b = m.alphabet[j];
            s.table_[size_t(a) * 256 + b] = int16_t(m.cells[i * m.alphabet.size() + j]);
        }
    return s;
}

Score sim(const ScoringScheme& s, char a, char b) {
    if (!s.known((unsigned char)a)) throw UnknownSymbol(a);
    if (!s.known((unsigned char)b)) throw UnknownSymbol(b);
    return s.sim_raw((unsigned char)a, (unsigned char)b);
}

SubMatrix parse_submatrix(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    SubMatrix m;
    std::vector<std::vector<Score>> rows;
    std::string row_labels;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t pos = line.find_first_not_of(" \t");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream fields(line);
        if (m.alphabet.empty()) {
            // header row: residue letters only
            std::string tok;
            while (fields >> tok) {
                if (tok.size() != 1)
                    throw InputError("matrix header token '" + tok + "' is not a residue");
                m.alphabet += tok;
            }
            continue;
        }
        std::string label;
        fields >> label;
        if (label.size() != 1)
            throw InputError("matrix row label '" + label + "' is not a residue");
        std::vector<Score> row;
        Score v;
        while (fields >> v) row.push_back(v);
        if (row.size() != m.alphabet.size())
            throw NonSquare("matrix row '" + label + "' has " + std::to_string(row.size()) +
                            " entries, alphabet has " + std::to_string(m.alphabet.size()));
        row_labels += label;
        rows.push_back(std::move(row));
    }
    if (m.alphabet.empty()) throw InputError("substitution matrix has no header row");
    if (rows.size() != m.alphabet.size())
        throw NonSquare("matrix has " + std::to_string(rows.size()) + " rows, alphabet has " +
                        std::to_string(m.alphabet.size()));
    if (row_labels != m.alphabet)
        throw MissingEntry("matrix row order '" + row_labels + "' does not mirror header '" +
                           m.alphabet + "'");
    m.cells.reserve(m.alphabet.size() * m.alphabet.size());
    for (auto& r : rows) m.cells.insert(m.cells.end(), r.begin(), r.end());
    return m;
}

}  // namespace xband
