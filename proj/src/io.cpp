#include "xband/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <random>
#include <sstream>
#include <string_view>

#include "xband/errors.hpp"

namespace xband {

namespace {

// iterate LF or CRLF lines; reports 1-based line numbers
template <typename F>
void for_lines(const std::string& text, F&& fn) {
    size_t pos = 0, line = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        size_t end = (nl == std::string::npos) ? text.size() : nl;
        size_t len = end - pos;
        if (len > 0 && text[pos + len - 1] == '\r') --len;
        ++line;
        fn(std::string_view(text.data() + pos, len), line);
        if (nl == std::string::npos) break;
        pos = nl + 1;
    }
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
        size_t j = i;
        while (j < s.size() && !std::isspace((unsigned char)s[j])) ++j;
        if (j > i) out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_ll(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    size_t q = 0;
    try {
        out = std::stoll(tok, &q);
    } catch (const std::exception&) {
        return false;
    }
    return q == tok.size();
}

}  // namespace

SequenceStore parse_fasta(const std::string& text, const std::string& allowed) {
    SequenceStore store;
    bool have_record = false;
    bool valid[256] = {};
    for (char c : allowed) valid[(unsigned char)std::toupper((unsigned char)c)] = true;

    for_lines(text, [&](std::string_view line, size_t lineno) {
        if (line.empty()) return;
        if (line[0] == '>') {
            if (have_record && store.back().symbols.empty())
                throw EmptyRecord("record '" + store.back().name +
                                  "' has no sequence data");
            Sequence s;
            s.id = (uint32_t)store.size();
            auto toks = split_ws(line.substr(1));
            s.name = toks.empty() ? std::string() : toks[0];
            store.push_back(std::move(s));
            have_record = true;
            return;
        }
        if (!have_record)
            throw MissingHeader("sequence data on line " + std::to_string(lineno) +
                                " appears before any '>' header");
        std::string& sym = store.back().symbols;
        for (char c : line) {
            if (std::isspace((unsigned char)c)) continue;
            char u = (char)std::toupper((unsigned char)c);
            if (!valid[(unsigned char)u])
                throw InvalidSymbol(lineno, "symbol '" + std::string(1, c) +
                                                "' on line " + std::to_string(lineno) +
                                                " is not in the allowed alphabet");
            sym.push_back(u);
        }
    });
    if (have_record && store.back().symbols.empty())
        throw EmptyRecord("record '" + store.back().name + "' has no sequence data");
    return store;
}

std::vector<ExtensionTask> parse_seeds(const std::string& text) {
    std::vector<ExtensionTask> tasks;
    for_lines(text, [&](std::string_view line, size_t lineno) {
        auto toks = split_ws(line);
        if (toks.empty() || toks[0][0] == '#') return;
        if (toks.size() != 4)
            throw MalformedLine(lineno, "line " + std::to_string(lineno) +
                                            ": expected 4 fields, got " +
                                            std::to_string(toks.size()));
        long long f[4];
        for (int i = 0; i < 4; ++i)
            if (!parse_ll(toks[size_t(i)], f[i]))
                throw MalformedLine(lineno, "line " + std::to_string(lineno) +
                                                ": field '" + toks[size_t(i)] +
                                                "' is not an integer");
        for (int i = 0; i < 4; ++i)
            if (f[i] < 0)
                throw NegativeIndex("line " + std::to_string(lineno) +
                                    ": negative value " + std::to_string(f[i]));
        ExtensionTask t;
        t.task_id = (int)tasks.size();
        t.h_id = (uint32_t)f[0];
        t.v_id = (uint32_t)f[1];
        t.h_seed = (size_t)f[2];
        t.v_seed = (size_t)f[3];
        tasks.push_back(t);
    });
    return tasks;
}

std::vector<ExtensionTask> parse_overlaps(const std::string& text) {
    std::vector<ExtensionTask> tasks;
    bool saw_banner = false, saw_size = false, pattern = false;
    long long rows = 0, cols = 0, nnz = 0;

    for_lines(text, [&](std::string_view line, size_t lineno) {
        if (line.empty()) return;
        if (!saw_banner) {
            auto toks = split_ws(line);
            if (toks.size() < 5 || toks[0] != "%%MatrixMarket" || toks[1] != "matrix" ||
                toks[2] != "coordinate" || toks[4] != "general")
                throw BadHeader("line " + std::to_string(lineno) +
                                ": expected '%%MatrixMarket matrix coordinate "
                                "{pattern|integer} general'");
            if (toks[3] == "pattern")
                pattern = true;
            else if (toks[3] != "integer")
                throw BadHeader("unsupported field type '" + toks[3] + "'");
            saw_banner = true;
            return;
        }
        if (line[0] == '%') return;
        auto toks = split_ws(line);
        if (toks.empty()) return;
        if (!saw_size) {
            long long f[3];
            if (toks.size() != 3 || !parse_ll(toks[0], f[0]) ||
                !parse_ll(toks[1], f[1]) || !parse_ll(toks[2], f[2]))
                throw BadHeader("line " + std::to_string(lineno) +
                                ": expected 'rows cols entries'");
            rows = f[0];
            cols = f[1];
            nnz = f[2];
            saw_size = true;
            return;
        }
        const size_t want = pattern ? 2 : 4;
        if (toks.size() != want)
            throw BadHeader("line " + std::to_string(lineno) + ": expected " +
                            std::to_string(want) + " fields per entry, got " +
                            std::to_string(toks.size()) +
                            (pattern ? "" : " (two seed position values required)"));
        long long f[4] = {0, 0, 0, 0};
        for (size_t i = 0; i < want; ++i)
            if (!parse_ll(toks[i], f[i]))
                throw BadHeader("line " + std::to_string(lineno) + ": field '" +
                                toks[i] + "' is not an integer");
        if (f[0] < 1 || f[0] > rows || f[1] < 1 || f[1] > cols)
            throw IndexOutOfDeclaredShape(
                "line " + std::to_string(lineno) + ": entry (" + std::to_string(f[0]) +
                ", " + std::to_string(f[1]) + ") outside declared " +
                std::to_string(rows) + "x" + std::to_string(cols));
        if (f[2] < 0 || f[3] < 0)
            throw NegativeIndex("line " + std::to_string(lineno) +
                                ": negative seed position");
        ExtensionTask t;
        t.task_id = (int)tasks.size();
        t.h_id = (uint32_t)(f[0] - 1);
        t.v_id = (uint32_t)(f[1] - 1);
        t.h_seed = (size_t)f[2];
        t.v_seed = (size_t)f[3];
        tasks.push_back(t);
    });
    if (!saw_banner) throw BadHeader("missing %%MatrixMarket banner");
    if (!saw_size) throw BadHeader("missing size line");
    if ((long long)tasks.size() != nnz)
        throw BadHeader("declared " + std::to_string(nnz) + " entries, found " +
                        std::to_string(tasks.size()));
    return tasks;
}

Dataset generate_synthetic(const SynthParams& p) {
    if (p.k < 1) throw InputError("seed length must be at least 1");
    if ((size_t)p.k > p.length)
        throw InputError("seed length " + std::to_string(p.k) +
                         " exceeds sequence length " + std::to_string(p.length));

    static const char kBases[4] = {'A', 'C', 'G', 'T'};
    std::mt19937_64 rng(p.rng_seed);
    // raw engine draws only: distribution objects are not pinned across
    // standard library implementations, identical output everywhere matters
    // more here than sampling elegance
    auto draw = [&]() -> uint64_t { return rng(); };
    auto unit_interval = [&]() -> double {
        return double(draw() >> 11) * 0x1.0p-53;
    };

    Dataset ds;
    ds.k = p.k;
    const bool never_mutate = p.p_match >= 1.0;
    const bool always_mutate = p.p_match <= 0.0;

    for (size_t pair = 0; pair < p.pairs; ++pair) {
        std::string h(p.length, 'A');
        for (size_t i = 0; i < p.length; ++i) h[i] = kBases[draw() % 4];

        size_t pos = (p.length - size_t(p.k)) / 2;
        if (p.placement == SeedPlacement::UniformRandom)
            pos = size_t(draw() % (uint64_t(p.length - size_t(p.k)) + 1));

        std::string v = h;
        for (size_t i = 0; i < p.length; ++i) {
            if (i >= pos && i < pos + size_t(p.k)) continue;
            if (never_mutate) continue;
            if (!always_mutate && unit_interval() < p.p_match) continue;
            int cur = 0;
            while (kBases[cur] != v[i]) ++cur;
            v[i] = kBases[(cur + 1 + int(draw() % 3)) % 4];
        }

        Sequence hs, vs;
        hs.id = (uint32_t)(2 * pair);
        hs.name = "h" + std::to_string(pair);
        hs.symbols = std::move(h);
        vs.id = (uint32_t)(2 * pair + 1);
        vs.name = "v" + std::to_string(pair);
        vs.symbols = std::move(v);
        ds.store.push_back(std::move(hs));
        ds.store.push_back(std::move(vs));

        ExtensionTask t;
        t.task_id = (int)pair;
        t.h_id = (uint32_t)(2 * pair);
        t.v_id = (uint32_t)(2 * pair + 1);
        t.h_seed = pos;
        t.v_seed = pos;
        ds.tasks.push_back(t);
    }
    return ds;
}

std::string write_results(const std::vector<SeedAlignment>& alignments,
                          const std::vector<FailedUnit>& failed,
                          const RunSummary& summary) {
    std::vector<const SeedAlignment*> order;
    order.reserve(alignments.size());
    for (const SeedAlignment& a : alignments) order.push_back(&a);
    std::sort(order.begin(), order.end(),
              [](const SeedAlignment* a, const SeedAlignment* b) {
                  return a->task_id < b->task_id;
              });

    std::ostringstream out;
    out << "task_id\tside\tscore\th_ext\tv_ext\tcells\tdelta_w\n";
    long long grand_total = 0;
    for (const SeedAlignment* a : order) {
        out << a->task_id << "\tL\t" << a->left.score << '\t' << a->left.h_ext
            << '\t' << a->left.v_ext << '\t' << a->left.cells << '\t'
            << a->left.delta_w << '\n';
        out << a->task_id << "\tR\t" << a->right.score << '\t' << a->right.h_ext
            << '\t' << a->right.v_ext << '\t' << a->right.cells << '\t'
            << a->right.delta_w << '\n';
        grand_total += a->total;
    }
    out << "# total\t" << grand_total << '\n';
    for (const FailedUnit& f : failed)
        out << "# failed\ttask " << f.task_id << " side " << f.side
            << " spread " << f.observed_spread << '\n';

    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", summary.gcups);
    out << "# gcups\t" << buf << '\n';
    std::snprintf(buf, sizeof buf, "%.9f", summary.wall_seconds);
    out << "# wall_seconds\t" << buf << '\n';
    out << "# wall_cost\t" << summary.wall_cost << '\n';
    out << "# batches\t" << summary.batch_count << '\n';
    out << "# transmitted_bytes\t" << summary.transmitted_bytes << '\n';
    out << "# transmitted_seqs\t" << summary.transmitted_seqs << '\n';
    out << "# total_cells\t" << summary.total_cells << '\n';
    out << "# failed_units\t" << summary.failed_units << '\n';
    return out.str();
}

}  // namespace xband
