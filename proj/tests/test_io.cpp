#include <sstream>
#include <string>

#include "doctest.h"
#include "xband/io.hpp"

using namespace xband;

TEST_CASE("fasta records keep file order, names and uppercased symbols") {
    auto store = parse_fasta(">one first sequence\nACGT\nacgt\n>two\nTTTT\n");
    REQUIRE(store.size() == 2);
    CHECK(store[0].id == 0);
    CHECK(store[0].name == "one");
    CHECK(store[0].symbols == "ACGTACGT");
    CHECK(store[1].name == "two");
    CHECK(store[1].symbols == "TTTT");
}

TEST_CASE("carriage returns and blank lines are tolerated") {
    auto store = parse_fasta(">a\r\nAC\r\n\r\nGT\r\n");
    REQUIRE(store.size() == 1);
    CHECK(store[0].symbols == "ACGT");
}

TEST_CASE("sequence data before any header is an error") {
    CHECK_THROWS_AS(parse_fasta("ACGT\n>a\nACGT\n"), MissingHeader);
}

TEST_CASE("headerless or empty records are errors") {
    CHECK_THROWS_AS(parse_fasta(">a\n>b\nACGT\n"), EmptyRecord);
    CHECK_THROWS_AS(parse_fasta(">a\nACGT\n>b\n"), EmptyRecord);
}

TEST_CASE("symbols outside the allowed alphabet name their line") {
    try {
        parse_fasta(">a\nACGT\nAXGT\n");
        FAIL("expected a rejection");
    } catch (const InvalidSymbol& e) {
        CHECK(e.line == 3);
    }
    CHECK_NOTHROW(parse_fasta(">a\nWYV\n", "ARNDCQEGHILKMFPSTWYVBZX*"));
}

TEST_CASE("seed lists parse four integers per line") {
    auto tasks = parse_seeds("# h v hs vs\n0 1 10 20\n\n2 3 0 0\n");
    REQUIRE(tasks.size() == 2);
    CHECK(tasks[0].task_id == 0);
    CHECK(tasks[0].h_id == 0);
    CHECK(tasks[0].v_id == 1);
    CHECK(tasks[0].h_seed == 10);
    CHECK(tasks[0].v_seed == 20);
    CHECK(tasks[1].task_id == 1);
    CHECK(tasks[1].h_id == 2);
}

TEST_CASE("malformed seed lines name their line number") {
    try {
        parse_seeds("0 1 10\n");
        FAIL("expected a rejection");
    } catch (const MalformedLine& e) {
        CHECK(e.line == 1);
    }
    CHECK_THROWS_AS(parse_seeds("0 1 10 20 30\n"), MalformedLine);
    CHECK_THROWS_AS(parse_seeds("0 1 ten 20\n"), MalformedLine);
    CHECK_THROWS_AS(parse_seeds("0 1 -5 0\n"), NegativeIndex);
    CHECK_THROWS_AS(parse_seeds("-1 1 5 0\n"), NegativeIndex);
}

TEST_CASE("pattern overlaps seed every task at the origin") {
    const std::string text =
        "%%MatrixMarket matrix coordinate pattern general\n"
        "% produced upstream\n"
        "3 3 2\n"
        "1 2\n"
        "3 1\n";
    auto tasks = parse_overlaps(text);
    REQUIRE(tasks.size() == 2);
    CHECK(tasks[0].h_id == 0);
    CHECK(tasks[0].v_id == 1);
    CHECK(tasks[0].h_seed == 0);
    CHECK(tasks[1].h_id == 2);
    CHECK(tasks[1].v_id == 0);
}

TEST_CASE("integer overlaps carry the two seed positions") {
    const std::string text =
        "%%MatrixMarket matrix coordinate integer general\n"
        "2 2 1\n"
        "1 2 100 200\n";
    auto tasks = parse_overlaps(text);
    REQUIRE(tasks.size() == 1);
    CHECK(tasks[0].h_seed == 100);
    CHECK(tasks[0].v_seed == 200);
}

TEST_CASE("overlap headers are checked strictly") {
    CHECK_THROWS_AS(parse_overlaps("1 1 1\n1 1\n"), BadHeader);
    CHECK_THROWS_AS(
        parse_overlaps("%%MatrixMarket matrix array integer general\n1 1 1\n1 1\n"),
        BadHeader);
    CHECK_THROWS_AS(parse_overlaps("%%MatrixMarket matrix coordinate pattern general\n"),
                    BadHeader);
    // integer entries missing their seed columns
    CHECK_THROWS_AS(
        parse_overlaps("%%MatrixMarket matrix coordinate integer general\n2 2 1\n1 2\n"),
        BadHeader);
    // declared nnz disagrees with the entry count
    CHECK_THROWS_AS(
        parse_overlaps(
            "%%MatrixMarket matrix coordinate pattern general\n2 2 2\n1 2\n"),
        BadHeader);
}

TEST_CASE("overlap entries must satisfy the declared shape") {
    CHECK_THROWS_AS(
        parse_overlaps("%%MatrixMarket matrix coordinate pattern general\n2 2 1\n3 1\n"),
        IndexOutOfDeclaredShape);
    CHECK_THROWS_AS(
        parse_overlaps("%%MatrixMarket matrix coordinate pattern general\n2 2 1\n0 1\n"),
        IndexOutOfDeclaredShape);
    CHECK_THROWS_AS(
        parse_overlaps(
            "%%MatrixMarket matrix coordinate integer general\n2 2 1\n1 2 -3 0\n"),
        NegativeIndex);
}

TEST_CASE("synthetic pairs are identical at p_match 1") {
    SynthParams p;
    p.pairs = 3;
    p.length = 80;
    p.p_match = 1.0;
    p.k = 17;
    auto d = generate_synthetic(p);
    REQUIRE(d.store.size() == 6);
    REQUIRE(d.tasks.size() == 3);
    CHECK(d.k == 17);
    for (int i = 0; i < 3; ++i) {
        CHECK(d.store[2 * i].symbols == d.store[2 * i + 1].symbols);
        CHECK(d.store[2 * i].name == "h" + std::to_string(i));
        CHECK(d.store[2 * i + 1].name == "v" + std::to_string(i));
        CHECK(d.tasks[i].h_id == uint32_t(2 * i));
        CHECK(d.tasks[i].v_id == uint32_t(2 * i + 1));
        CHECK(d.tasks[i].h_seed == d.tasks[i].v_seed);
    }
}

TEST_CASE("at p_match 0 every position outside the seed differs") {
    SynthParams p;
    p.length = 60;
    p.p_match = 0.0;
    p.k = 11;
    auto d = generate_synthetic(p);
    const auto& h = d.store[0].symbols;
    const auto& v = d.store[1].symbols;
    size_t seed = d.tasks[0].h_seed;
    for (size_t i = 0; i < h.size(); ++i) {
        if (i >= seed && i < seed + 11)
            CHECK(h[i] == v[i]);
        else
            CHECK(h[i] != v[i]);
    }
}

TEST_CASE("the planted seed sits dead center when asked") {
    SynthParams p;
    p.length = 100;
    p.k = 20;
    p.placement = SeedPlacement::Center;
    auto d = generate_synthetic(p);
    CHECK(d.tasks[0].h_seed == 40);
}

TEST_CASE("random placement keeps the seed in bounds and is reproducible") {
    SynthParams p;
    p.pairs = 20;
    p.length = 50;
    p.k = 17;
    p.placement = SeedPlacement::UniformRandom;
    auto d1 = generate_synthetic(p);
    auto d2 = generate_synthetic(p);
    for (size_t i = 0; i < d1.tasks.size(); ++i) {
        CHECK(d1.tasks[i].h_seed == d2.tasks[i].h_seed);
        CHECK(d1.tasks[i].h_seed + 17 <= 50);
        CHECK(d1.store[2 * i].symbols == d2.store[2 * i].symbols);
        CHECK(d1.store[2 * i + 1].symbols == d2.store[2 * i + 1].symbols);
    }
}

TEST_CASE("different rng seeds give different sequences") {
    SynthParams a, b;
    a.length = b.length = 200;
    a.rng_seed = 1;
    b.rng_seed = 2;
    CHECK(generate_synthetic(a).store[0].symbols !=
          generate_synthetic(b).store[0].symbols);
}

TEST_CASE("synthetic parameters are validated") {
    SynthParams p;
    p.k = 0;
    CHECK_THROWS_AS(generate_synthetic(p), InputError);
    p.k = 30;
    p.length = 20;
    CHECK_THROWS_AS(generate_synthetic(p), InputError);
}

TEST_CASE("the result table lists both halves of each task in order") {
    SeedAlignment a;
    a.task_id = 3;
    a.seed_score = 17;
    a.left = ExtensionResult{5, 6, 7, 100, 3};
    a.right = ExtensionResult{8, 9, 10, 200, 4};
    a.total = 30;
    SeedAlignment b;
    b.task_id = 1;
    b.seed_score = 17;
    b.total = 17;
    RunSummary s;
    s.gcups = 1.25;
    s.wall_seconds = 0.5;
    s.batch_count = 2;
    auto text = write_results({a, b}, {FailedUnit{9, 'R', 33}}, s);

    std::istringstream in(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    REQUIRE(lines.size() >= 6);
    CHECK(lines[0].substr(0, 8) == "task_id\t");
    CHECK(lines[1].substr(0, 2) == "1\t");  // task 1 sorts first
    CHECK(lines[3].substr(0, 2) == "3\t");
    bool total_seen = false, failed_seen = false;
    for (const auto& l : lines) {
        if (l.rfind("# total\t47", 0) == 0) total_seen = true;
        if (l.find("task 9 side R spread 33") != std::string::npos) failed_seen = true;
    }
    CHECK(total_seen);
    CHECK(failed_seen);
}

TEST_CASE("an empty run still writes the header and summary") {
    auto text = write_results({}, {}, RunSummary{});
    CHECK(text.find("task") != std::string::npos);
    CHECK(text.find("# total\t0") != std::string::npos);
}
