#include <doctest.h>

#include <sstream>

#include "nk/chart.hpp"
#include "nk/csv.hpp"

using namespace nk;

TEST_CASE("format_sig12") {
    CHECK(format_sig12(0.5) == "0.5");
    CHECK(format_sig12(1.0 / 3.0) == "0.333333333333");
    CHECK(format_sig12(0.0) == "0");
    CHECK(format_sig12(123456789012345.0) == "1.23456789012e+14");
}

TEST_CASE("records CSV round-trips at 12 significant digits") {
    std::vector<ReplicateRecord> records;
    for (int r = 0; r < 5; ++r) {
        ReplicateRecord rec;
        rec.algorithm = r % 2 ? Algorithm::ICTT1 : Algorithm::CS;
        rec.k = 3 + r;
        rec.replicate_index = r;
        rec.best_fitness = 0.123456789012 + r * 0.1;
        rec.hamming = r;
        rec.steps_executed = 100 + r;
        rec.terminated_early = r % 2 == 0;
        rec.seed_used = 0xdeadbeef00ull + r;
        records.push_back(rec);
    }

    std::ostringstream os;
    write_records_csv(os, records);
    std::istringstream is(os.str());
    const CsvTable table = read_csv(is);
    REQUIRE(table.rows.size() == 5);
    REQUIRE(table.header.size() == 8);

    std::vector<ReplicateRecord> parsed;
    for (const auto& row : table.rows) {
        ReplicateRecord rec;
        rec.algorithm = *algorithm_from_name(row[table.column("algorithm")]);
        rec.k = std::stoi(row[table.column("k")]);
        rec.replicate_index = std::stoi(row[table.column("replicate_index")]);
        rec.best_fitness = std::stod(row[table.column("best_fitness")]);
        rec.hamming = std::stoi(row[table.column("hamming")]);
        rec.steps_executed = std::stoi(row[table.column("steps_executed")]);
        rec.terminated_early = row[table.column("terminated_early")] == "1";
        rec.seed_used = std::stoull(row[table.column("seed_used")]);
        parsed.push_back(rec);
    }
    std::ostringstream os2;
    write_records_csv(os2, parsed);
    CHECK(os.str() == os2.str());
}

TEST_CASE("summary CSV layout") {
    std::vector<SummaryRow> rows(2);
    rows[0].algorithm = Algorithm::CS;
    rows[0].k = 2;
    rows[0].mean_fitness = 0.7;
    rows[0].count = 10;
    rows[1].algorithm = Algorithm::ICTT1;
    rows[1].k = 19;
    rows[1].mean_fitness = 0.71;
    rows[1].count = 10;

    std::ostringstream os;
    write_summary_csv(os, rows);
    std::istringstream is(os.str());
    const CsvTable table = read_csv(is);
    CHECK(table.header.front() == "algorithm");
    CHECK(table.header.back() == "iterations");
    REQUIRE(table.rows.size() == 2);
    CHECK(table.rows[0][0] == "cs");
    CHECK(table.rows[1][0] == "ictt1");
}

TEST_CASE("trace CSV layout") {
    MovesTrace t;
    t.mean_moves = {3.5, 2.0, 0.0};
    t.zero_fraction = {0.0, 0.25, 1.0};
    std::ostringstream os;
    write_trace_csv(os, {2}, {t});
    std::istringstream is(os.str());
    const CsvTable table = read_csv(is);
    REQUIRE(table.rows.size() == 3);
    CHECK(table.rows[0][0] == "2");
    CHECK(table.rows[0][1] == "1");
    CHECK(table.rows[2][1] == "3");
    CHECK(table.rows[2][2] == "0");
}

TEST_CASE("render_line_chart emits one polyline per series") {
    std::vector<ChartSeries> series{
        {"cs", {{0, 0.7}, {5, 0.68}, {10, 0.66}}},
        {"ictt1", {{0, 0.69}, {5, 0.70}, {10, 0.70}}},
    };
    const std::string svg = render_line_chart(series, "t", "K", "fitness");
    std::size_t count = 0, pos = 0;
    while ((pos = svg.find("<polyline", pos)) != std::string::npos) {
        ++count;
        ++pos;
    }
    CHECK(count == 2);
    CHECK(svg.find("cs</text>") != std::string::npos);
    CHECK(svg.find("ictt1</text>") != std::string::npos);
}

TEST_CASE("render_line_chart is deterministic and rejects empty input") {
    std::vector<ChartSeries> series{{"a", {{0, 1}, {1, 2}}}};
    CHECK(render_line_chart(series, "t", "x", "y") == render_line_chart(series, "t", "x", "y"));
    CHECK_THROWS_AS(render_line_chart({}, "t", "x", "y"), std::invalid_argument);
    CHECK_THROWS_AS(render_line_chart({{"a", {}}}, "t", "x", "y"), std::invalid_argument);
}
