#include "treereg/harness.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace treereg;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name)
    {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

bool same_records(const std::vector<InvariantRecord>& a, const std::vector<InvariantRecord>& b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (to_json(a[k]) != to_json(b[k]))
            return false;
    return true;
}

} // namespace

TEST_CASE("parallel records equal the serial reference")
{
    for (int n : {1, 7, 10, 13}) {
        const auto codes = enumerate_tree_codes(n);
        const auto serial = build_records_serial(codes, 10);
        for (int jobs : {1, 2, 4})
            CHECK(same_records(build_records(codes, 10, jobs), serial));
    }
}

TEST_CASE("table 1")
{
    const auto rows = table1();
    REQUIRE(rows.size() == 11);
    std::multiset<int> regs;
    for (const auto& r : rows) {
        CHECK(r.matches());
        regs.insert(r.reg);
    }
    CHECK(regs == std::multiset<int>{2, 2, 2, 2, 2, 2, 1, 3, 1, 2, 1});
    CHECK(rows[7].p == 3);
    CHECK(rows[7].d == 4);
    CHECK(rows[7].reg == 3);
    CHECK(rows[7].ub == 3);
    CHECK(rows[7].tree_code == "0 1 2 1 2 1 2");
    std::set<std::string> codes;
    for (const auto& r : rows)
        codes.insert(r.tree_code);
    CHECK(codes.size() == 11);
}

TEST_CASE("table 2")
{
    const auto rows = table2();
    REQUIRE(rows.size() == 7);
    const int expected[] = {1, 2, 2, 3, 3, 3, 4};
    for (std::size_t k = 0; k < rows.size(); ++k) {
        CHECK(rows[k].matches());
        CHECK(rows[k].reg_whiskered == expected[k]);
        CHECK(rows[k].alpha == expected[k]);
        CHECK(rows[k].bound == expected[k]);
    }
    CHECK(rows[0].p == 1);
}

TEST_CASE("table 3")
{
    const auto rows = table3();
    REQUIRE(rows.size() == 13);
    for (const auto& r : rows)
        CHECK(r.matches());
    CHECK(rows[0].ub_np == 98);
    CHECK(rows[0].ub_23 == 66);
    CHECK(rows[6].ub_np == 50);
    CHECK(rows[6].ub_23 == 50);
    CHECK(rows[12].ub_np == 1);
    CHECK(rows[12].ub_23 == 33);
}

TEST_CASE("table 4")
{
    const auto rows = table4();
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].matches());
    CHECK(rows[1].matches());
    CHECK(rows[0].im_whiskered == 5);
    CHECK(rows[1].im_whiskered == 6);
    CHECK(table4_tree(1).order() == 9);
    CHECK(table4_tree(2).order() == 9);
    CHECK_THROWS_AS(table4_tree(3), Error);
}

TEST_CASE("reproduce_table text and data")
{
    for (int which = 1; which <= 4; ++which) {
        const auto report = reproduce_table(which);
        CHECK(report.matches);
        CHECK(report.data["matches"] == true);
        CHECK(report.text.find("all rows match") != std::string::npos);
    }
    CHECK(reproduce_table(1).data["rows"].size() == 11);
    CHECK(reproduce_table(3).data["rows"][6]["ub_tree_np"] == 50);
    CHECK_THROWS_AS(reproduce_table(5), Error);
}

TEST_CASE("verify small orders with the oracle")
{
    TempDir dir("treereg_verify_small");
    VerifyOptions o;
    o.max_order = 7;
    o.oracle_up_to = 7;
    o.violations_path = dir.file("violations.jsonl");
    const auto r = run_verify(o);
    CHECK(r.completed);
    CHECK(r.trees == 24);
    CHECK(r.violations == 0);
    CHECK(r.exit_code() == 0);
    CHECK(fs::file_size(o.violations_path) == 0);

    // Including the single vertex gives the full 25 trees.
    o.min_order = 1;
    const auto with_one = run_verify(o);
    CHECK(with_one.trees == 25);
    CHECK(with_one.violations == 0);

    o.min_order = 0;
    CHECK_THROWS_AS(run_verify(o), Error);
}

TEST_CASE("verify option validation")
{
    VerifyOptions o;
    o.max_order = max_enumeration_order() + 1;
    CHECK_THROWS_AS(run_verify(o), Error);
    o.max_order = 5;
    o.oracle_up_to = 11;
    CHECK_THROWS_AS(run_verify(o), Error);
    o.oracle_up_to = 0;
    o.checkpoint_every = 0;
    CHECK_THROWS_AS(run_verify(o), Error);
}

TEST_CASE("verify resumes to byte-identical output")
{
    TempDir dir("treereg_verify_resume");
    VerifyOptions full;
    full.max_order = 12;
    full.oracle_up_to = 8;
    full.csv_path = dir.file("full.csv");
    full.violations_path = dir.file("full.jsonl");
    const auto reference = run_verify(full);
    REQUIRE(reference.completed);

    VerifyOptions part = full;
    part.csv_path = dir.file("part.csv");
    part.violations_path = dir.file("part.jsonl");
    part.checkpoint_path = dir.file("ck.json");
    part.checkpoint_every = 37;
    part.stop_after = 300;
    int rounds = 0;
    VerifyReport r;
    do {
        r = run_verify(part);
        ++rounds;
        CHECK(r.exit_code() == (r.completed ? 0 : 3));
        if (!r.completed) {
            // Garbage past the checkpoint, as left by a crash, must be discarded.
            std::ofstream(part.csv_path, std::ios::app) << "partial,row";
        }
        part.jobs = 1 + rounds % 3;
    } while (!r.completed && rounds < 100);
    CHECK(r.completed);
    CHECK(rounds > 2);
    CHECK(r.resumed);
    CHECK(r.trees == reference.trees);
    CHECK(r.trees_per_order == reference.trees_per_order);
    CHECK(slurp(part.csv_path) == slurp(full.csv_path));

    const auto ck = nlohmann::json::parse(slurp(part.checkpoint_path));
    CHECK(ck["complete"] == true);
    CHECK(ck["aggregate"]["records"] == reference.trees);

    // A finished checkpoint is a no-op on rerun.
    CHECK(run_verify(part).completed);
    CHECK(slurp(part.csv_path) == slurp(full.csv_path));
}

TEST_CASE("verify refuses a checkpoint from another run")
{
    TempDir dir("treereg_verify_mismatch");
    VerifyOptions o;
    o.max_order = 9;
    o.checkpoint_path = dir.file("ck.json");
    o.violations_path = dir.file("v.jsonl");
    o.checkpoint_every = 10;
    o.stop_after = 20;
    REQUIRE_FALSE(run_verify(o).completed);

    VerifyOptions other = o;
    other.max_order = 10;
    CHECK_THROWS_WITH_AS(run_verify(other), doctest::Contains("refusing"), Error);
    other = o;
    other.oracle_up_to = 5;
    CHECK_THROWS_AS(run_verify(other), Error);

    std::ofstream(o.checkpoint_path) << "{not json";
    CHECK_THROWS_WITH_AS(run_verify(o), doctest::Contains("unreadable"), Error);
}

TEST_CASE("verify output does not depend on the job count")
{
    TempDir dir("treereg_verify_jobs");
    std::string previous;
    for (int jobs : {1, 2, 3}) {
        VerifyOptions o;
        o.max_order = 11;
        o.oracle_up_to = 6;
        o.jobs = jobs;
        o.checkpoint_every = 50;
        o.csv_path = dir.file("out.csv");
        o.violations_path = dir.file("v.jsonl");
        REQUIRE(run_verify(o).completed);
        const auto csv = slurp(o.csv_path);
        if (!previous.empty())
            CHECK(csv == previous);
        previous = csv;
    }
}

TEST_CASE("census")
{
    TempDir dir("treereg_census");
    CensusOptions o;
    o.max_order = 4;
    o.out_path = dir.file("census.csv");
    auto r = run_census(o);
    CHECK(r.records == 5);
    const auto text = slurp(o.out_path);
    CHECK(text.rfind(std::string(csv_header()) + "\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 6);
    CHECK(fs::exists(r.summary_path));
    const auto summary = nlohmann::json::parse(slurp(r.summary_path));
    CHECK(summary.size() == 4);

    o.max_order = 9;
    o.format = "jsonl";
    o.out_path = dir.file("census.jsonl");
    r = run_census(o);
    CHECK(r.records == 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47);
    for (int n = 3; n <= 9; ++n) {
        const auto& s = r.tightness.orders().at(n);
        std::string path_code = "0";
        for (int k = 1; k <= n / 2; ++k)
            path_code += " " + std::to_string(k);
        for (int k = 1; k < (n + 1) / 2; ++k)
            path_code += " " + std::to_string(k);
        CHECK(std::find(s.lb_tight_codes.begin(), s.lb_tight_codes.end(), path_code) != s.lb_tight_codes.end());
        std::string star_code = "0";
        for (int k = 1; k < n; ++k)
            star_code += " 1";
        CHECK(std::find(s.lb_tight_codes.begin(), s.lb_tight_codes.end(), star_code) != s.lb_tight_codes.end());
        CHECK(std::find(s.ub_tight_codes.begin(), s.ub_tight_codes.end(), star_code) != s.ub_tight_codes.end());
    }

    // Sorted by (n, code).
    std::ifstream in(o.out_path);
    std::string line;
    std::pair<int, std::string> last{0, ""};
    while (std::getline(in, line)) {
        const auto j = nlohmann::json::parse(line);
        const std::pair<int, std::string> key{j["n"].get<int>(), j["tree_code"].get<std::string>()};
        CHECK(last < key);
        last = key;
    }
}

TEST_CASE("census errors")
{
    CensusOptions o;
    o.max_order = 3;
    o.out_path = "/nonexistent-dir/census.csv";
    CHECK_THROWS_WITH_AS(run_census(o), doctest::Contains("not writable"), Error);
    o.out_path = (fs::temp_directory_path() / "treereg_census_err.csv").string();
    o.format = "xml";
    CHECK_THROWS_AS(run_census(o), Error);
    o.format = "csv";
    o.max_order = 0;
    CHECK_THROWS_AS(run_census(o), Error);
}

TEST_CASE("invariants report")
{
    auto r = invariants_report(parse_edge_list("0-1,1-2,2-3,3-4,4-5,5-6"), std::nullopt);
    CHECK(r["tree"] == true);
    CHECK(r["base"]["n"] == 7);
    CHECK(r["base"]["p"] == 2);
    CHECK(r["base"]["d"] == 6);
    CHECK(r["base"]["im"] == 2);
    CHECK(r["base"]["bounds"]["lb_tree"] == 2);
    CHECK(r["base"]["bounds"]["ub_tree"] == 4);
    const auto text = format_invariants_report(r);
    CHECK(text.find("n=7 p=2 d=6 im=2") != std::string::npos);
    CHECK(text.find("lb=2 ub=4") != std::string::npos);

    r = invariants_report(parse_edge_list("0-1"), WhiskerVector({1, 1}));
    CHECK(r["base"]["alpha"] == 1);
    CHECK(r["whiskered"]["im"] == 1);
    CHECK(r["whiskered"]["reg"] == 1);

    r = invariants_report(parse_edge_list("0-1,0-2,0-3,0-4"), WhiskerVector::ones(5));
    CHECK(r["whiskered"]["im"] == 4);
    CHECK(r["whiskered"]["reg"] == 4);
    CHECK(r["whiskered"]["wub"] == 4);

    r = invariants_report(parse_edge_list("0-1,1-2,2-0,2-3"), std::nullopt);
    CHECK(r["tree"] == false);
    CHECK(r["base"]["im"] == 1);
    CHECK(r["base"]["reg"] == 1);
    CHECK(format_invariants_report(r).find("not a tree") != std::string::npos);

    CHECK_THROWS_AS(invariants_report(path_graph(3), WhiskerVector::ones(2)), Error);
}
