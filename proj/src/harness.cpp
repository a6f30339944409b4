#include "treereg/harness.hpp"

#include "treereg/invariants.hpp"
#include "treereg/regularity.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <omp.h>

namespace treereg {

namespace fs = std::filesystem;

namespace {

InvariantRecord record_for_code(const TreeCode& code, int oracle_up_to)
{
    return record_for_tree(TreeWitness(code.to_graph()), code.order() <= oracle_up_to);
}

} // namespace

std::vector<InvariantRecord> build_records_serial(std::span<const TreeCode> codes, int oracle_up_to)
{
    std::vector<InvariantRecord> out;
    out.reserve(codes.size());
    for (const auto& code : codes)
        out.push_back(record_for_code(code, oracle_up_to));
    return out;
}

std::vector<InvariantRecord> build_records(std::span<const TreeCode> codes, int oracle_up_to, int jobs)
{
    std::vector<InvariantRecord> out(codes.size());
    std::exception_ptr failure;
    const auto count = static_cast<std::int64_t>(codes.size());
#pragma omp parallel for schedule(static, 1) num_threads(std::max(1, jobs))
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            out[i] = record_for_code(codes[i], oracle_up_to);
        } catch (...) {
#pragma omp critical
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

// ---------------------------------------------------------------------------
// Tables

namespace {

// Assigns each computed item to the first unused expected row with the
// same key. Returns the computed index per expected row, -1 if unmatched.
template <typename Key>
std::vector<int> match_rows(const std::vector<Key>& computed, const std::vector<Key>& expected)
{
    std::vector<int> assigned(expected.size(), -1);
    for (std::size_t c = 0; c < computed.size(); ++c)
        for (std::size_t e = 0; e < expected.size(); ++e)
            if (assigned[e] < 0 && expected[e] == computed[c]) {
                assigned[e] = static_cast<int>(c);
                break;
            }
    return assigned;
}

struct Table1Expected {
    int p, d, lb, reg, ub;
};

// Order-7 trees by row: (p, d) read off each drawing, then the three
// numeric columns.
constexpr Table1Expected kTable1[] = {
    {2, 6, 2, 2, 4}, {3, 5, 2, 2, 3}, {3, 5, 2, 2, 3}, {4, 4, 2, 2, 3}, {4, 4, 2, 2, 3}, {4, 4, 2, 2, 3},
    {5, 3, 1, 1, 2}, {3, 4, 2, 3, 3}, {5, 3, 1, 1, 2}, {4, 4, 2, 2, 3}, {6, 2, 1, 1, 1},
};

struct Table2Expected {
    int n, p, d, reg, bound;
};

constexpr Table2Expected kTable2[] = {
    {2, 1, 1, 1, 1}, {3, 2, 2, 2, 2}, {4, 2, 3, 2, 2}, {4, 3, 2, 3, 3},
    {5, 2, 4, 3, 3}, {5, 3, 3, 3, 3}, {5, 4, 2, 4, 4},
};

struct Table3Expected {
    int p, ub_np, ub_23;
};

constexpr Table3Expected kTable3[] = {
    {2, 98, 66},  {5, 95, 65},  {10, 90, 63}, {20, 80, 60}, {30, 70, 56}, {40, 60, 53}, {50, 50, 50},
    {60, 40, 46}, {70, 30, 43}, {80, 20, 40}, {90, 10, 36}, {95, 5, 35},  {99, 1, 33},
};

struct Table4Expected {
    int p, d, reg, wub_d, wub_p;
};

constexpr Table4Expected kTable4[] = {{4, 4, 5, 7, 6}, {5, 5, 6, 6, 7}};

std::string yes_no(bool v) { return v ? "ok" : "MISMATCH"; }

} // namespace

std::vector<Table1Row> table1()
{
    const auto codes = enumerate_tree_codes(7);
    const auto records = build_records(codes, 7, 1);

    std::vector<std::pair<int, int>> computed, expected;
    for (const auto& r : records)
        computed.emplace_back(r.p, r.d);
    for (const auto& e : kTable1)
        expected.emplace_back(e.p, e.d);
    const auto assigned = match_rows(computed, expected);

    std::vector<Table1Row> rows;
    for (std::size_t k = 0; k < std::size(kTable1); ++k) {
        Table1Row row;
        row.row = static_cast<int>(k) + 1;
        row.expected_lb = kTable1[k].lb;
        row.expected_reg = kTable1[k].reg;
        row.expected_ub = kTable1[k].ub;
        row.p = kTable1[k].p;
        row.d = kTable1[k].d;
        row.lb = row.reg = row.ub = -1;
        if (assigned[k] >= 0) {
            const auto& r = records[assigned[k]];
            row.tree_code = r.tree_code;
            row.lb = r.bounds->lb_tree;
            row.reg = r.reg.value_or(-1);
            row.ub = r.bounds->ub_tree;
        }
        rows.push_back(row);
    }
    // Computed trees left over mean the (p, d) profile differs.
    if (records.size() != rows.size())
        rows.back().reg = -1;
    return rows;
}

std::vector<Table2Row> table2()
{
    std::vector<Table2Row> computed;
    std::vector<std::tuple<int, int, int>> keys, expected;
    for (int n = 2; n <= 5; ++n)
        for (const auto& code : enumerate_tree_codes(n)) {
            const Graph t = code.to_graph();
            const auto s = structural_invariants(t);
            Table2Row row;
            row.tree_code = code.str();
            row.n = n;
            row.p = bound_pendant_count(n, s.p);
            row.d = s.d;
            row.reg_whiskered = regularity(multi_whisker(t, WhiskerVector::ones(n)));
            row.alpha = independence_number(t).size();
            row.bound = evaluate_bounds(n, row.p, row.d).wub;
            computed.push_back(row);
            keys.emplace_back(row.n, row.p, row.d);
        }
    for (const auto& e : kTable2)
        expected.emplace_back(e.n, e.p, e.d);
    const auto assigned = match_rows(keys, expected);

    std::vector<Table2Row> rows;
    for (std::size_t k = 0; k < std::size(kTable2); ++k) {
        Table2Row row;
        if (assigned[k] >= 0)
            row = computed[assigned[k]];
        else {
            row.n = kTable2[k].n;
            row.p = kTable2[k].p;
            row.d = kTable2[k].d;
            row.reg_whiskered = row.bound = row.alpha = -1;
        }
        row.row = static_cast<int>(k) + 1;
        row.expected_reg = kTable2[k].reg;
        row.expected_bound = kTable2[k].bound;
        rows.push_back(row);
    }
    return rows;
}

std::vector<Table3Row> table3()
{
    constexpr int n = 100;
    std::vector<Table3Row> rows;
    for (const auto& e : kTable3) {
        // These columns do not depend on the diameter.
        const auto b = evaluate_bounds(n, e.p, 2);
        rows.push_back({e.p, b.ub_tree_np, b.ub_tree_23, e.ub_np, e.ub_23});
    }
    return rows;
}

Graph table4_tree(int row)
{
    if (row == 1)
        return spider_graph(4, 2);
    if (row == 2) {
        // Center 0 with leaves 1, 2; arm 0-7-8; arm 0-3-4-5 with a leaf 6 on 4.
        const std::vector<Edge> edges = {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {0, 7}, {7, 8}, {4, 6}};
        return Graph::from_edge_list(edges, 9);
    }
    throw Error("table 4 has rows 1 and 2 only");
}

std::vector<Table4Row> table4()
{
    std::vector<Table4Row> rows;
    for (int k = 1; k <= 2; ++k) {
        const Graph t = table4_tree(k);
        const auto s = structural_invariants(t);
        const auto b = evaluate_bounds(s.n, s.p, s.d);
        const Graph whiskered = multi_whisker(t, WhiskerVector::constant(t.order(), 2));
        const auto& e = kTable4[k - 1];
        Table4Row row;
        row.row = k;
        row.tree_code = canonical_code(TreeWitness(t)).str();
        row.p = s.p;
        row.d = s.d;
        row.im_whiskered = induced_matching_number(whiskered).size();
        row.alpha = independence_number(t).size();
        row.wub_d = b.wub_d;
        row.wub_p = b.wub_p;
        row.expected_p = e.p;
        row.expected_d = e.d;
        row.expected_reg = e.reg;
        row.expected_wub_d = e.wub_d;
        row.expected_wub_p = e.wub_p;
        rows.push_back(row);
    }
    return rows;
}

TableReport reproduce_table(int which)
{
    TableReport report;
    report.which = which;
    report.matches = true;
    std::ostringstream out;
    auto rows_json = nlohmann::json::array();

    switch (which) {
    case 1: {
        out << "Table 1: all non-isomorphic trees of order 7\n";
        out << std::left << std::setw(4) << "row" << std::setw(16) << "tree_code" << std::right << std::setw(4) << "p"
            << std::setw(4) << "d" << std::setw(5) << "LB" << std::setw(5) << "reg" << std::setw(5) << "UB"
            << "  check\n";
        for (const auto& r : table1()) {
            report.matches = report.matches && r.matches();
            out << std::left << std::setw(4) << r.row << std::setw(16) << r.tree_code << std::right << std::setw(4)
                << r.p << std::setw(4) << r.d << std::setw(5) << r.lb << std::setw(5) << r.reg << std::setw(5) << r.ub
                << "  " << yes_no(r.matches()) << "\n";
            rows_json.push_back({{"row", r.row},
                                 {"tree_code", r.tree_code},
                                 {"p", r.p},
                                 {"d", r.d},
                                 {"lb_tree", r.lb},
                                 {"reg", r.reg},
                                 {"ub_tree", r.ub},
                                 {"matches", r.matches()}});
        }
        break;
    }
    case 2: {
        out << "Table 2: whiskered trees T_1 for 2 <= n <= 5\n";
        out << std::left << std::setw(4) << "row" << std::setw(12) << "tree_code" << std::right << std::setw(4) << "n"
            << std::setw(4) << "p" << std::setw(4) << "d" << std::setw(10) << "reg(T_1)" << std::setw(7) << "alpha"
            << std::setw(7) << "bound" << "  check\n";
        for (const auto& r : table2()) {
            report.matches = report.matches && r.matches();
            out << std::left << std::setw(4) << r.row << std::setw(12) << r.tree_code << std::right << std::setw(4)
                << r.n << std::setw(4) << r.p << std::setw(4) << r.d << std::setw(10) << r.reg_whiskered
                << std::setw(7) << r.alpha << std::setw(7) << r.bound << "  " << yes_no(r.matches()) << "\n";
            rows_json.push_back({{"row", r.row},
                                 {"tree_code", r.tree_code},
                                 {"n", r.n},
                                 {"p", r.p},
                                 {"d", r.d},
                                 {"reg_whiskered", r.reg_whiskered},
                                 {"alpha", r.alpha},
                                 {"wub", r.bound},
                                 {"matches", r.matches()}});
        }
        break;
    }
    case 3: {
        out << "Table 3: tree upper bounds at n = 100\n";
        out << std::setw(4) << "p" << std::setw(8) << "n-p" << std::setw(13) << "(2n-p)/3" << "  check\n";
        for (const auto& r : table3()) {
            report.matches = report.matches && r.matches();
            out << std::setw(4) << r.p << std::setw(8) << r.ub_np << std::setw(13) << r.ub_23 << "  "
                << yes_no(r.matches()) << "\n";
            rows_json.push_back({{"p", r.p}, {"ub_tree_np", r.ub_np}, {"ub_tree_23", r.ub_23}, {"matches", r.matches()}});
        }
        break;
    }
    case 4: {
        out << "Table 4: order-9 trees with a = (2,...,2)\n";
        out << std::left << std::setw(4) << "row" << std::setw(20) << "tree_code" << std::right << std::setw(4) << "p"
            << std::setw(4) << "d" << std::setw(10) << "reg(T_a)" << std::setw(7) << "alpha" << std::setw(8)
            << "wub_d" << std::setw(8) << "wub_p" << "  check\n";
        for (const auto& r : table4()) {
            report.matches = report.matches && r.matches();
            out << std::left << std::setw(4) << r.row << std::setw(20) << r.tree_code << std::right << std::setw(4)
                << r.p << std::setw(4) << r.d << std::setw(10) << r.im_whiskered << std::setw(7) << r.alpha
                << std::setw(8) << r.wub_d << std::setw(8) << r.wub_p << "  " << yes_no(r.matches()) << "\n";
            rows_json.push_back({{"row", r.row},
                                 {"tree_code", r.tree_code},
                                 {"p", r.p},
                                 {"d", r.d},
                                 {"im_whiskered", r.im_whiskered},
                                 {"alpha", r.alpha},
                                 {"wub_d", r.wub_d},
                                 {"wub_p", r.wub_p},
                                 {"matches", r.matches()}});
        }
        break;
    }
    default:
        throw Error("unknown table " + std::to_string(which) + "; expected 1, 2, 3 or 4");
    }
    out << (report.matches ? "all rows match\n" : "some rows do not match\n");
    report.text = out.str();
    report.data = {{"table", which}, {"matches", report.matches}, {"rows", rows_json}};
    return report;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

struct CheckpointState {
    std::string run_id;
    int max_order = 0;
    int min_order = 2;
    int oracle_up_to = 0;
    std::string csv_path;
    std::string violations_path;
    int next_order = 0;
    std::size_t next_index = 0;
    std::map<int, std::string> last_completed_code;
    std::uintmax_t csv_bytes = 0;
    std::uintmax_t violations_bytes = 0;
    std::size_t violations = 0;
    std::size_t records = 0;
    std::map<int, std::size_t> trees_per_order;
    double wall_seconds = 0;
    bool complete = false;
};

std::string make_run_id(const VerifyOptions& o)
{
    return "verify-n" + std::to_string(o.min_order) + "-" + std::to_string(o.max_order) + "-oracle" +
           std::to_string(o.oracle_up_to);
}

nlohmann::json checkpoint_json(const CheckpointState& s)
{
    nlohmann::json last = nlohmann::json::object();
    for (const auto& [n, code] : s.last_completed_code)
        last[std::to_string(n)] = code;
    nlohmann::json per_order = nlohmann::json::object();
    for (const auto& [n, count] : s.trees_per_order)
        per_order[std::to_string(n)] = count;
    return {{"run_id", s.run_id},
            {"max_order", s.max_order},
            {"min_order", s.min_order},
            {"oracle_up_to", s.oracle_up_to},
            {"csv_path", s.csv_path},
            {"violations_path", s.violations_path},
            {"next_order", s.next_order},
            {"next_index", s.next_index},
            {"last_completed_code", last},
            {"csv_bytes", s.csv_bytes},
            {"violations_bytes", s.violations_bytes},
            {"complete", s.complete},
            {"aggregate",
             {{"violations", s.violations},
              {"records", s.records},
              {"trees_per_order", per_order},
              {"wall_seconds", s.wall_seconds}}}};
}

CheckpointState checkpoint_from_json(const nlohmann::json& j)
{
    CheckpointState s;
    s.run_id = j.at("run_id").get<std::string>();
    s.max_order = j.at("max_order").get<int>();
    s.min_order = j.at("min_order").get<int>();
    s.oracle_up_to = j.at("oracle_up_to").get<int>();
    s.csv_path = j.at("csv_path").get<std::string>();
    s.violations_path = j.at("violations_path").get<std::string>();
    s.next_order = j.at("next_order").get<int>();
    s.next_index = j.at("next_index").get<std::size_t>();
    for (const auto& [key, value] : j.at("last_completed_code").items())
        s.last_completed_code[std::stoi(key)] = value.get<std::string>();
    s.csv_bytes = j.at("csv_bytes").get<std::uintmax_t>();
    s.violations_bytes = j.at("violations_bytes").get<std::uintmax_t>();
    s.complete = j.at("complete").get<bool>();
    const auto& agg = j.at("aggregate");
    s.violations = agg.at("violations").get<std::size_t>();
    s.records = agg.at("records").get<std::size_t>();
    for (const auto& [key, value] : agg.at("trees_per_order").items())
        s.trees_per_order[std::stoi(key)] = value.get<std::size_t>();
    s.wall_seconds = agg.at("wall_seconds").get<double>();
    return s;
}

void write_atomically(const std::string& path, const std::string& contents)
{
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error("cannot write checkpoint '" + tmp + "'");
        out << contents;
        out.flush();
        if (!out)
            throw Error("failed writing checkpoint '" + tmp + "'");
    }
    fs::rename(tmp, path);
}

// Output stream positioned at `bytes`, discarding anything written after
// the last checkpoint.
std::ofstream reopen_at(const std::string& path, std::uintmax_t bytes, bool fresh)
{
    if (fresh) {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error("cannot open '" + path + "' for writing");
        return out;
    }
    if (!fs::exists(path))
        throw Error("cannot resume: output file '" + path + "' is missing");
    if (fs::file_size(path) < bytes)
        throw Error("cannot resume: output file '" + path + "' is shorter than the checkpoint records");
    fs::resize_file(path, bytes);
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out)
        throw Error("cannot open '" + path + "' for appending");
    return out;
}

} // namespace

VerifyReport run_verify(const VerifyOptions& o)
{
    const int cap = max_enumeration_order();
    if (o.max_order < o.min_order || o.max_order > cap)
        throw Error("max order " + std::to_string(o.max_order) + " outside " + std::to_string(o.min_order) + ".." +
                    std::to_string(cap));
    if (o.min_order < 1)
        throw Error("verification starts at order 1 or above");
    if (o.oracle_up_to < 0 || o.oracle_up_to > kRecordOracleCap)
        throw Error("oracle order limit must be within 0.." + std::to_string(kRecordOracleCap));
    if (o.checkpoint_every == 0)
        throw Error("checkpoint interval must be positive");
    if (o.violations_path.empty())
        throw Error("a violations output path is required");

    const auto started = std::chrono::steady_clock::now();
    CheckpointState state;
    bool resumed = false;
    if (!o.checkpoint_path.empty() && fs::exists(o.checkpoint_path)) {
        std::ifstream in(o.checkpoint_path);
        nlohmann::json j;
        try {
            in >> j;
            state = checkpoint_from_json(j);
        } catch (const nlohmann::json::exception& e) {
            throw Error("unreadable checkpoint '" + o.checkpoint_path + "': " + e.what());
        }
        if (state.run_id != make_run_id(o) || state.max_order != o.max_order || state.min_order != o.min_order ||
            state.oracle_up_to != o.oracle_up_to || state.csv_path != o.csv_path ||
            state.violations_path != o.violations_path)
            throw Error("checkpoint '" + o.checkpoint_path + "' was written by run '" + state.run_id +
                        "' with different parameters; refusing to resume");
        resumed = true;
    } else {
        state.run_id = make_run_id(o);
        state.max_order = o.max_order;
        state.min_order = o.min_order;
        state.oracle_up_to = o.oracle_up_to;
        state.csv_path = o.csv_path;
        state.violations_path = o.violations_path;
        state.next_order = o.min_order;
    }

    auto report_from = [&](const CheckpointState& s) {
        VerifyReport r;
        r.completed = s.complete;
        r.resumed = resumed;
        r.trees = s.records;
        r.violations = s.violations;
        r.trees_per_order = s.trees_per_order;
        r.wall_seconds = s.wall_seconds;
        return r;
    };
    if (state.complete)
        return report_from(state);

    std::ofstream csv;
    if (!o.csv_path.empty()) {
        csv = reopen_at(o.csv_path, state.csv_bytes, !resumed);
        if (!resumed)
            csv << csv_header() << "\n";
    }
    std::ofstream violations = reopen_at(o.violations_path, state.violations_bytes, !resumed);

    const double wall_before = state.wall_seconds;
    auto save = [&] {
        csv.flush();
        violations.flush();
        state.csv_bytes = o.csv_path.empty() ? 0 : fs::file_size(o.csv_path);
        state.violations_bytes = fs::file_size(o.violations_path);
        state.wall_seconds =
            wall_before + std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        if (!o.checkpoint_path.empty())
            write_atomically(o.checkpoint_path, checkpoint_json(state).dump(2) + "\n");
    };

    std::size_t done_this_run = 0;
    for (int n = state.next_order; n <= o.max_order; ++n) {
        const auto codes = enumerate_tree_codes(n);
        std::size_t i = n == state.next_order ? state.next_index : 0;
        if (i > codes.size())
            throw Error("checkpoint index past the end of order " + std::to_string(n));
        if (i > 0) {
            auto it = state.last_completed_code.find(n);
            if (it == state.last_completed_code.end() || it->second != codes[i - 1].str())
                throw Error("checkpoint does not match the enumeration at order " + std::to_string(n));
        }
        while (i < codes.size()) {
            std::size_t chunk = std::min(o.checkpoint_every, codes.size() - i);
            if (o.stop_after)
                chunk = std::min(chunk, *o.stop_after - done_this_run);
            const auto records = build_records(std::span(codes).subspan(i, chunk), o.oracle_up_to, o.jobs);
            for (const auto& r : records) {
                if (csv.is_open())
                    csv << to_csv_row(r) << "\n";
                for (const auto& v : verify_record(r)) {
                    violations << to_json(v).dump() << "\n";
                    ++state.violations;
                }
            }
            i += chunk;
            done_this_run += chunk;
            state.records += chunk;
            state.trees_per_order[n] += chunk;
            state.last_completed_code[n] = codes[i - 1].str();
            state.next_order = n;
            state.next_index = i;
            if (i == codes.size()) {
                state.next_order = n + 1;
                state.next_index = 0;
            }
            const bool stopping = o.stop_after && done_this_run >= *o.stop_after;
            if (state.next_order > o.max_order)
                state.complete = true;
            save();
            if (stopping && !state.complete)
                return report_from(state);
        }
    }
    state.complete = true;
    save();
    return report_from(state);
}

// ---------------------------------------------------------------------------
// Census

CensusReport run_census(const CensusOptions& o)
{
    const int cap = max_enumeration_order();
    if (o.max_order < 1 || o.max_order > cap)
        throw Error("max order " + std::to_string(o.max_order) + " outside 1.." + std::to_string(cap));
    if (o.format != "csv" && o.format != "jsonl")
        throw Error("unknown census format '" + o.format + "'; expected csv or jsonl");
    if (o.oracle_up_to < 0 || o.oracle_up_to > kRecordOracleCap)
        throw Error("oracle order limit must be within 0.." + std::to_string(kRecordOracleCap));

    std::ofstream out(o.out_path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("output path '" + o.out_path + "' is not writable");
    const bool csv = o.format == "csv";
    if (csv)
        out << csv_header() << "\n";

    CensusReport report;
    for (int n = 1; n <= o.max_order; ++n) {
        const auto codes = enumerate_tree_codes(n);
        for (const auto& r : build_records(codes, o.oracle_up_to, o.jobs)) {
            if (csv)
                out << to_csv_row(r) << "\n";
            else
                out << to_json(r).dump() << "\n";
            report.tightness.add(r);
            ++report.records;
        }
    }
    out.flush();
    if (!out)
        throw Error("failed writing census to '" + o.out_path + "'");

    report.summary_path = o.out_path + ".summary.json";
    std::ofstream summary(report.summary_path, std::ios::binary | std::ios::trunc);
    if (!summary)
        throw Error("summary path '" + report.summary_path + "' is not writable");
    summary << report.tightness.to_json().dump(2) << "\n";
    return report;
}

// ---------------------------------------------------------------------------
// Single-graph query

nlohmann::json invariants_report(const Graph& g, const std::optional<WhiskerVector>& a)
{
    nlohmann::json report;
    const bool tree = is_tree(g);
    report["tree"] = tree;
    if (tree) {
        const auto record = record_for_tree(TreeWitness(g), true);
        report["base"] = to_json(record);
    } else {
        nlohmann::json base = {{"n", g.order()}, {"edges", g.edge_count()}};
        if (is_forest(g) || g.edge_count() <= kBruteForceEdgeCap)
            base["im"] = induced_matching_number(g).size();
        if (is_forest(g) || g.order() <= kBruteForceOrderCap)
            base["alpha"] = independence_number(g).size();
        if (g.order() <= kMaxBettiOrder)
            base["reg"] = regularity(g);
        report["base"] = base;
    }
    if (a) {
        const Graph whiskered = multi_whisker(g, *a);
        nlohmann::json w = {{"order", whiskered.order()}, {"vector", std::vector<int>(a->entries().begin(), a->entries().end())}};
        if (is_forest(whiskered) || whiskered.edge_count() <= kBruteForceEdgeCap)
            w["im"] = induced_matching_number(whiskered).size();
        if (whiskered.order() <= kMaxBettiOrder)
            w["reg"] = regularity(whiskered);
        if (tree && g.order() >= 2) {
            const auto s = structural_invariants(g);
            const auto b = evaluate_bounds(s.n, bound_pendant_count(s.n, s.p), s.d);
            w["wub_d"] = b.wub_d;
            w["wub_p"] = b.wub_p;
            w["wub"] = b.wub;
        }
        report["whiskered"] = w;
    }
    return report;
}

std::string format_invariants_report(const nlohmann::json& report)
{
    std::ostringstream out;
    auto field = [&](const nlohmann::json& j, const char* key) {
        if (j.contains(key) && !j[key].is_null())
            out << " " << key << "=" << j[key].dump();
    };
    const auto& base = report["base"];
    if (report["tree"].get<bool>()) {
        out << "tree " << base["tree_code"].get<std::string>() << "\n";
        for (const char* key : {"n", "p", "d", "im", "alpha", "reg"})
            field(base, key);
        if (!base["bounds"].is_null()) {
            const auto& b = base["bounds"];
            out << " lb=" << b["lb_tree"] << " ub=" << b["ub_tree"] << " wub=" << b["wub"];
        }
        out << "\n";
        out << " lb_tight=" << base["lb_tight"] << " ub_tight=" << base["ub_tight"]
            << " wub_tight=" << base["wub_tight"] << "\n";
    } else {
        out << "not a tree; bounds not applicable\n";
        for (const char* key : {"n", "edges", "im", "alpha", "reg"})
            field(base, key);
        out << "\n";
    }
    if (report.contains("whiskered")) {
        const auto& w = report["whiskered"];
        out << "whiskered";
        for (const char* key : {"order", "im", "reg", "wub_d", "wub_p", "wub"})
            field(w, key);
        out << "\n";
    }
    return out.str();
}

} // namespace treereg
