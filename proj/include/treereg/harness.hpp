#ifndef TREEREG_HARNESS_HPP
#define TREEREG_HARNESS_HPP

#include "treereg/bounds.hpp"
#include "treereg/graph.hpp"
#include "treereg/tree_enum.hpp"

#include <json.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace treereg {

/// Records for a batch of enumerated trees, in input order. Regularity is
/// attached to trees of order <= oracle_up_to. Trees are dealt round-robin
/// to `jobs` OpenMP threads.
std::vector<InvariantRecord> build_records(std::span<const TreeCode> codes, int oracle_up_to, int jobs);

/// Single-threaded reference for build_records.
std::vector<InvariantRecord> build_records_serial(std::span<const TreeCode> codes, int oracle_up_to);

// ---------------------------------------------------------------------------
// Table reproduction

struct Table1Row {
    int row = 0;
    std::string tree_code;
    int p = 0, d = 0;
    int lb = 0, reg = 0, ub = 0;
    int expected_lb = 0, expected_reg = 0, expected_ub = 0;
    bool matches() const { return lb == expected_lb && reg == expected_reg && ub == expected_ub; }
};

struct Table2Row {
    int row = 0;
    std::string tree_code;
    int n = 0, p = 0, d = 0; // p as listed: P_2 counts one pendant
    int reg_whiskered = 0;   // homology oracle on T_1
    int alpha = 0;
    int bound = 0;
    int expected_reg = 0, expected_bound = 0;
    bool matches() const
    {
        return reg_whiskered == expected_reg && bound == expected_bound && alpha == reg_whiskered;
    }
};

struct Table3Row {
    int p = 0;
    int ub_np = 0, ub_23 = 0;
    int expected_np = 0, expected_23 = 0;
    bool matches() const { return ub_np == expected_np && ub_23 == expected_23; }
};

struct Table4Row {
    int row = 0;
    std::string tree_code;
    int p = 0, d = 0;
    int im_whiskered = 0; // im(T_a) with a = (2,...,2), exact tree DP
    int alpha = 0;
    int wub_d = 0, wub_p = 0;
    int expected_p = 0, expected_d = 0, expected_reg = 0, expected_wub_d = 0, expected_wub_p = 0;
    bool matches() const
    {
        return p == expected_p && d == expected_d && im_whiskered == expected_reg && alpha == expected_reg &&
               wub_d == expected_wub_d && wub_p == expected_wub_p;
    }
};

std::vector<Table1Row> table1();
std::vector<Table2Row> table2();
std::vector<Table3Row> table3();
std::vector<Table4Row> table4();

/// The two order-9 trees compared in table 4.
Graph table4_tree(int row);

struct TableReport {
    int which = 0;
    bool matches = false;
    std::string text;
    nlohmann::json data;
};

/// Throws Error unless which is 1..4.
TableReport reproduce_table(int which);

// ---------------------------------------------------------------------------
// Exhaustive verification with checkpoint/resume

struct VerifyOptions {
    int max_order = 0;
    int min_order = 2;
    int oracle_up_to = 0;
    int jobs = 1;
    std::size_t checkpoint_every = 1000;
    std::string checkpoint_path; // empty: no checkpointing
    std::string csv_path;        // empty: no record CSV
    std::string violations_path = "violations.jsonl";
    /// Stop after this many trees in the current invocation (at a
    /// checkpoint boundary), as if the process had been interrupted.
    std::optional<std::size_t> stop_after;
};

struct VerifyReport {
    bool completed = false;
    bool resumed = false;
    std::size_t trees = 0;
    std::size_t violations = 0;
    std::map<int, std::size_t> trees_per_order;
    double wall_seconds = 0;
    int exit_code() const { return violations > 0 ? 1 : (completed ? 0 : 3); }
};

/// Throws Error when the checkpoint belongs to a run with other parameters.
VerifyReport run_verify(const VerifyOptions& options);

// ---------------------------------------------------------------------------
// Census

struct CensusOptions {
    int max_order = 0;
    std::string out_path;
    std::string format = "csv"; // csv | jsonl
    int oracle_up_to = 0;
    int jobs = 1;
};

struct CensusReport {
    std::size_t records = 0;
    TightnessCensus tightness;
    std::string summary_path;
};

CensusReport run_census(const CensusOptions& options);

// ---------------------------------------------------------------------------
// Single-graph query

/// Invariants of `g`, and of its multi-whiskering when `a` is given.
nlohmann::json invariants_report(const Graph& g, const std::optional<WhiskerVector>& a);
std::string format_invariants_report(const nlohmann::json& report);

} // namespace treereg

#endif
