#include "treereg/harness.hpp"
#include "treereg/tree_enum.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>

using namespace treereg;

namespace {

WhiskerVector parse_vector(const std::string& text)
{
    std::vector<int> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        int v = 0;
        const char* first = text.data() + pos;
        const char* last = text.data() + comma;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (first == last || ec != std::errc() || ptr != last)
            throw ParseError("whisker vector entry at position " + std::to_string(pos) + " is not an integer",
                             pos);
        values.push_back(v);
        pos = comma + 1;
    }
    return WhiskerVector(std::move(values));
}

int cmd_invariants(const std::string& edges, const std::string& file, int order, const std::string& vector, bool json)
{
    const Graph g = file.empty() ? parse_edge_list(edges, order) : read_edge_file(file, order);
    std::optional<WhiskerVector> a;
    if (!vector.empty())
        a = parse_vector(vector);
    const auto report = invariants_report(g, a);
    if (json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << format_invariants_report(report);
    return 0;
}

int cmd_tables(const std::vector<int>& which, const std::string& out)
{
    nlohmann::json all = nlohmann::json::array();
    bool ok = true;
    for (int w : which) {
        const auto report = reproduce_table(w);
        std::cout << report.text << "\n";
        all.push_back(report.data);
        ok = ok && report.matches;
    }
    if (!out.empty()) {
        std::ofstream f(out, std::ios::trunc);
        if (!f)
            throw Error("cannot write '" + out + "'");
        f << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_verify(const VerifyOptions& o)
{
    const auto report = run_verify(o);
    nlohmann::json per_order = nlohmann::json::object();
    for (const auto& [n, count] : report.trees_per_order)
        per_order[std::to_string(n)] = count;
    const nlohmann::json summary = {{"completed", report.completed},
                                    {"resumed", report.resumed},
                                    {"trees", report.trees},
                                    {"violations", report.violations},
                                    {"trees_per_order", per_order},
                                    {"wall_seconds", report.wall_seconds},
                                    {"violations_path", o.violations_path}};
    std::cout << summary.dump(2) << "\n";
    return report.exit_code();
}

int cmd_census(const CensusOptions& o)
{
    const auto report = run_census(o);
    std::cout << "wrote " << report.records << " records to " << o.out_path << "\n";
    std::cout << "summary: " << report.summary_path << "\n";
    for (const auto& [n, s] : report.tightness.orders())
        std::cout << "n=" << n << " trees=" << s.trees << " lb_tight=" << s.lb_tight << " ub_tight=" << s.ub_tight
                  << " wub_tight=" << s.wub_tight << "\n";
    return 0;
}

int cmd_enumerate(int order, bool codes_only)
{
    for (const auto& code : enumerate_tree_codes(order)) {
        if (codes_only)
            std::cout << code.str() << "\n";
        else
            std::cout << code.str() << "\t" << format_edge_list(code.to_graph()) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Edge-ideal regularity of trees: invariants, bound checks and census"};
    app.require_subcommand(1);

    std::string edges, file, vector;
    int order = -1;
    bool json = false;
    auto* inv = app.add_subcommand("invariants", "invariants of one graph, optionally multi-whiskered");
    auto* edge_opt = inv->add_option("--edges", edges, "edge list such as 0-1,1-2");
    inv->add_option("--file", file, "file with one 'u v' pair per line")->excludes(edge_opt);
    inv->add_option("--order", order, "vertex count (default: 1 + largest label)");
    inv->add_option("--vector", vector, "whisker counts a1,a2,...");
    inv->add_flag("--json", json, "print JSON");

    std::vector<int> which;
    std::string tables_out;
    auto* tables = app.add_subcommand("tables", "reproduce the reference tables");
    tables->add_option("--which", which, "table numbers")->required()->check(CLI::Range(1, 4));
    tables->add_option("--out", tables_out, "write machine-readable JSON here");

    VerifyOptions vo;
    std::size_t stop_after = 0;
    auto* verify = app.add_subcommand("verify", "check every bound on all trees up to an order");
    verify->add_option("--max-order", vo.max_order, "largest tree order")->required();
    verify->add_option("--min-order", vo.min_order, "smallest tree order")->capture_default_str();
    verify->add_option("--oracle-up-to", vo.oracle_up_to, "compare against homology up to this order")
        ->capture_default_str();
    verify->add_option("--checkpoint", vo.checkpoint_path, "checkpoint file (resumed if present)");
    verify->add_option("--jobs", vo.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--checkpoint-every", vo.checkpoint_every, "trees between checkpoints")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--csv", vo.csv_path, "also write every record as CSV");
    verify->add_option("--violations", vo.violations_path, "violations JSONL")->capture_default_str();
    auto* stop_opt = verify->add_option("--stop-after", stop_after, "exit after this many trees");

    CensusOptions co;
    auto* census = app.add_subcommand("census", "write every record and a tightness summary");
    census->add_option("--max-order", co.max_order, "largest tree order")->required();
    census->add_option("--out", co.out_path, "output file")->required();
    census->add_option("--format", co.format, "csv or jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}))
        ->capture_default_str();
    census->add_option("--oracle-up-to", co.oracle_up_to, "attach homology regularity up to this order")
        ->capture_default_str();
    census->add_option("--jobs", co.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();

    int enum_order = 0;
    bool codes_only = false;
    auto* enumerate = app.add_subcommand("enumerate", "list non-isomorphic trees of one order");
    enumerate->add_option("--order", enum_order, "tree order")->required();
    enumerate->add_flag("--codes-only", codes_only, "omit edge lists");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*inv) {
            if (edges.empty() && file.empty() && order < 0)
                throw Error("invariants needs --edges or --file");
            return cmd_invariants(edges, file, order, vector, json);
        }
        if (*tables)
            return cmd_tables(which, tables_out);
        if (*verify) {
            if (*stop_opt)
                vo.stop_after = stop_after;
            return cmd_verify(vo);
        }
        if (*census)
            return cmd_census(co);
        if (*enumerate)
            return cmd_enumerate(enum_order, codes_only);
    } catch (const ParseError& e) {
        std::cerr << "treereg: parse error at position " << e.position() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "treereg: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
