#include "treereg/bounds.hpp"

#include "treereg/regularity.hpp"
#include "treereg/tree_enum.hpp"

#include <algorithm>

namespace treereg {

BoundSet evaluate_bounds(int n, int p, int d)
{
    if (n < 2)
        throw Error("bounds need n >= 2, got n=" + std::to_string(n));
    if (p < 1 || p > n)
        throw Error("pendant count p=" + std::to_string(p) + " outside 1.." + std::to_string(n));
    if (d < 1 || d > n - 1)
        throw Error("diameter d=" + std::to_string(d) + " outside 1.." + std::to_string(n - 1));

    BoundSet b;
    b.lb_tree = floor_div(n - p + d + 5, 6);
    b.ub_tree_np = n - p;
    b.ub_tree_23 = floor_div(2 * n - p, 3);
    b.ub_tree = std::min(b.ub_tree_np, b.ub_tree_23);
    b.wub_d = ceil_div(2 * n - d - 1, 2);
    b.wub_p = floor_div(2 * n + p - 2, 3);
    b.wub = std::min(b.wub_d, b.wub_p);
    b.w_lb = ceil_div(n, 2);
    b.w_ub_triv = n - 1;
    return b;
}

int bound_pendant_count(int n, int p) { return n == 2 ? 1 : p; }

InvariantRecord record_for_tree(const TreeWitness& t, bool with_oracle)
{
    const Graph& g = t.graph();
    const auto s = structural_invariants(g);

    InvariantRecord r;
    r.tree_code = canonical_code(t).str();
    r.n = s.n;
    r.p = s.p;
    r.d = s.d;
    r.im_certificate = induced_matching_number(g);
    r.alpha_certificate = independence_number(g);
    r.im = r.im_certificate.size();
    r.alpha = r.alpha_certificate.size();
    if (with_oracle && r.n <= kRecordOracleCap)
        r.reg = regularity(g);
    if (r.n >= 2) {
        r.bounds = evaluate_bounds(r.n, bound_pendant_count(r.n, r.p), r.d);
        r.lb_tight = r.im == r.bounds->lb_tree;
        r.ub_tight = r.im == r.bounds->ub_tree;
        r.wub_tight = r.alpha == r.bounds->wub;
    }
    return r;
}

std::vector<Violation> verify_record(const InvariantRecord& r)
{
    std::vector<Violation> out;
    auto fail = [&](const char* rule, std::string detail) { out.push_back({rule, r.tree_code, std::move(detail)}); };
    auto text = [](const char* lhs, int a, const char* op, const char* rhs, int b) {
        return std::string(lhs) + "=" + std::to_string(a) + " " + op + " " + rhs + "=" + std::to_string(b);
    };

    if (r.bounds) {
        const auto& b = *r.bounds;
        if (b.lb_tree > r.im)
            fail(rules::kTreeLower, text("lb_tree", b.lb_tree, "<=", "im", r.im) + " fails");
        if (r.im > b.ub_tree)
            fail(rules::kTreeUpper, text("im", r.im, "<=", "ub_tree", b.ub_tree) + " fails");
        if (b.w_lb > r.alpha)
            fail(rules::kWhiskerLower, text("ceil(n/2)", b.w_lb, "<=", "alpha", r.alpha) + " fails");
        if (r.alpha > b.wub)
            fail(rules::kWhiskerUpper, text("alpha", r.alpha, "<=", "wub", b.wub) + " fails");
        if (r.alpha > b.w_ub_triv)
            fail(rules::kWhiskerTrivial, text("alpha", r.alpha, "<=", "n-1", b.w_ub_triv) + " fails");
    }
    if (r.reg && *r.reg != r.im)
        fail(rules::kChordal, text("reg", *r.reg, "==", "im", r.im) + " fails");
    return out;
}

const char* csv_header()
{
    return "tree_code,n,p,d,im,alpha,reg,lb_tree,ub_tree_np,ub_tree_23,wub_d,wub_p,lb_tight,ub_tight,wub_tight";
}

std::string to_csv_row(const InvariantRecord& r)
{
    auto num = [](int v) { return std::to_string(v); };
    auto flag = [](bool v) { return std::string(v ? "true" : "false"); };
    std::string row = r.tree_code + "," + num(r.n) + "," + num(r.p) + "," + num(r.d) + "," + num(r.im) + "," +
                      num(r.alpha) + "," + (r.reg ? num(*r.reg) : std::string());
    if (r.bounds) {
        const auto& b = *r.bounds;
        row += "," + num(b.lb_tree) + "," + num(b.ub_tree_np) + "," + num(b.ub_tree_23) + "," + num(b.wub_d) + "," +
               num(b.wub_p);
    } else {
        row += ",,,,,";
    }
    row += "," + flag(r.lb_tight) + "," + flag(r.ub_tight) + "," + flag(r.wub_tight);
    return row;
}

nlohmann::json to_json(const BoundSet& b)
{
    return {{"lb_tree", b.lb_tree}, {"ub_tree_np", b.ub_tree_np}, {"ub_tree_23", b.ub_tree_23},
            {"ub_tree", b.ub_tree}, {"wub_d", b.wub_d},           {"wub_p", b.wub_p},
            {"wub", b.wub},         {"w_lb", b.w_lb},             {"w_ub_triv", b.w_ub_triv}};
}

nlohmann::json to_json(const InvariantRecord& r)
{
    auto matching = nlohmann::json::array();
    for (const auto& e : r.im_certificate.edges)
        matching.push_back({e.u, e.v});
    nlohmann::json j = {{"tree_code", r.tree_code},
                        {"n", r.n},
                        {"p", r.p},
                        {"d", r.d},
                        {"im", r.im},
                        {"alpha", r.alpha},
                        {"reg", r.reg ? nlohmann::json(*r.reg) : nlohmann::json(nullptr)},
                        {"bounds", r.bounds ? to_json(*r.bounds) : nlohmann::json(nullptr)},
                        {"lb_tight", r.lb_tight},
                        {"ub_tight", r.ub_tight},
                        {"wub_tight", r.wub_tight},
                        {"im_certificate", matching},
                        {"alpha_certificate", r.alpha_certificate.vertices}};
    return j;
}

nlohmann::json to_json(const Violation& v)
{
    return {{"rule", v.rule}, {"tree_code", v.tree_code}, {"detail", v.detail}};
}

void TightnessCensus::add(const InvariantRecord& r)
{
    auto& s = orders_[r.n];
    ++s.trees;
    if (r.lb_tight) {
        ++s.lb_tight;
        s.lb_tight_codes.push_back(r.tree_code);
    }
    if (r.ub_tight) {
        ++s.ub_tight;
        s.ub_tight_codes.push_back(r.tree_code);
    }
    if (r.wub_tight) {
        ++s.wub_tight;
        s.wub_tight_codes.push_back(r.tree_code);
    }
}

nlohmann::json TightnessCensus::to_json() const
{
    auto out = nlohmann::json::array();
    for (const auto& [n, s] : orders_)
        out.push_back({{"n", n},
                       {"trees", s.trees},
                       {"lb_tight", s.lb_tight},
                       {"ub_tight", s.ub_tight},
                       {"wub_tight", s.wub_tight},
                       {"lb_tight_codes", s.lb_tight_codes},
                       {"ub_tight_codes", s.ub_tight_codes},
                       {"wub_tight_codes", s.wub_tight_codes}});
    return out;
}

} // namespace treereg
