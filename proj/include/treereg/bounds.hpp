#ifndef TREEREG_BOUNDS_HPP
#define TREEREG_BOUNDS_HPP

#include "treereg/graph.hpp"
#include "treereg/invariants.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace treereg {

/// Exact floor(a / b) and ceil(a / b) for b > 0.
constexpr int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
constexpr int ceil_div(int a, int b) { return -floor_div(-a, b); }

/// Closed-form regularity bounds for a tree with parameters (n, p, d).
///
/// Tree bounds sandwich reg(S/I(T)) = im(T):
///   lb_tree = floor((n - p + d + 5) / 6)
///   ub_tree = min(n - p, floor((2n - p) / 3))
/// Whiskered bounds sandwich reg(S/I(T_a)) = alpha(T):
///   w_lb = ceil(n / 2)  <=  ...  <=  wub = min(ceil((2n - d - 1) / 2), floor((2n + p - 2) / 3))
/// and the trivial ceiling w_ub_triv = n - 1.
struct BoundSet {
    int lb_tree = 0;
    int ub_tree_np = 0;
    int ub_tree_23 = 0;
    int ub_tree = 0;
    int wub_d = 0;
    int wub_p = 0;
    int wub = 0;
    int w_lb = 0;
    int w_ub_triv = 0;

    bool operator==(const BoundSet&) const = default;
};

/// Requires n >= 2, 1 <= p <= n, 1 <= d <= n - 1. Realizability of the
/// triple by an actual tree is not checked.
BoundSet evaluate_bounds(int n, int p, int d);

/// Pendant count fed to the bounds. P_2 is read as the star S_1 (one
/// center, one leaf), so it counts one pendant; every other tree uses its
/// number of degree-1 vertices.
int bound_pendant_count(int n, int p);

/// Regularity is only attached to records up to this order.
inline constexpr int kRecordOracleCap = 10;

struct InvariantRecord {
    std::string tree_code;
    int n = 0;
    int p = 0;
    int d = 0;
    int im = 0;
    int alpha = 0;
    std::optional<int> reg;
    std::optional<BoundSet> bounds; // absent for the single-vertex tree
    bool lb_tight = false;
    bool ub_tight = false;
    bool wub_tight = false;
    MatchingCertificate im_certificate;
    IndependentSetCertificate alpha_certificate;
};

/// Computes invariants, bounds and tightness for a tree. Regularity comes
/// from the homology oracle iff `with_oracle` and n <= kRecordOracleCap.
InvariantRecord record_for_tree(const TreeWitness& t, bool with_oracle);

struct Violation {
    std::string rule;
    std::string tree_code;
    std::string detail;
};

/// Rule names used in Violation::rule.
namespace rules {
inline constexpr const char* kTreeLower = "tree_lower_bound";         // lb_tree <= im
inline constexpr const char* kTreeUpper = "tree_upper_bound";         // im <= ub_tree
inline constexpr const char* kWhiskerLower = "whisker_lower_bound";   // ceil(n/2) <= alpha
inline constexpr const char* kWhiskerUpper = "whisker_upper_bound";   // alpha <= wub
inline constexpr const char* kWhiskerTrivial = "whisker_trivial_bound"; // alpha <= n - 1
inline constexpr const char* kChordal = "regularity_equals_im";       // reg == im
} // namespace rules

std::vector<Violation> verify_record(const InvariantRecord& r);

const char* csv_header();
std::string to_csv_row(const InvariantRecord& r);
nlohmann::json to_json(const InvariantRecord& r);
nlohmann::json to_json(const Violation& v);
nlohmann::json to_json(const BoundSet& b);

/// Per-order tightness counts and the codes of trees meeting each bound.
class TightnessCensus {
public:
    struct OrderSummary {
        int trees = 0;
        int lb_tight = 0;
        int ub_tight = 0;
        int wub_tight = 0;
        std::vector<std::string> lb_tight_codes;
        std::vector<std::string> ub_tight_codes;
        std::vector<std::string> wub_tight_codes;
    };

    void add(const InvariantRecord& r);
    const std::map<int, OrderSummary>& orders() const noexcept { return orders_; }
    nlohmann::json to_json() const;

private:
    std::map<int, OrderSummary> orders_;
};

} // namespace treereg

#endif
