#include "rankmod/ecc.hpp"

#include <algorithm>
#include <bitset>
#include <stdexcept>

#include "rankmod/enumeration.hpp"

namespace rankmod {

std::string to_string(CodeMetric metric) {
    return metric == CodeMetric::inversion ? "inversion" : "kendall";
}

CodeMetric code_metric_from_string(const std::string& name) {
    if (name == "inversion") return CodeMetric::inversion;
    if (name == "kendall") return CodeMetric::kendall;
    throw std::invalid_argument("unknown code metric: " + name);
}

std::int64_t code_distance(CodeMetric metric, const Permutation& a, const Permutation& b) {
    return metric == CodeMetric::inversion ? inversion_distance(a, b) : kendall_tau(a, b);
}

ECCCode greedy_code(const std::vector<Permutation>& universe, int d, CodeMetric metric) {
    if (universe.empty()) throw std::invalid_argument("greedy_code: empty universe");
    if (d < 1) throw std::invalid_argument("greedy_code: d must be >= 1");
    ECCCode code;
    code.min_distance_claim = d;
    code.metric = metric;
    code.base.n = universe.front().size();
    code.base.label = "greedy(d=" + std::to_string(d) + "," + to_string(metric) + ")";
    for (const Permutation& cand : universe) {
        bool ok = true;
        for (const Permutation& member : code.base.members) {
            if (code_distance(metric, cand, member) < d) {
                ok = false;
                break;
            }
        }
        if (ok) code.base.members.push_back(cand);
    }
    return code;
}

ECCCode greedy_over_constrained(int n, int k, ConstraintKind kind, int d, CodeMetric metric,
                                int budget) {
    check_budget(n, budget, "enumeration");
    ECCCode code = greedy_code(constrained_permutations(n, kind, k), d, metric);
    code.base.k = k;
    code.base.kind = kind;
    return code;
}

std::optional<DistanceViolation> verify_min_distance(const ECCCode& code) {
    const auto& ms = code.base.members;
    for (size_t i = 0; i < ms.size(); ++i)
        for (size_t j = i + 1; j < ms.size(); ++j) {
            const std::int64_t dist = code_distance(code.metric, ms[i], ms[j]);
            if (dist < code.min_distance_claim) return DistanceViolation{ms[i], ms[j], dist};
        }
    return std::nullopt;
}

Rational gv_lower_bound(int n, int k, int d, int budget) {
    if (d < 1) throw std::invalid_argument("gv_lower_bound: d must be >= 1");
    const BigCount a = count_constrained(n, ConstraintKind::two_neighbor, k, budget);
    return Rational(a, ball_size_inversion(n, d - 1));
}

BoundReport sphere_packing_bound(int n, int k, int d, int /*enumeration_budget*/, int scan_budget) {
    if (d < 1) throw std::invalid_argument("sphere_packing_bound: d must be >= 1");
    const BigCount space = count_two_neighbor_vectors(n, k, scan_budget);
    ExtremalBall ball = min_ball_constrained(n, k, (d - 1) / 2, scan_budget);
    return {Rational(space, ball.size), std::move(ball.center)};
}

BoundReport gv_manhattan_lower_bound(int n, int k, int d, int enumeration_budget, int scan_budget) {
    if (d < 1) throw std::invalid_argument("gv_manhattan_lower_bound: d must be >= 1");
    const BigCount a = count_constrained(n, ConstraintKind::two_neighbor, k, enumeration_budget);
    ExtremalBall ball = max_ball_constrained(n, k, 2 * static_cast<std::int64_t>(d) - 1, scan_budget);
    return {Rational(a, ball.size), std::move(ball.center)};
}

namespace {

// Branch-and-bound maximum clique with greedy-coloring bounds, sized for the
// at-most-120-vertex graphs that arise from S_n universes with n <= 5.
constexpr size_t kMaxCliqueVertices = 128;
using VertexSet = std::bitset<kMaxCliqueVertices>;

class MaxClique {
public:
    MaxClique(size_t n, std::vector<VertexSet> adj) : n_(n), adj_(std::move(adj)) {}

    size_t solve() {
        VertexSet all;
        for (size_t v = 0; v < n_; ++v) all.set(v);
        expand(all, 0);
        return best_;
    }

private:
    void expand(VertexSet cand, size_t depth) {
        if (cand.none()) {
            best_ = std::max(best_, depth);
            return;
        }
        // Greedy coloring: vertices of one color class are pairwise
        // nonadjacent, so depth + color index bounds any clique below.
        std::vector<size_t> order;
        std::vector<size_t> bound;
        VertexSet rest = cand;
        size_t color = 0;
        while (rest.any()) {
            ++color;
            VertexSet cls = rest;
            while (cls.any()) {
                size_t v = first_bit(cls);
                order.push_back(v);
                bound.push_back(color);
                cls &= ~adj_[v];
                cls.reset(v);
                rest.reset(v);
            }
        }
        for (size_t i = order.size(); i-- > 0;) {
            if (depth + bound[i] <= best_) return;
            const size_t v = order[i];
            VertexSet next = cand & adj_[v];
            if (depth + 1 > best_) best_ = depth + 1;
            expand(next, depth + 1);
            cand.reset(v);
        }
    }

    static size_t first_bit(const VertexSet& s) {
        for (size_t v = 0; v < kMaxCliqueVertices; ++v)
            if (s.test(v)) return v;
        return kMaxCliqueVertices;
    }

    size_t n_;
    std::vector<VertexSet> adj_;
    size_t best_ = 0;
};

} // namespace

size_t max_code_size(int n, int k, ConstraintKind kind, int d, CodeMetric metric, int budget) {
    if (d < 1) throw std::invalid_argument("max_code_size: d must be >= 1");
    const auto universe = constrained_permutations(n, kind, k);
    check_budget(n, budget, "enumeration");
    if (universe.size() > kMaxCliqueVertices)
        throw std::invalid_argument("max_code_size: universe too large for exhaustive search");
    if (d == 1) return universe.size();
    std::vector<VertexSet> adj(universe.size());
    for (size_t i = 0; i < universe.size(); ++i)
        for (size_t j = i + 1; j < universe.size(); ++j)
            if (code_distance(metric, universe[i], universe[j]) >= d) {
                adj[i].set(j);
                adj[j].set(i);
            }
    return MaxClique(universe.size(), std::move(adj)).solve();
}

} // namespace rankmod
