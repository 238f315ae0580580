// Acceptance gate: eight end-to-end checks, one PASS/FAIL line each.
// Usage: acceptance <path-to-cli-binary>

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rankmod/capacity.hpp"
#include "rankmod/constructions.hpp"
#include "rankmod/ecc.hpp"
#include "rankmod/enumeration.hpp"
#include "rankmod/metrics.hpp"

using namespace rankmod;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli;
int g_failures = 0;

void report(int index, const std::string& name, bool ok, double seconds,
            const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", index, name.c_str(),
                seconds, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

void run_criterion(int index, const std::string& name, double time_limit_s,
                   const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto start = Clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (ok && time_limit_s > 0 && seconds > time_limit_s) {
        ok = false;
        detail = "over time limit of " + std::to_string(time_limit_s) + "s";
    }
    report(index, name, ok, seconds, detail);
}

template <typename Fn>
void for_each_perm(int n, Fn&& fn) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do fn(std::span<const int>(v));
    while (std::next_permutation(v.begin(), v.end()));
}

// 4 bits per entry is plenty for n <= 10.
std::uint64_t pack(const Permutation& p) {
    std::uint64_t key = 0;
    for (int v : p.values()) key = key << 4 | static_cast<std::uint64_t>(v - 1);
    return key;
}

std::vector<std::pair<int, int>> feasible_paired_shapes(int max_n) {
    std::vector<std::pair<int, int>> shapes;
    for (int n = 2; n <= max_n; n += 2)
        for (int k = 1; k < n + 1; k += 2)
            if (n % (k + 1) == 0) shapes.emplace_back(n, k);
    return shapes;
}

// --- criterion 1 -----------------------------------------------------------

bool paired_block_construction(std::string& detail) {
    for (const auto& [n, k] : feasible_paired_shapes(10)) {
        std::vector<std::uint64_t> seen;
        bool members_ok = true;
        for_each_csym_member(n, k, [&](const Permutation& p) {
            if (!satisfies_two_neighbor(p, k)) members_ok = false;
            seen.push_back(pack(p));
        });
        if (!members_ok) {
            detail = "constraint violation inside construction at n=" + std::to_string(n)
                     + " k=" + std::to_string(k);
            return false;
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
            detail = "duplicate codeword at n=" + std::to_string(n) + " k=" + std::to_string(k);
            return false;
        }
        if (cardinality_Csym(n, k) != BigCount(seen.size())) {
            detail = "size/formula mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k)
                     + ": got " + std::to_string(seen.size()) + " want "
                     + cardinality_Csym(n, k).str();
            return false;
        }
    }
    // Pinned spot values, independent of the formula implementation.
    if (cardinality_Csym(4, 1) != 8 || cardinality_Csym(6, 1) != 48
        || cardinality_Csym(8, 3) != 3456) {
        detail = "pinned size mismatch";
        return false;
    }
    return true;
}

// --- criterion 2 -----------------------------------------------------------

bool count_upper_bound(std::string& detail) {
    for (int n = 2; n <= 10; ++n)
        for (int k = 1; k < n; ++k) {
            const BigCount count =
                count_constrained_parallel(n, ConstraintKind::two_neighbor, k, 10);
            const double lhs = log2_big(count);
            const double rhs = upper_bound_A_log(n, k);
            if (!(lhs <= rhs)) {
                detail = "bound fails at n=" + std::to_string(n) + " k=" + std::to_string(k)
                         + ": log2(count)=" + std::to_string(lhs) + " bound="
                         + std::to_string(rhs);
                return false;
            }
        }
    return true;
}

// --- criterion 3 -----------------------------------------------------------

bool asymmetric_construction(std::string& detail) {
    if (lower_bound_Casym(4) != Rational(15, 2)) {
        detail = "n=4 guaranteed floor should be 7.5";
        return false;
    }
    for (int n = 2; n <= 9; ++n) {
        const Code code = build_Casym(n);
        for (const Permutation& p : code.members)
            if (!satisfies_asym_two_neighbor(p, 1)) {
                detail = "asymmetric constraint violated at n=" + std::to_string(n);
                return false;
            }
        if (Rational(static_cast<std::int64_t>(code.size())) < lower_bound_Casym(n)) {
            detail = "code smaller than its guaranteed floor at n=" + std::to_string(n);
            return false;
        }
        for (int r = 1; r <= n / 2; ++r) {
            const int m = (r - 1) / 2;
            std::map<std::uint64_t, int> multiplicity;
            bool valleys_ok = true;
            enumerate_Cr_raw(n, r, [&](const Permutation& p) {
                if (static_cast<int>(valleys(p).size()) != m) valleys_ok = false;
                ++multiplicity[pack(p)];
            });
            if (!valleys_ok) {
                detail = "wrong valley count in layer r=" + std::to_string(r)
                         + " at n=" + std::to_string(n);
                return false;
            }
            for (const auto& [word, count] : multiplicity)
                if (count > (1 << (m + 1))) {
                    detail = "multiplicity " + std::to_string(count) + " exceeds cap in layer r="
                             + std::to_string(r) + " at n=" + std::to_string(n);
                    return false;
                }
        }
    }
    return true;
}

// --- criterion 4 -----------------------------------------------------------

bool containment_sandwich(std::string& detail) {
    for (const auto& [n, k] : feasible_paired_shapes(10)) {
        const BigCount csym = cardinality_Csym(n, k);
        const BigCount a = count_constrained_parallel(n, ConstraintKind::two_neighbor, k, 10);
        const BigCount b = count_constrained_parallel(n, ConstraintKind::asym_two_neighbor, k, 10);
        if (!(csym <= a && a <= b && b <= factorial(n))) {
            detail = "containment chain broken at n=" + std::to_string(n) + " k="
                     + std::to_string(k);
            return false;
        }
    }
    // Two independent routes at (4,1): filter the whole group vs pruned search.
    BigCount a_filter = 0, b_filter = 0;
    for_each_perm(4, [&](std::span<const int> w) {
        if (satisfies_two_neighbor(w, 1)) ++a_filter;
        if (satisfies_asym_two_neighbor(w, 1)) ++b_filter;
    });
    const BigCount a_search = count_constrained(4, ConstraintKind::two_neighbor, 1);
    const BigCount b_search = count_constrained(4, ConstraintKind::asym_two_neighbor, 1);
    if (a_filter != 18 || a_search != 18) {
        detail = "two-neighbor count at (4,1): filter=" + a_filter.str() + " search="
                 + a_search.str() + " want 18";
        return false;
    }
    if (b_filter != 20 || b_search != 20) {
        detail = "asymmetric count at (4,1): filter=" + b_filter.str() + " search="
                 + b_search.str() + " want 20";
        return false;
    }
    return true;
}

// --- criterion 5 -----------------------------------------------------------

std::map<std::vector<int>, int> bfs_swap_distances(const std::vector<int>& from) {
    std::map<std::vector<int>, int> dist;
    std::queue<std::vector<int>> frontier;
    dist[from] = 0;
    frontier.push(from);
    while (!frontier.empty()) {
        auto cur = frontier.front();
        frontier.pop();
        const int d = dist[cur];
        for (size_t i = 0; i + 1 < cur.size(); ++i) {
            std::swap(cur[i], cur[i + 1]);
            if (dist.emplace(cur, d + 1).second) frontier.push(cur);
            std::swap(cur[i], cur[i + 1]);
        }
    }
    return dist;
}

bool metric_suite(std::string& detail) {
    // Kendall distance against breadth-first search, every pair up to n=5.
    for (int n = 2; n <= 5; ++n) {
        std::vector<Permutation> group;
        for_each_perm(n, [&](std::span<const int> w) {
            group.emplace_back(std::vector<int>(w.begin(), w.end()));
        });
        for (const Permutation& sigma : group) {
            const auto dist = bfs_swap_distances(sigma.values());
            for (const Permutation& pi : group)
                if (kendall_tau(sigma, pi) != dist.at(pi.values())) {
                    detail = "kendall mismatch vs BFS at n=" + std::to_string(n);
                    return false;
                }
        }
    }
    // Two-sided bound between Manhattan and inversion distance.
    for (int n = 2; n <= 5; ++n) {
        std::vector<Permutation> group;
        for_each_perm(n, [&](std::span<const int> w) {
            group.emplace_back(std::vector<int>(w.begin(), w.end()));
        });
        for (const Permutation& a : group)
            for (const Permutation& b : group)
                if (!check_sandwich(a, b).holds) {
                    detail = "distance sandwich fails exhaustively at n=" + std::to_string(n);
                    return false;
                }
    }
    std::mt19937_64 gen(12345);
    auto rand_perm = [&gen](int n) {
        std::vector<int> v(static_cast<size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        for (int i = n - 1; i > 0; --i)
            std::swap(v[static_cast<size_t>(i)], v[gen() % static_cast<std::uint64_t>(i + 1)]);
        return Permutation(std::move(v));
    };
    for (int trial = 0; trial < 100000; ++trial)
        if (!check_sandwich(rand_perm(20), rand_perm(20)).holds) {
            detail = "distance sandwich fails on random pair at n=20";
            return false;
        }
    // Ball sizes: dynamic program vs direct census, two centers per n.
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> scrambled(static_cast<size_t>(n));
        std::iota(scrambled.begin(), scrambled.end(), 1);
        for (int i = n - 1; i > 0; --i)
            std::swap(scrambled[static_cast<size_t>(i)],
                      scrambled[gen() % static_cast<std::uint64_t>(i + 1)]);
        for (const Permutation& center : {Permutation::identity(n), Permutation(scrambled)}) {
            const int max_r = n * (n - 1) / 2;
            std::vector<std::int64_t> census(static_cast<size_t>(max_r) + 1, 0);
            for_each_perm(n, [&](std::span<const int> w) {
                const Permutation p(std::vector<int>(w.begin(), w.end()));
                ++census[static_cast<size_t>(inversion_distance(p, center))];
            });
            std::int64_t acc = 0;
            for (int r = 0; r <= max_r; ++r) {
                acc += census[static_cast<size_t>(r)];
                if (ball_size_inversion(n, r) != BigCount(acc)) {
                    detail = "ball size mismatch at n=" + std::to_string(n) + " r="
                             + std::to_string(r);
                    return false;
                }
            }
        }
    }
    return true;
}

// --- criterion 6 -----------------------------------------------------------

bool code_suite(std::string& detail) {
    for (int n = 2; n <= 7; ++n)
        for (int k = 1; k < n; ++k) {
            const auto universe = constrained_permutations(n, ConstraintKind::two_neighbor, k);
            const BigCount universe_size(universe.size());
            size_t previous_size = universe.size();
            for (int d = 1; d <= 6; ++d) {
                const ECCCode code = greedy_code(universe, d, CodeMetric::inversion);
                const Rational greedy_size(static_cast<std::int64_t>(code.base.members.size()));
                if (const auto violation = verify_min_distance(code)) {
                    detail = "greedy output violates its distance at n=" + std::to_string(n)
                             + " k=" + std::to_string(k) + " d=" + std::to_string(d);
                    return false;
                }
                const Rational floor(universe_size, ball_size_inversion(n, d - 1));
                const Rational ceiling = sphere_packing_bound(n, k, d).value;
                if (greedy_size < floor || greedy_size > ceiling) {
                    detail = "greedy size outside [volume floor, packing ceiling] at n="
                             + std::to_string(n) + " k=" + std::to_string(k) + " d="
                             + std::to_string(d);
                    return false;
                }
                if (code.base.members.size() > previous_size) {
                    detail = "greedy size grew with d at n=" + std::to_string(n) + " k="
                             + std::to_string(k) + " d=" + std::to_string(d);
                    return false;
                }
                previous_size = code.base.members.size();
            }
        }
    // Exhaustive optimum bracketed by the Manhattan-ball bounds.
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k < n; ++k)
            for (int d = 1; d <= 6; ++d) {
                const Rational optimum(static_cast<std::int64_t>(
                    max_code_size(n, k, ConstraintKind::two_neighbor, d, CodeMetric::inversion)));
                const BoundReport lower = gv_manhattan_lower_bound(n, k, d);
                const BoundReport upper = sphere_packing_bound(n, k, d);
                if (lower.value > optimum || optimum > upper.value) {
                    detail = "optimum outside its bracket at n=" + std::to_string(n) + " k="
                             + std::to_string(k) + " d=" + std::to_string(d);
                    return false;
                }
            }
    return true;
}

// --- criterion 7 -----------------------------------------------------------

bool capacity_surfaces(std::string& detail) {
    // Local re-statements of the closed forms, kept separate from the library.
    auto single_sym = [](double e) { return (1.0 + e) / 2.0; };
    auto two_sym = [](double e1, double e2) {
        if (e2 <= 1.0) return 0.5 + e1 / 2.0;
        if (e2 >= 1.0 + e1) return 1.0 - e2 / 2.0;
        return 1.5 + e1 / 2.0 - e2;
    };
    auto two_asym = [](double e2) { return e2 <= 1.0 ? 1.0 : 2.0 - e2; };

    for (int i = 0; i < 100; ++i) {
        const double e = i / 99.0;
        if (std::fabs(capacity_single_sym(e) - single_sym(e)) > 1e-15
            || std::fabs(capacity_single_asym(e) - 1.0) > 1e-15) {
            detail = "single-parameter surface mismatch at eps=" + std::to_string(e);
            return false;
        }
    }
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            const double e1 = i / 9.0, e2 = 2.0 * j / 9.0;
            if (std::fabs(capacity_two_sym(e1, e2) - two_sym(e1, e2)) > 1e-15) {
                detail = "symmetric surface mismatch at (" + std::to_string(e1) + ", "
                         + std::to_string(e2) + ")";
                return false;
            }
            if (std::fabs(capacity_two_asym(e1, e2) - two_asym(e2)) > 1e-15) {
                detail = "asymmetric surface mismatch at (" + std::to_string(e1) + ", "
                         + std::to_string(e2) + ")";
                return false;
            }
        }
    const double h = 1e-13;
    for (int i = 0; i <= 20; ++i) {
        const double e1 = i / 20.0;
        if (std::fabs(capacity_two_sym(e1, 1.0 - h) - capacity_two_sym(e1, 1.0 + h)) > 1e-12
            || std::fabs(capacity_two_asym(e1, 1.0 - h) - capacity_two_asym(e1, 1.0 + h))
                   > 1e-12) {
            detail = "seam at the unit distance exponent is discontinuous";
            return false;
        }
        const double seam = 1.0 + e1;
        const double right = std::min(seam + h, 2.0);
        if (std::fabs(capacity_two_sym(e1, seam - h) - capacity_two_sym(e1, right)) > 1e-12) {
            detail = "diagonal seam is discontinuous at eps1=" + std::to_string(e1);
            return false;
        }
    }
    return true;
}

// --- criterion 8 -----------------------------------------------------------

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

bool run_cli(const std::string& args, const std::string& capture, int expected_exit) {
    const std::string cmd = g_cli + " " + args + " > " + capture + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) && WEXITSTATUS(status) == expected_exit;
}

bool cli_determinism(std::string& detail) {
    struct Invocation {
        std::string name;
        std::string args; // {OUT} substituted per run when present
        int expected_exit = 0;
    };
    const std::vector<Invocation> runs{
        {"count_csv", "count --n 6 --k 2 --kind two_neighbor"},
        {"count_json", "count --n 6 --k 1 --kind asym_two_neighbor --format json"},
        {"count_sweep", "count --n 5 --kind two_neighbor"},
        {"bounds_sweep", "bounds --n 4 --k 1"},
        {"construct_csym", "construct csym --n 6 --k 1 --out {OUT}"},
        {"construct_casym", "construct casym --n 7 --out {OUT}"},
        {"construct_cr", "construct cr --n 7 --r 2 --out {OUT}"},
        {"construct_greedy", "construct greedy --n 5 --k 2 --d 2 --out {OUT}"},
        {"bounds", "bounds --n 4 --k 1 --d 2"},
        {"bounds_json", "bounds --n 5 --k 2 --d 3 --format json"},
        {"balls", "balls --n 6 --r 5"},
        {"capacity_grid", "capacity"},
        {"capacity_point", "capacity --eps1 0.5 --eps2 1.2 --format json"},
        {"dist_pair", "dist \"3 1 2 4\" \"1 2 3 4\""},
        {"dist_sampled", "dist --n 20 --seed 42"},
    };
    for (const Invocation& run : runs) {
        std::string output[2];
        for (int attempt = 0; attempt < 2; ++attempt) {
            const std::string tag = "acc_" + run.name + "_" + std::to_string(attempt);
            const std::string capture = tag + ".stdout";
            std::string args = run.args;
            std::string out_file;
            if (const auto pos = args.find("{OUT}"); pos != std::string::npos) {
                out_file = tag + ".code";
                args.replace(pos, 5, out_file);
            }
            if (!run_cli(args, capture, run.expected_exit)) {
                detail = "unexpected exit status for " + run.name;
                return false;
            }
            output[attempt] = slurp(capture) + (out_file.empty() ? "" : slurp(out_file));
            if (output[attempt].empty()) {
                detail = "no output captured for " + run.name;
                return false;
            }
        }
        if (output[0] != output[1]) {
            detail = "outputs differ between runs for " + run.name;
            return false;
        }
    }
    // Round-trip: a constructed code file must verify cleanly.
    if (!run_cli("verify acc_construct_csym_0.code", "acc_verify.stdout", 0)) {
        detail = "verify rejected a freshly constructed code";
        return false;
    }
    if (!run_cli("verify acc_construct_csym_0.code", "acc_verify_again.stdout", 0)
        || slurp("acc_verify.stdout") != slurp("acc_verify_again.stdout")) {
        detail = "verify output not deterministic";
        return false;
    }
    // In the d-sweep at (4,1) the d=1 row keeps the whole universe.
    {
        std::istringstream table(slurp("acc_bounds_sweep_0.stdout"));
        std::string header, first_row;
        std::getline(table, header);
        std::getline(table, first_row);
        if (first_row.rfind("4,1,1,12,", 0) != 0 || first_row.find(",18,") == std::string::npos) {
            detail = "unexpected d=1 bounds row: " + first_row;
            return false;
        }
    }
    // Usage and budget failures keep their distinct exit codes.
    if (!run_cli("count --k 1", "acc_usage.stdout", 2)) {
        detail = "missing required flag should exit 2";
        return false;
    }
    if (!run_cli("count --n 16 --k 1", "acc_budget.stdout", 3)) {
        detail = "budget overrun should exit 3";
        return false;
    }
    if (!run_cli("construct csym --n 5 --k 1", "acc_infeasible.stdout", 2)) {
        detail = "infeasible construction shape should exit 2";
        return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 2;
    }
    g_cli = argv[1];

    run_criterion(1, "paired-block construction: membership, distinctness, exact count", 10.0,
                  paired_block_construction);
    run_criterion(2, "log-domain ceiling on two-neighbor counts up to n=10", 300.0,
                  count_upper_bound);
    run_criterion(3, "asymmetric construction: membership, valleys, multiplicity, floor", 120.0,
                  asymmetric_construction);
    run_criterion(4, "containment sandwich and dual-route counts at (4,1)", 0.0,
                  containment_sandwich);
    run_criterion(5, "metric suite: BFS oracle, distance sandwich, ball census", 60.0,
                  metric_suite);
    run_criterion(6, "code suite: greedy floor, verified distances, bracketed optimum", 600.0,
                  code_suite);
    run_criterion(7, "capacity surfaces and seam continuity", 0.0, capacity_surfaces);
    run_criterion(8, "CLI determinism and exit-code contract", 0.0, cli_determinism);

    std::printf("acceptance: %d/8 passed\n", 8 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
