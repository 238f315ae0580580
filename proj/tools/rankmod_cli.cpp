#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "rankmod/capacity.hpp"
#include "rankmod/constructions.hpp"
#include "rankmod/ecc.hpp"
#include "rankmod/enumeration.hpp"
#include "rankmod/io.hpp"
#include "rankmod/metrics.hpp"

namespace {

using namespace rankmod;

// Verification failures exit with 1, distinct from usage (2) and budget (3).
struct VerificationFailure : std::exception {
    const char* what() const noexcept override { return "verification failed"; }
};

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << content;
}

void emit_table(const std::string& format, const std::string& out_path,
                const std::vector<std::string>& columns, const std::vector<Row>& rows) {
    write_output(format == "json" ? render_json(rows) : render_csv(columns, rows), out_path);
}

struct CommonOpts {
    std::string format = "csv";
    std::string out_path;

    void attach(CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        cmd->add_option("--out", out_path, "Write output to PATH instead of stdout");
    }
};

void run_count(int n, const std::optional<int>& k, const std::string& kind_name, int budget,
               const CommonOpts& common) {
    const ConstraintKind kind = constraint_kind_from_string(kind_name);
    std::vector<int> ks;
    if (k) ks.push_back(*k);
    else // sweep the whole nontrivial range
        for (int kk = 1; kk <= std::max(1, n - 1); ++kk) ks.push_back(kk);
    std::vector<Row> rows;
    for (int kk : ks) {
        const BigCount count = count_constrained(n, kind, kk, budget);
        Row row;
        row["n"] = n;
        row["kind"] = kind_name;
        row["k"] = kk;
        row["count"] = json_big(count);
        row["log2_count"] = log2_big(count);
        row["capacity_ratio"] = capacity_ratio(count, n);
        rows.push_back(std::move(row));
    }
    emit_table(common.format, common.out_path,
               {"n", "kind", "k", "count", "log2_count", "capacity_ratio"}, rows);
}

// The generated code goes to --out (or stdout); the one-line size summary goes
// to stdout (or stderr when the code itself occupies stdout).
void emit_code_with_summary(const std::string& code_text, const std::string& summary,
                            const std::string& out_path) {
    write_output(code_text, out_path);
    (out_path.empty() ? std::cerr : std::cout) << summary << '\n';
}

void run_construct_csym(int n, int k, const CommonOpts& common) {
    const Code code = build_Csym(n, k);
    std::ostringstream os;
    write_code(os, code);
    emit_code_with_summary(os.str(),
                           code.label + " size=" + std::to_string(code.size())
                               + " formula=" + cardinality_Csym(n, k).str(),
                           common.out_path);
}

void run_construct_casym(int n, const CommonOpts& common) {
    const Code code = build_Casym(n);
    std::ostringstream os;
    write_code(os, code);
    emit_code_with_summary(os.str(),
                           code.label + " size=" + std::to_string(code.size())
                               + " lower_bound=" + fmt_rational(lower_bound_Casym(n)),
                           common.out_path);
}

void run_construct_cr(int n, int r, const CommonOpts& common) {
    const Code code = build_Cr(n, r);
    std::ostringstream os;
    write_code(os, code);
    emit_code_with_summary(os.str(), code.label + " size=" + std::to_string(code.size()),
                           common.out_path);
}

void run_construct_greedy(int n, int k, const std::string& kind_name, int d, int budget,
                          const CommonOpts& common) {
    const ConstraintKind kind = constraint_kind_from_string(kind_name);
    const ECCCode code = greedy_over_constrained(n, k, kind, d, CodeMetric::inversion, budget);
    std::ostringstream os;
    write_code(os, code);
    const Rational gv(count_constrained(n, kind, k, budget), ball_size_inversion(n, d - 1));
    emit_code_with_summary(os.str(),
                           code.base.label + " size=" + std::to_string(code.base.members.size())
                               + " gv_lower=" + fmt_rational(gv),
                           common.out_path);
}

void run_verify(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open code file: " + path);
    const LoadedCode loaded = read_code(f);

    bool ok = true;
    std::cout << "file: " << path << "\n"
              << "members: " << loaded.members.size() << "\n";

    auto sorted = loaded.members;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1]) {
            std::cout << "duplicate member: " << format_permutation(sorted[i]) << "\n";
            ok = false;
        }
    }

    size_t constraint_violations = 0;
    for (const Permutation& p : loaded.members) {
        if (!satisfies(loaded.kind, p, loaded.k)) {
            std::cout << "constraint violation (" << to_string(loaded.kind)
                      << " k=" << loaded.k << "): " << format_permutation(p) << "\n";
            ++constraint_violations;
            ok = false;
        }
    }
    std::cout << "constraint: " << to_string(loaded.kind) << " k=" << loaded.k << " "
              << (constraint_violations == 0 ? "ok" : "violated") << "\n";

    if (loaded.d) {
        ECCCode code{Code{loaded.n, loaded.k, loaded.kind, "", loaded.members}, *loaded.d,
                     *loaded.metric};
        if (const auto violation = verify_min_distance(code)) {
            std::cout << "distance violation: " << format_permutation(violation->a) << " vs "
                      << format_permutation(violation->b) << " distance=" << violation->distance
                      << " < d=" << *loaded.d << "\n";
            ok = false;
        } else {
            std::cout << "min_distance: d=" << *loaded.d << " metric=" << to_string(*loaded.metric)
                      << " ok\n";
        }
    }

    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    if (!ok) throw VerificationFailure{};
}

void run_bounds(int n, int k, const std::optional<int>& d, int budget, const CommonOpts& common) {
    std::vector<int> ds;
    if (d) ds.push_back(*d);
    else
        for (int dd = 1; dd <= 6; ++dd) ds.push_back(dd);
    const double log2_upper = upper_bound_A_log(n, k);
    std::vector<Row> rows;
    for (int dd : ds) {
        const Rational gv = gv_lower_bound(n, k, dd, budget);
        const ECCCode greedy = greedy_over_constrained(n, k, ConstraintKind::two_neighbor, dd,
                                                       CodeMetric::inversion, budget);
        const BoundReport packing = sphere_packing_bound(n, k, dd, budget);
        Row row;
        row["n"] = n;
        row["k"] = k;
        row["d"] = dd;
        row["log2_upper_A"] = log2_upper;
        row["gv_lower"] = rational_to_double(gv);
        row["greedy_size"] = greedy.base.members.size();
        row["sphere_packing_upper"] = rational_to_double(packing.value);
        rows.push_back(std::move(row));
    }
    emit_table(common.format, common.out_path,
               {"n", "k", "d", "log2_upper_A", "gv_lower", "greedy_size", "sphere_packing_upper"},
               rows);
}

void run_balls(int n, std::int64_t r, const CommonOpts& common) {
    std::vector<Row> rows;
    for (std::int64_t radius = 0; radius <= r; ++radius) {
        const BigCount b = ball_size_inversion(n, radius);
        Row row;
        row["n"] = n;
        row["r"] = radius;
        row["b_I"] = json_big(b);
        row["log2_b_I"] = log2_big(b);
        rows.push_back(std::move(row));
    }
    emit_table(common.format, common.out_path, {"n", "r", "b_I", "log2_b_I"}, rows);
}

void run_capacity(const std::optional<double>& eps1, const std::optional<double>& eps2,
                  const CommonOpts& common) {
    std::vector<double> e1s, e2s;
    if (eps1) e1s.push_back(*eps1);
    else
        for (int i = 0; i <= 10; ++i) e1s.push_back(i / 10.0);
    if (eps2) e2s.push_back(*eps2);
    else
        for (int i = 0; i <= 10; ++i) e2s.push_back(i / 5.0);

    std::vector<Row> rows;
    auto add = [&rows](const char* surface, double e1, std::optional<double> e2, double value) {
        Row row;
        row["surface"] = surface;
        row["eps1"] = e1;
        if (e2) row["eps2"] = *e2;
        else row["eps2"] = nullptr;
        row["value"] = value;
        rows.push_back(std::move(row));
    };
    for (double e1 : e1s) {
        add("single_sym", e1, std::nullopt, capacity_single_sym(e1));
        add("single_asym", e1, std::nullopt, capacity_single_asym(e1));
    }
    for (double e1 : e1s)
        for (double e2 : e2s) {
            add("two_sym", e1, e2, capacity_two_sym(e1, e2));
            add("two_asym", e1, e2, capacity_two_asym(e1, e2));
        }
    emit_table(common.format, common.out_path, {"surface", "eps1", "eps2", "value"}, rows);
}

Permutation random_permutation(int n, std::mt19937_64& gen) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    // Explicit Fisher-Yates: identical byte streams on every platform.
    for (int i = n - 1; i > 0; --i)
        std::swap(v[static_cast<size_t>(i)], v[gen() % static_cast<std::uint64_t>(i + 1)]);
    return Permutation::unchecked(std::move(v));
}

void run_dist_pair(const std::string& sigma_text, const std::string& pi_text,
                   const CommonOpts& common) {
    const Permutation sigma = parse_permutation(sigma_text);
    const Permutation pi = parse_permutation(pi_text);
    const SandwichReport rep = check_sandwich(sigma, pi);
    Row row;
    row["n"] = sigma.size();
    row["kendall"] = kendall_tau(sigma, pi);
    row["inversion"] = rep.d_I;
    row["manhattan"] = rep.d_M;
    row["sandwich_holds"] = rep.holds;
    emit_table(common.format, common.out_path,
               {"n", "kendall", "inversion", "manhattan", "sandwich_holds"}, {row});
}

void run_dist_sampled(int n, std::uint64_t seed, const CommonOpts& common) {
    constexpr int kSamples = 100000;
    std::mt19937_64 gen(seed);
    int violations = 0;
    for (int s = 0; s < kSamples; ++s) {
        const Permutation a = random_permutation(n, gen);
        const Permutation b = random_permutation(n, gen);
        if (!check_sandwich(a, b).holds) ++violations;
    }
    Row row;
    row["n"] = n;
    row["seed"] = seed;
    row["samples"] = kSamples;
    row["violations"] = violations;
    emit_table(common.format, common.out_path, {"n", "seed", "samples", "violations"}, {row});
    if (violations > 0) throw VerificationFailure{};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constrained rank-modulation permutation codes: counting, constructions, "
                 "distances, bounds and capacity tables"};
    app.require_subcommand(1);

    // count
    auto* count_cmd = app.add_subcommand("count", "Count constrained permutations of S_n");
    int count_n = 0, count_budget = kDefaultEnumerationBudget;
    std::optional<int> count_k;
    std::string count_kind = "two_neighbor";
    CommonOpts count_common;
    count_cmd->add_option("--n", count_n, "Permutation length")->required();
    count_cmd->add_option("--k", count_k, "Constraint parameter (default: sweep 1..n-1)");
    count_cmd->add_option("--kind", count_kind, "Constraint kind")
        ->check(CLI::IsMember({"single_neighbor", "two_neighbor", "asym_two_neighbor"}))
        ->capture_default_str();
    count_cmd->add_option("--budget-n", count_budget, "Enumeration budget (max n)")
        ->envname("RANKMOD_BUDGET_N");
    count_common.attach(count_cmd);
    count_cmd->callback([&] { run_count(count_n, count_k, count_kind, count_budget, count_common); });

    // construct with one nested sub-construction
    auto* construct_cmd = app.add_subcommand("construct", "Build a code and serialize it");
    construct_cmd->require_subcommand(1);

    auto* csym_cmd = construct_cmd->add_subcommand("csym", "Paired-block two-neighbor code");
    int csym_n = 0, csym_k = 0;
    CommonOpts csym_common;
    csym_cmd->add_option("--n", csym_n, "Permutation length")->required();
    csym_cmd->add_option("--k", csym_k, "Constraint parameter (odd, k+1 divides n)")->required();
    csym_common.attach(csym_cmd);
    csym_cmd->callback([&] { run_construct_csym(csym_n, csym_k, csym_common); });

    auto* casym_cmd = construct_cmd->add_subcommand("casym", "Valley-controlled asymmetric code");
    int casym_n = 0;
    CommonOpts casym_common;
    casym_cmd->add_option("--n", casym_n, "Permutation length")->required();
    casym_common.attach(casym_cmd);
    casym_cmd->callback([&] { run_construct_casym(casym_n, casym_common); });

    auto* cr_cmd = construct_cmd->add_subcommand("cr", "One valley-count layer of the asymmetric code");
    int cr_n = 0, cr_r = 0;
    CommonOpts cr_common;
    cr_cmd->add_option("--n", cr_n, "Permutation length")->required();
    cr_cmd->add_option("--r", cr_r, "Number of partition classes")->required();
    cr_common.attach(cr_cmd);
    cr_cmd->callback([&] { run_construct_cr(cr_n, cr_r, cr_common); });

    auto* greedy_cmd = construct_cmd->add_subcommand("greedy", "Greedy minimum-distance code");
    int greedy_n = 0, greedy_k = 0, greedy_d = 0, greedy_budget = kDefaultEnumerationBudget;
    std::string greedy_kind = "two_neighbor";
    CommonOpts greedy_common;
    greedy_cmd->add_option("--n", greedy_n, "Permutation length")->required();
    greedy_cmd->add_option("--k", greedy_k, "Constraint parameter")->required();
    greedy_cmd->add_option("--d", greedy_d, "Minimum inversion distance")->required();
    greedy_cmd->add_option("--kind", greedy_kind, "Universe constraint kind")
        ->check(CLI::IsMember({"single_neighbor", "two_neighbor", "asym_two_neighbor"}))
        ->capture_default_str();
    greedy_cmd->add_option("--budget-n", greedy_budget, "Enumeration budget (max n)")
        ->envname("RANKMOD_BUDGET_N");
    greedy_common.attach(greedy_cmd);
    greedy_cmd->callback(
        [&] { run_construct_greedy(greedy_n, greedy_k, greedy_kind, greedy_d, greedy_budget, greedy_common); });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check a code file against its declared constraint");
    std::string verify_path;
    verify_cmd->add_option("file", verify_path, "Code file to verify")->required();
    verify_cmd->callback([&] { run_verify(verify_path); });

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "Bound table for (n, k) across distances");
    int bounds_n = 0, bounds_k = 0, bounds_budget = kDefaultEnumerationBudget;
    std::optional<int> bounds_d;
    CommonOpts bounds_common;
    bounds_cmd->add_option("--n", bounds_n, "Permutation length")->required();
    bounds_cmd->add_option("--k", bounds_k, "Constraint parameter")->required();
    bounds_cmd->add_option("--d", bounds_d, "Minimum inversion distance (default: sweep 1..6)");
    bounds_cmd->add_option("--budget-n", bounds_budget, "Enumeration budget (max n)")
        ->envname("RANKMOD_BUDGET_N");
    bounds_common.attach(bounds_cmd);
    bounds_cmd->callback([&] { run_bounds(bounds_n, bounds_k, bounds_d, bounds_budget, bounds_common); });

    // balls
    auto* balls_cmd = app.add_subcommand("balls", "Inversion-ball size table");
    int balls_n = 0;
    std::int64_t balls_r = 0;
    CommonOpts balls_common;
    balls_cmd->add_option("--n", balls_n, "Permutation length")->required();
    balls_cmd->add_option("--r", balls_r, "Maximum radius (rows cover 0..r)")->required();
    balls_common.attach(balls_cmd);
    balls_cmd->callback([&] { run_balls(balls_n, balls_r, balls_common); });

    // capacity
    auto* capacity_cmd = app.add_subcommand("capacity", "Closed-form capacity surfaces");
    std::optional<double> cap_eps1, cap_eps2;
    CommonOpts capacity_common;
    capacity_cmd->add_option("--eps1", cap_eps1, "Constraint exponent in [0,1] (default: grid)");
    capacity_cmd->add_option("--eps2", cap_eps2, "Distance exponent in [0,2] (default: grid)");
    capacity_common.attach(capacity_cmd);
    capacity_cmd->callback([&] { run_capacity(cap_eps1, cap_eps2, capacity_common); });

    // dist
    auto* dist_cmd = app.add_subcommand("dist", "Distance queries and sampled distance checks");
    std::string dist_sigma, dist_pi;
    int dist_n = 0;
    std::uint64_t dist_seed = 0;
    CommonOpts dist_common;
    dist_cmd->add_option("sigma", dist_sigma, "First permutation, e.g. \"3 1 2\"");
    dist_cmd->add_option("pi", dist_pi, "Second permutation");
    dist_cmd->add_option("--n", dist_n, "Sampled mode: permutation length");
    dist_cmd->add_option("--seed", dist_seed, "Sampled mode: RNG seed")->capture_default_str();
    dist_common.attach(dist_cmd);
    dist_cmd->callback([&] {
        const bool pair_mode = !dist_sigma.empty() || !dist_pi.empty();
        if (pair_mode) {
            if (dist_sigma.empty() || dist_pi.empty())
                throw CLI::ValidationError("dist", "pair mode needs both permutations");
            run_dist_pair(dist_sigma, dist_pi, dist_common);
        } else {
            if (dist_n < 1)
                throw CLI::ValidationError("dist", "sampled mode needs --n >= 1");
            run_dist_sampled(dist_n, dist_seed, dist_common);
        }
    });

    try {
        app.parse(argc, argv);
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const rankmod::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const VerificationFailure&) {
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
