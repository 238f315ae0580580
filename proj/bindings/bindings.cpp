#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rankmod/capacity.hpp"
#include "rankmod/constructions.hpp"
#include "rankmod/ecc.hpp"
#include "rankmod/enumeration.hpp"
#include "rankmod/metrics.hpp"

namespace py = pybind11;
using namespace rankmod;

namespace {

// cpp_int round-trips through its decimal form; Python ints are unbounded.
py::int_ to_py_int(const BigCount& v) {
    return py::cast<py::int_>(py::module_::import("builtins").attr("int")(v.str()));
}

py::object to_py_fraction(const Rational& v) {
    return py::module_::import("fractions").attr("Fraction")(v.str());
}

Permutation as_perm(const std::vector<int>& values) { return Permutation(values); }

std::vector<std::vector<int>> as_lists(const std::vector<Permutation>& perms) {
    std::vector<std::vector<int>> out;
    out.reserve(perms.size());
    for (const Permutation& p : perms) out.push_back(p.values());
    return out;
}

ConstraintKind kind_arg(const std::string& name) { return constraint_kind_from_string(name); }
CodeMetric metric_arg(const std::string& name) { return code_metric_from_string(name); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Constrained rank-modulation permutation codes";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    m.def(
        "satisfies",
        [](const std::string& kind, const std::vector<int>& sigma, int k) {
            return satisfies(kind_arg(kind), as_perm(sigma), k);
        },
        py::arg("kind"), py::arg("sigma"), py::arg("k"),
        "Whether sigma meets the named neighbor constraint with parameter k");

    m.def(
        "count_constrained",
        [](int n, const std::string& kind, int k, int budget) {
            return to_py_int(count_constrained(n, kind_arg(kind), k, budget));
        },
        py::arg("n"), py::arg("kind"), py::arg("k"), py::arg("budget") = kDefaultEnumerationBudget);

    m.def(
        "count_constrained_parallel",
        [](int n, const std::string& kind, int k, int budget) {
            return to_py_int(count_constrained_parallel(n, kind_arg(kind), k, budget));
        },
        py::arg("n"), py::arg("kind"), py::arg("k"), py::arg("budget") = kDefaultEnumerationBudget);

    m.def(
        "constrained_permutations",
        [](int n, const std::string& kind, int k) {
            return as_lists(constrained_permutations(n, kind_arg(kind), k));
        },
        py::arg("n"), py::arg("kind"), py::arg("k"));

    m.def(
        "psi", [](const std::vector<int>& sigma) { return psi(as_perm(sigma)); }, py::arg("sigma"),
        "First value followed by consecutive differences");

    m.def("upper_bound_A_log", &upper_bound_A_log, py::arg("n"), py::arg("k"));

    m.def(
        "capacity_ratio",
        [](const py::int_& count, int n) {
            return capacity_ratio(BigCount(py::cast<std::string>(py::str(count))), n);
        },
        py::arg("count"), py::arg("n"));

    m.def(
        "inverse", [](const std::vector<int>& sigma) { return as_perm(sigma).inverse().values(); },
        py::arg("sigma"));

    m.def(
        "valleys", [](const std::vector<int>& sigma) { return valleys(as_perm(sigma)); },
        py::arg("sigma"), "1-based interior positions that are local minima");

    m.def(
        "compose_blocks",
        [](int ell, int m, const std::vector<int>& rho,
           const std::vector<std::vector<int>>& blocks) {
            MultiPermutation mp(ell, m, rho);
            std::vector<BlockPermutation> gammas;
            gammas.reserve(blocks.size());
            for (size_t i = 0; i < blocks.size(); ++i)
                gammas.emplace_back(static_cast<int>(i + 1), blocks[i]);
            return compose(mp, gammas).values();
        },
        py::arg("ell"), py::arg("m"), py::arg("rho"), py::arg("blocks"));

    m.def(
        "decompose_blocks",
        [](const std::vector<int>& sigma, int ell, int m) {
            auto [mp, gammas] = decompose(as_perm(sigma), ell, m);
            std::vector<std::vector<int>> blocks;
            blocks.reserve(gammas.size());
            for (const BlockPermutation& g : gammas) blocks.push_back(g.values());
            return py::make_tuple(mp.values(), blocks);
        },
        py::arg("sigma"), py::arg("ell"), py::arg("m"));

    m.def(
        "csym_members",
        [](int n, int k) { return as_lists(build_Csym(n, k).members); }, py::arg("n"), py::arg("k"));

    m.def(
        "csym_cardinality", [](int n, int k) { return to_py_int(cardinality_Csym(n, k)); },
        py::arg("n"), py::arg("k"));

    m.def(
        "casym_members", [](int n) { return as_lists(build_Casym(n).members); }, py::arg("n"));

    m.def(
        "casym_lower_bound", [](int n) { return to_py_fraction(lower_bound_Casym(n)); },
        py::arg("n"));

    m.def(
        "cr_members", [](int n, int r) { return as_lists(build_Cr(n, r).members); }, py::arg("n"),
        py::arg("r"));

    m.def(
        "stirling2", [](int ell, int r) { return to_py_int(stirling2(ell, r)); }, py::arg("ell"),
        py::arg("r"));

    m.def(
        "kendall_tau",
        [](const std::vector<int>& sigma, const std::vector<int>& pi) {
            return kendall_tau(as_perm(sigma), as_perm(pi));
        },
        py::arg("sigma"), py::arg("pi"));

    m.def(
        "inversion_distance",
        [](const std::vector<int>& sigma, const std::vector<int>& pi) {
            return inversion_distance(as_perm(sigma), as_perm(pi));
        },
        py::arg("sigma"), py::arg("pi"));

    m.def(
        "manhattan",
        [](const std::vector<int>& sigma, const std::vector<int>& pi) {
            return manhattan(as_perm(sigma), as_perm(pi));
        },
        py::arg("sigma"), py::arg("pi"));

    m.def(
        "check_sandwich",
        [](const std::vector<int>& sigma, const std::vector<int>& pi) {
            const SandwichReport r = check_sandwich(as_perm(sigma), as_perm(pi));
            return py::make_tuple(r.d_M, r.d_I, r.holds);
        },
        py::arg("sigma"), py::arg("pi"), "Returns (manhattan, inversion, holds)");

    m.def(
        "ball_size_inversion",
        [](int n, std::int64_t r) { return to_py_int(ball_size_inversion(n, r)); }, py::arg("n"),
        py::arg("r"));

    m.def(
        "mahonian_row",
        [](int n) {
            const auto row = mahonian_row(n);
            py::list out;
            for (const BigCount& c : row) out.append(to_py_int(c));
            return out;
        },
        py::arg("n"));

    m.def(
        "greedy_code",
        [](int n, int k, const std::string& kind, int d, const std::string& metric, int budget) {
            return as_lists(
                greedy_over_constrained(n, k, kind_arg(kind), d, metric_arg(metric), budget)
                    .base.members);
        },
        py::arg("n"), py::arg("k"), py::arg("kind"), py::arg("d"), py::arg("metric") = "inversion",
        py::arg("budget") = kDefaultEnumerationBudget);

    m.def(
        "max_code_size",
        [](int n, int k, const std::string& kind, int d, const std::string& metric, int budget) {
            return max_code_size(n, k, kind_arg(kind), d, metric_arg(metric), budget);
        },
        py::arg("n"), py::arg("k"), py::arg("kind"), py::arg("d"), py::arg("metric") = "inversion",
        py::arg("budget") = kDefaultEnumerationBudget);

    m.def(
        "gv_lower_bound",
        [](int n, int k, int d, int budget) { return to_py_fraction(gv_lower_bound(n, k, d, budget)); },
        py::arg("n"), py::arg("k"), py::arg("d"), py::arg("budget") = kDefaultEnumerationBudget);

    m.def(
        "sphere_packing_bound",
        [](int n, int k, int d, int budget) {
            const BoundReport r = sphere_packing_bound(n, k, d, budget);
            return py::make_tuple(to_py_fraction(r.value), r.extremal_center);
        },
        py::arg("n"), py::arg("k"), py::arg("d"), py::arg("budget") = kDefaultEnumerationBudget);

    m.def(
        "gv_manhattan_lower_bound",
        [](int n, int k, int d, int budget) {
            const BoundReport r = gv_manhattan_lower_bound(n, k, d, budget);
            return py::make_tuple(to_py_fraction(r.value), r.extremal_center);
        },
        py::arg("n"), py::arg("k"), py::arg("d"), py::arg("budget") = kDefaultEnumerationBudget);

    m.def("capacity_single_sym", &capacity_single_sym, py::arg("eps"));
    m.def("capacity_single_asym", &capacity_single_asym, py::arg("eps"));
    m.def("capacity_two_sym", &capacity_two_sym, py::arg("eps1"), py::arg("eps2"));
    m.def("capacity_two_asym", &capacity_two_asym, py::arg("eps1"), py::arg("eps2"));
}
