#include "rankmod/constraints.hpp"

#include <stdexcept>

namespace rankmod {

std::string to_string(ConstraintKind kind) {
    switch (kind) {
    case ConstraintKind::single_neighbor: return "single_neighbor";
    case ConstraintKind::two_neighbor: return "two_neighbor";
    case ConstraintKind::asym_two_neighbor: return "asym_two_neighbor";
    }
    throw std::logic_error("unknown constraint kind");
}

ConstraintKind constraint_kind_from_string(const std::string& name) {
    if (name == "single_neighbor") return ConstraintKind::single_neighbor;
    if (name == "two_neighbor") return ConstraintKind::two_neighbor;
    if (name == "asym_two_neighbor") return ConstraintKind::asym_two_neighbor;
    throw std::invalid_argument("unknown constraint kind: " + name);
}

bool satisfies(ConstraintKind kind, std::span<const int> x, int k) {
    if (k < 1) throw std::invalid_argument("constraint parameter k must be >= 1");
    switch (kind) {
    case ConstraintKind::single_neighbor: return satisfies_single_neighbor(x, k);
    case ConstraintKind::two_neighbor: return satisfies_two_neighbor(x, k);
    case ConstraintKind::asym_two_neighbor: return satisfies_asym_two_neighbor(x, k);
    }
    throw std::logic_error("unknown constraint kind");
}

bool satisfies(ConstraintKind kind, const Permutation& s, int k) {
    return satisfies(kind, std::span<const int>(s.values()), k);
}

} // namespace rankmod
