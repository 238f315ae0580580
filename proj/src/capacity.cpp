#include "rankmod/capacity.hpp"

#include <stdexcept>

namespace rankmod {
namespace {

void require_range(double v, double lo, double hi, const char* name) {
    if (!(v >= lo && v <= hi))
        throw std::invalid_argument(std::string(name) + " out of range");
}

} // namespace

double capacity_single_sym(double eps) {
    require_range(eps, 0.0, 1.0, "eps");
    return (1.0 + eps) / 2.0;
}

double capacity_single_asym(double eps) {
    require_range(eps, 0.0, 1.0, "eps");
    return 1.0;
}

double capacity_two_sym(double eps1, double eps2) {
    require_range(eps1, 0.0, 1.0, "eps1");
    require_range(eps2, 0.0, 2.0, "eps2");
    if (eps2 <= 1.0) return 0.5 + eps1 / 2.0;
    if (eps2 <= 1.0 + eps1) return 1.5 + eps1 / 2.0 - eps2;
    return 1.0 - eps2 / 2.0;
}

double capacity_two_asym(double eps1, double eps2) {
    require_range(eps1, 0.0, 1.0, "eps1");
    require_range(eps2, 0.0, 2.0, "eps2");
    if (eps2 <= 1.0) return 1.0;
    return 2.0 - eps2;
}

} // namespace rankmod
