#include "rankmod/numbers.hpp"

#include <cmath>
#include <stdexcept>

namespace rankmod {

BigCount factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigCount r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

double log2_big(const BigCount& v) {
    if (v <= 0) throw std::invalid_argument("log2_big: nonpositive argument");
    const unsigned bits = boost::multiprecision::msb(v); // floor(log2 v)
    if (bits < 63) return std::log2(static_cast<double>(v.convert_to<std::uint64_t>()));
    // Keep the top 62 bits as a mantissa so the shift-out never loses more
    // than one ulp of double precision.
    const unsigned shift = bits - 62;
    const BigCount top = v >> shift;
    return std::log2(static_cast<double>(top.convert_to<std::uint64_t>())) + static_cast<double>(shift);
}

double rational_to_double(const Rational& q) {
    return q.convert_to<double>();
}

} // namespace rankmod
