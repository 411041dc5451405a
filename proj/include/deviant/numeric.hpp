#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace deviant {

// Exact arithmetic throughout: series coefficients and deviation counts stay
// in Z, linear algebra over Q (or a prime field, see exactla.hpp).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// binomial(a, k) for arbitrary-precision a >= 0 and small k.
// Computed incrementally; every intermediate division is exact.
inline Int binomial(const Int& a, long k) {
    if (k < 0) return 0;
    Int r = 1;
    for (long m = 1; m <= k; ++m) {
        r *= a - (m - 1);
        r /= m;
    }
    return r;
}

inline Int binomial(long a, long k) { return binomial(Int(a), k); }

inline std::int64_t to_int64(const Int& v) {
    if (v < std::numeric_limits<std::int64_t>::min() ||
        v > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("value does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

}  // namespace deviant
