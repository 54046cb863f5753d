#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace lashlab {

// All arithmetic in the library is exact; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace lashlab
