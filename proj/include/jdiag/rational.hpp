#pragma once

#include <gmpxx.h>

#include <string>

namespace jdiag {

// Exact rational scalar.  GMP keeps values canonical (reduced, positive
// denominator) through arithmetic; only raw string construction needs an
// explicit canonicalize.
using Rat = mpq_class;

inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

inline Rat rat_factorial(int n) {
    Rat r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace jdiag
