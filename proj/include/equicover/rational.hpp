#pragma once

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace equicover {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

inline Int to_int(const Rat& q) {
    if (!is_integral(q)) throw std::runtime_error("expected integral rational, got " + q.get_str());
    return q.get_num();
}

inline long to_long(const Int& z) {
    if (!z.fits_slong_p()) throw std::runtime_error("integer too large for long: " + z.get_str());
    return z.get_si();
}

// canonical text form: "p" or "p/q"
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline int sign_of(const Rat& q) { return sgn(q); }

} // namespace equicover
