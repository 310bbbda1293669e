#pragma once

#include <gmpxx.h>

#include <string>

namespace k3moduli {

// All arithmetic in this library is exact: arbitrary-precision integers and
// canonical rationals. No floating point anywhere in the core.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int to_integer(const Rat& q) { return q.get_num(); }

// Canonical "p/q" form; plain "p" when the denominator is 1.
inline std::string to_string(const Rat& q) { return q.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

// Parses "p" or "p/q" in base 10. Throws std::invalid_argument on anything
// else (including zero denominators).
Rat parse_rational(const std::string& text);

}  // namespace k3moduli
