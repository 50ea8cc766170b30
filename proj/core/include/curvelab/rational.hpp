#pragma once

#include <gmpxx.h>

#include <string>

namespace curvelab {

// Exact arithmetic carriers for everything except the numerical-verification
// device in dynamic_multiplicity. No floating point feeds any exact result.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Reduced "p" or "p/q" form.
inline std::string rat_str(const Rat& q) { return q.get_str(); }
inline std::string int_str(const Int& z) { return z.get_str(); }

inline Int binomial(unsigned long n, unsigned long k) {
    Int z;
    mpz_bin_uiui(z.get_mpz_t(), n, k);
    return z;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat acc = 1;
    Rat b = base;
    unsigned long n = e;
    while (n > 0) {
        if (n & 1UL) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

} // namespace curvelab
