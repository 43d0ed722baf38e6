#pragma once

// Exact rational scalars. All arithmetic in the library is exact; floating
// point appears nowhere.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mes {

using Rat = mpq_class;
using Int = mpz_class;

// binomial(n, k) with the usual convention: 0 when k < 0 or k > n.
inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

inline Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// Canonical "p/q" (or "p" when q == 1) rendering.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Parses "p", "-p", or "p/q". Throws std::invalid_argument on malformed input.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational literal: '" + s + "'");
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace mes
