#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ftc {

// Exact rational scalar used everywhere; no floating point in any computation.
using Rat = mpq_class;

// Parses "num/den" or "num" (base 10). Throws on malformed input or zero
// denominator; the result is always canonicalized.
inline Rat parse_rat(const std::string& s) {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational: '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

// Canonical text form: "5", "10/3", "-1/2". Round-trips exactly.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Smallest integer >= a/b for positive rationals.
inline long rat_ceil(const Rat& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    if (!r.fits_slong_p()) throw std::overflow_error("rat_ceil overflow");
    return r.get_si();
}

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a > b ? a : b; }

// Raised when an operation refuses to run because an instance exceeds the
// configured exact-enumeration budget (callers may fall back to column
// generation). Maps to exit code 3 in the CLI.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ftc
