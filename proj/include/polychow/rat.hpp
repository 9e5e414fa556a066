#ifndef POLYCHOW_RAT_HPP
#define POLYCHOW_RAT_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace polychow {

// Exact scalars.  mpq_class carries the reduced-fraction invariant
// (gcd(num, den) = 1, den > 0) as long as every value entering
// arithmetic is canonical, so construction goes through rat() below.
using Int = mpz_class;
using Rat = mpq_class;

using ZVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline Rat rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(long num, long den = 1) { return rat(Int(num), Int(den)); }

// Accepts "p", "p/q", and leading '-'; throws std::invalid_argument on junk.
Rat parse_rat(const std::string& text);

// Canonical rendering: "p" when den = 1, else "p/q".
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

bool is_integral(const Rat& r);

Int dot(const ZVec& a, const ZVec& b);
Rat dot(const QVec& a, const QVec& b);
Rat dot(const ZVec& a, const QVec& b);

QVec to_qvec(const ZVec& v);

// Least common multiple of denominators; 1 for the empty vector.
Int common_denominator(const QVec& v);

// v * (common denominator): the primitive integer direction is
// clear_denominators followed by linalg primitive().
ZVec clear_denominators(const QVec& v);

std::string to_string(const QVec& v);
std::string to_string(const ZVec& v);

}  // namespace polychow

#endif
