#ifndef QWALK_RATIONAL_HPP
#define QWALK_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace qwalk {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

inline Rational rational_of(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/* Decimal rendering; integers drop the "/1". */
inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace qwalk

#endif
