#pragma once

#include <gmpxx.h>
#include <string>
#include <string_view>

namespace dloc {

// Exact rational number. mpq_class keeps gcd(num,den)=1 and den>0 as long as
// values are built through arithmetic or the helpers below.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// "5", "-5", "2/3". Throws std::invalid_argument on malformed input.
Rational rational_from_string(std::string_view text);

// Integer numerator if den==1, otherwise "num/den".
std::string to_string(const Rational& r);

// Always "num/den", e.g. "0/1"; used by the JSON reports.
std::string to_fraction_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

} // namespace dloc
