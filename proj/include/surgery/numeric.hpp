#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace surgery {

// All arithmetic in this library is exact. Int is an arbitrary-precision
// integer, Rat an arbitrary-precision rational kept in lowest terms with
// the sign on the numerator (both guaranteed by boost::multiprecision).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Raised when input text cannot be parsed (plans, words, class expressions).
// The CLI maps it to exit code 2.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a mathematical check fails: balance violations, embedding Gram
// mismatches, failed plan assertions, derivation replay failures. The CLI
// maps it to exit code 1.
struct check_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string show(const Int& v) { return v.str(); }

// "num/den" in lowest terms; plain "num" when the denominator is 1.
inline std::string show(const Rat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

inline Int rat_floor(const Rat& v) {
    Int n = numerator(v), d = denominator(v);   // d > 0
    Int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

inline Int rat_ceil(const Rat& v) { return -rat_floor(-v); }

} // namespace surgery
