// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0

#ifndef AOBS_RATIONAL_HPP
#define AOBS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "aobs/errors.hpp"

namespace aobs {

/// Exact arbitrary-precision rational. All probability arithmetic outside
/// the Monte Carlo module is carried out in this type; there are no
/// tolerances anywhere in the exact engine.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
/// Throws ParseError on malformed input or a zero denominator.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) {
        throw ParseError("empty rational literal", 0);
    }
    Rational value;
    if (value.set_str(text, 10) != 0) {
        throw ParseError("malformed rational literal '" + text + "'", 0);
    }
    if (value.get_den() == 0) {
        throw ParseError("zero denominator in rational literal '" + text + "'", 0);
    }
    value.canonicalize();
    return value;
}

/// n/d in canonical form. (The raw two-argument mpq constructor does not
/// reduce, and unreduced values break exact equality.)
inline Rational make_rational(long numer, long denom) {
    if (denom == 0) {
        throw InvalidParamsError("rational with zero denominator");
    }
    Rational value(numer, denom);
    value.canonicalize();
    return value;
}

inline std::string to_string(const Rational& value) {
    return value.get_str();
}

inline double to_double(const Rational& value) {
    return value.get_d();
}

/// Exact p^n for integer n >= 0.
inline Rational pow_rational(const Rational& base, unsigned long n) {
    Rational num, den;
    mpz_pow_ui(num.get_num_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(den.get_den_mpz_t(), base.get_den_mpz_t(), n);
    num.get_den() = den.get_den();
    num.canonicalize();
    return num;
}

/// Binomial coefficient as an exact rational.
inline Rational binomial_coefficient(unsigned long n, unsigned long k) {
    Rational out;
    mpz_bin_uiui(out.get_num_mpz_t(), n, k);
    return out;
}

} // namespace aobs

#endif
