#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "quatunit/errors.hpp"

namespace quatunit {

using Int = mpz_class;
using Rat = mpq_class;

// Canonicalized rational from numerator/denominator.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat rat_from_string(const std::string& text);
std::string rat_to_string(const Rat& value);

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }
inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

Rat rat_pow(const Rat& base, unsigned long exp);
Int int_pow(const Int& base, unsigned long exp);

// floor(log2(q)) for q > 0, exact.
Int floor_log2(const Rat& q);

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int rat_floor(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }
inline Int rat_ceil(const Rat& q) {
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return c;
}

// 2^e as an exact rational; e may be negative but must be small enough to materialize.
Rat pow2_rat(const Int& e);

// Certified rational bounds on sqrt(q), q >= 0; bound width <= 2^-bits relative.
Rat rat_sqrt_lower(const Rat& q, unsigned bits);
Rat rat_sqrt_upper(const Rat& q, unsigned bits);
// Exact square root when q is a perfect square of a rational.
std::optional<Rat> rat_sqrt_exact(const Rat& q);

// Exact positive value mantissa * 2^exp2 with arbitrarily large dyadic exponent.
// Used for Baker lower bounds, which are far too small to materialize as p/q.
struct ScaledRat {
    Rat mantissa; // > 0
    Int exp2;

    ScaledRat() : mantissa(1), exp2(0) {}
    ScaledRat(Rat m, Int e) : mantissa(std::move(m)), exp2(std::move(e)) {
        if (mantissa <= 0) fail(ErrorKind::NonPositiveOperand, "ScaledRat mantissa must be positive");
    }
    static ScaledRat one() { return ScaledRat(Rat(1), Int(0)); }
    static ScaledRat from_rat(const Rat& q) { return ScaledRat(q, Int(0)); }

    ScaledRat mul(const ScaledRat& other) const {
        return ScaledRat(Rat(mantissa * other.mantissa), Int(exp2 + other.exp2));
    }
    ScaledRat mul_pow2(const Int& e) const { return ScaledRat(mantissa, Int(exp2 + e)); }

    // Exact floor(log2(value)).
    Int log2_floor() const { return exp2 + floor_log2(mantissa); }

    // Sign of (this - other); other may be any rational (including <= 0).
    int compare_rat(const Rat& other) const;
    int compare(const ScaledRat& other) const;

    // Materialize as a plain rational; requires |exp2| small.
    Rat to_rat() const;
    bool materializable() const;

    std::string to_string() const;
    static ScaledRat parse(const std::string& text);
};

} // namespace quatunit
