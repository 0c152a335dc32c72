#pragma once

#include "quatunit/algebraic.hpp"

namespace quatunit {

// Quaternion over the real algebraic numbers: a + b*i + c*j + d*k with
// i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j.
struct Quaternion {
    AlgebraicReal a, b, c, d;

    Quaternion() = default;
    Quaternion(AlgebraicReal ra, AlgebraicReal rb, AlgebraicReal rc, AlgebraicReal rd)
        : a(std::move(ra)), b(std::move(rb)), c(std::move(rc)), d(std::move(rd)) {}
    static Quaternion from_rat(const Rat& ra, const Rat& rb, const Rat& rc, const Rat& rd) {
        return Quaternion(AlgebraicReal(ra), AlgebraicReal(rb), AlgebraicReal(rc), AlgebraicReal(rd));
    }
    static Quaternion one() { return from_rat(Rat(1), Rat(0), Rat(0), Rat(0)); }
    static Quaternion zero() { return from_rat(Rat(0), Rat(0), Rat(0), Rat(0)); }
    static Quaternion real(AlgebraicReal v) {
        return Quaternion(std::move(v), AlgebraicReal(0L), AlgebraicReal(0L), AlgebraicReal(0L));
    }

    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
    bool is_real() const { return b.is_zero() && c.is_zero() && d.is_zero(); }
};

Quaternion q_add(const Quaternion& x, const Quaternion& y);
Quaternion q_sub(const Quaternion& x, const Quaternion& y);
Quaternion q_neg(const Quaternion& x);
Quaternion q_mul(const Quaternion& x, const Quaternion& y);
Quaternion q_conj(const Quaternion& x);
// Reduced norm a^2 + b^2 + c^2 + d^2 (nonnegative real).
AlgebraicReal q_norm(const Quaternion& x);
// Reduced trace 2a.
AlgebraicReal q_trace(const Quaternion& x);
// Euclidean absolute value sqrt(norm).
AlgebraicReal q_abs(const Quaternion& x);
// Inverse conj(x)/norm(x); x must be nonzero.
Quaternion q_inv(const Quaternion& x);
Quaternion q_pow(const Quaternion& x, unsigned long n);

bool q_equal(const Quaternion& x, const Quaternion& y);
// Lexicographic comparison of (a, b, c, d) by numeric order.
int q_compare(const Quaternion& x, const Quaternion& y);
bool q_commute(const Quaternion& x, const Quaternion& y);

// Every quaternion satisfies x^2 - trace(x)*x + norm(x) = 0.
bool quadratic_relation_check(const Quaternion& x);

// Inner product of the coordinate vectors.
AlgebraicReal q_dot(const Quaternion& x, const Quaternion& y);

} // namespace quatunit
