#include "quatunit/quaternion.hpp"

namespace quatunit {

Quaternion q_add(const Quaternion& x, const Quaternion& y) {
    return Quaternion(x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d);
}

Quaternion q_sub(const Quaternion& x, const Quaternion& y) {
    return Quaternion(x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d);
}

Quaternion q_neg(const Quaternion& x) {
    return Quaternion(-x.a, -x.b, -x.c, -x.d);
}

Quaternion q_mul(const Quaternion& x, const Quaternion& y) {
    return Quaternion(
        x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
        x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
        x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
        x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a);
}

Quaternion q_conj(const Quaternion& x) {
    return Quaternion(x.a, -x.b, -x.c, -x.d);
}

AlgebraicReal q_norm(const Quaternion& x) {
    return x.a * x.a + x.b * x.b + x.c * x.c + x.d * x.d;
}

AlgebraicReal q_trace(const Quaternion& x) {
    return x.a + x.a;
}

AlgebraicReal q_abs(const Quaternion& x) {
    return ar_sqrt(q_norm(x));
}

Quaternion q_inv(const Quaternion& x) {
    if (x.is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero quaternion");
    AlgebraicReal n = q_norm(x);
    Quaternion c = q_conj(x);
    return Quaternion(c.a / n, c.b / n, c.c / n, c.d / n);
}

Quaternion q_pow(const Quaternion& x, unsigned long n) {
    Quaternion acc = Quaternion::one();
    Quaternion base = x;
    while (n) {
        if (n & 1) acc = q_mul(acc, base);
        n >>= 1;
        if (n) base = q_mul(base, base);
    }
    return acc;
}

bool q_equal(const Quaternion& x, const Quaternion& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

int q_compare(const Quaternion& x, const Quaternion& y) {
    int c = AlgebraicReal::compare(x.a, y.a);
    if (c != 0) return c;
    c = AlgebraicReal::compare(x.b, y.b);
    if (c != 0) return c;
    c = AlgebraicReal::compare(x.c, y.c);
    if (c != 0) return c;
    return AlgebraicReal::compare(x.d, y.d);
}

bool q_commute(const Quaternion& x, const Quaternion& y) {
    return q_equal(q_mul(x, y), q_mul(y, x));
}

bool quadratic_relation_check(const Quaternion& x) {
    Quaternion sq = q_mul(x, x);
    AlgebraicReal t = q_trace(x);
    Quaternion tx(t * x.a, t * x.b, t * x.c, t * x.d);
    Quaternion lhs = q_add(q_sub(sq, tx), Quaternion::real(q_norm(x)));
    return lhs.is_zero();
}

AlgebraicReal q_dot(const Quaternion& x, const Quaternion& y) {
    return x.a * y.a + x.b * y.b + x.c * y.c + x.d * y.d;
}

} // namespace quatunit
