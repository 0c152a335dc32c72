#pragma once

#include <functional>

#include "quatunit/interval.hpp"
#include "quatunit/poly.hpp"

namespace quatunit {

// Exact real algebraic number: irreducible primitive minimal polynomial with
// positive leading coefficient plus an isolating interval. Rational values
// are canonically degree 1 with a point interval. Immutable; refinement
// returns fresh intervals, so values are safe to share across threads.
class AlgebraicReal {
public:
    AlgebraicReal() { set_rational(Rat(0)); }
    AlgebraicReal(const Rat& v) { set_rational(v); }
    AlgebraicReal(long v) { set_rational(Rat(v)); }
    AlgebraicReal(const Int& v) { set_rational(Rat(v)); }

    // Validates: selects the unique root of p inside [lo, hi]; p need not be
    // irreducible. Throws InvalidInput when the interval does not isolate.
    static AlgebraicReal from_minpoly(const IntPoly& p, const Rat& lo, const Rat& hi);

    const IntPoly& minpoly() const { return minpoly_; }
    RInterval interval() const { return RInterval(lo_, hi_); }
    int degree() const { return minpoly_.degree(); }
    bool is_rational() const { return degree() == 1; }
    Rat rational_value() const {
        if (!is_rational()) fail(ErrorKind::PreconditionFailed, "value is irrational");
        return lo_;
    }

    int sign() const;
    bool is_zero() const { return is_rational() && lo_ == 0; }
    bool is_one() const { return is_rational() && lo_ == 1; }

    // Interval of width <= eps containing the value (point for rationals).
    RInterval refine(const Rat& eps) const;
    // Interval with |value| * 2^-bits relative width; value must be nonzero.
    RInterval refine_relative(unsigned bits) const;
    // Sign-definite interval (value must be nonzero).
    RInterval refine_nonzero() const;

    static int compare(const AlgebraicReal& a, const AlgebraicReal& b);

    friend AlgebraicReal operator+(const AlgebraicReal& a, const AlgebraicReal& b);
    friend AlgebraicReal operator-(const AlgebraicReal& a, const AlgebraicReal& b);
    friend AlgebraicReal operator*(const AlgebraicReal& a, const AlgebraicReal& b);
    friend AlgebraicReal operator/(const AlgebraicReal& a, const AlgebraicReal& b);
    friend AlgebraicReal algebraic_from_annihilator(
        const IntPoly& annihilator, const std::function<RInterval(int)>& enclosure);
    AlgebraicReal operator-() const;

    bool operator==(const AlgebraicReal& o) const { return compare(*this, o) == 0; }
    bool operator!=(const AlgebraicReal& o) const { return compare(*this, o) != 0; }
    bool operator<(const AlgebraicReal& o) const { return compare(*this, o) < 0; }
    bool operator<=(const AlgebraicReal& o) const { return compare(*this, o) <= 0; }
    bool operator>(const AlgebraicReal& o) const { return compare(*this, o) > 0; }
    bool operator>=(const AlgebraicReal& o) const { return compare(*this, o) >= 0; }

private:
    void set_rational(const Rat& v);
    static AlgebraicReal make(IntPoly minpoly, Rat lo, Rat hi);

    IntPoly minpoly_;
    Rat lo_, hi_;
};

AlgebraicReal ar_sqrt(const AlgebraicReal& x);
AlgebraicReal ar_abs(const AlgebraicReal& x);
AlgebraicReal ar_inv(const AlgebraicReal& x);

// Builds the value from an integer polynomial known to vanish at the target,
// with a shrinking enclosure callback (level k -> interval, strictly
// narrowing). Used by arithmetic and by the complex minimal polynomial.
AlgebraicReal algebraic_from_annihilator(const IntPoly& annihilator,
                                         const std::function<RInterval(int)>& enclosure);

struct AlgebraicComplex {
    AlgebraicReal re, im;

    AlgebraicComplex() = default;
    AlgebraicComplex(AlgebraicReal r, AlgebraicReal i)
        : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }
    bool operator==(const AlgebraicComplex& o) const { return re == o.re && im == o.im; }
};

AlgebraicComplex ac_add(const AlgebraicComplex& a, const AlgebraicComplex& b);
AlgebraicComplex ac_sub(const AlgebraicComplex& a, const AlgebraicComplex& b);
AlgebraicComplex ac_mul(const AlgebraicComplex& a, const AlgebraicComplex& b);
AlgebraicComplex ac_conj(const AlgebraicComplex& a);
AlgebraicReal ac_norm_sq(const AlgebraicComplex& a);

// Minimal polynomial over Q of the complex value re + im*i (irreducible,
// primitive, positive lead).
IntPoly ac_minpoly(const AlgebraicComplex& z);

} // namespace quatunit
