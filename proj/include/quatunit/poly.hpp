#pragma once

#include <vector>

#include "quatunit/rat.hpp"

namespace quatunit {

// Dense univariate polynomial over Z, coefficients constant term first.
// Normalized: no trailing zero coefficients (zero polynomial has empty c).
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { normalize(); }
    static IntPoly constant(const Int& v) { return IntPoly(std::vector<Int>{v}); }
    static IntPoly x() { return IntPoly(std::vector<Int>{Int(0), Int(1)}); }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Int& lead() const { return c.back(); }
    const Int& coeff(std::size_t i) const {
        static const Int zero(0);
        return i < c.size() ? c[i] : zero;
    }

    bool operator==(const IntPoly& o) const { return c == o.c; }
};

IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_neg(const IntPoly& a);
IntPoly poly_derivative(const IntPoly& a);

Int poly_content(const IntPoly& a);
// Content removed, leading coefficient forced positive.
IntPoly poly_primitive(const IntPoly& a);

Rat poly_eval(const IntPoly& a, const Rat& x);
Int poly_eval_int(const IntPoly& a, const Int& x);
// Sign of a(x), computed with integer arithmetic on the scaled numerator.
int poly_sign_at(const IntPoly& a, const Rat& x);

// p(-x)
IntPoly poly_compose_neg(const IntPoly& a);
// p(x^2) -> coefficients interleaved with zeros
IntPoly poly_compose_square(const IntPoly& a);
// x^deg * p(1/x)
IntPoly poly_reverse(const IntPoly& a);
// Primitive part of den^deg * p(x - (num/den)): annihilator of alpha + r.
IntPoly poly_shift_rat(const IntPoly& a, const Rat& r);
// Primitive part of annihilator of r*alpha given annihilator of alpha (r != 0).
IntPoly poly_scale_rat(const IntPoly& a, const Rat& r);

// Cauchy root bound: all real roots lie in [-B, B].
Rat poly_root_bound(const IntPoly& a);

// Polynomial over Q, constant term first, normalized.
struct RatPoly {
    std::vector<Rat> c;

    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { normalize(); }
    static RatPoly from_int(const IntPoly& p) {
        std::vector<Rat> v(p.c.begin(), p.c.end());
        return RatPoly(std::move(v));
    }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Rat& lead() const { return c.back(); }
};

RatPoly ratpoly_mul(const RatPoly& a, const RatPoly& b);
RatPoly ratpoly_sub(const RatPoly& a, const RatPoly& b);
RatPoly ratpoly_scale(const RatPoly& a, const Rat& s);
// Remainder of a by b (b nonzero).
RatPoly ratpoly_rem(const RatPoly& a, const RatPoly& b);
Rat ratpoly_eval(const RatPoly& a, const Rat& x);
// Primitive integer polynomial with the same roots.
IntPoly ratpoly_clear_denominators(const RatPoly& a);

// Resultant of two rational polynomials via the Euclidean remainder chain.
Rat ratpoly_resultant(const RatPoly& a, const RatPoly& b);

// Squarefree part p / gcd(p, p'), primitive with positive lead.
IntPoly poly_squarefree_part(const IntPoly& p);

// Sturm chain for a squarefree polynomial; isolating intervals for all real
// roots. Intervals are [lo, hi] with rational endpoints that are never roots
// when hi > lo; rational roots are returned as point intervals [r, r].
struct RootInterval {
    Rat lo, hi;
};

class SturmChain {
public:
    explicit SturmChain(const IntPoly& squarefree);
    // Number of roots in (a, b], requires a <= b.
    int count_roots(const Rat& a, const Rat& b) const;
    int variations_at(const Rat& x) const;

private:
    std::vector<IntPoly> chain_;
};

std::vector<RootInterval> isolate_real_roots(const IntPoly& squarefree);

// One bisection step preserving the isolation invariant; p squarefree with a
// single root in [lo, hi], endpoints non-roots (or lo == hi exactly).
void refine_root_step(const IntPoly& p, Rat& lo, Rat& hi);

// Annihilator constructions via resultants (evaluation + interpolation).
// ann_sum vanishes at every alpha + beta with p(alpha) = q(beta) = 0.
IntPoly annihilator_sum(const IntPoly& p, const IntPoly& q);
// ann_product vanishes at every alpha * beta; requires q(0) != 0.
IntPoly annihilator_product(const IntPoly& p, const IntPoly& q);

// Irreducible factors over Z of a squarefree primitive polynomial with
// positive leading coefficient. Factors are primitive with positive lead;
// multiplicity-free by assumption.
std::vector<IntPoly> factor_squarefree(const IntPoly& p);

// Full canonical factorization helper: squarefree part then factors.
std::vector<IntPoly> factor_roots(const IntPoly& p);

} // namespace quatunit
