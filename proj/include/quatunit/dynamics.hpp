#pragma once

#include "quatunit/solver.hpp"

namespace quatunit {

// Short Weierstrass curve y^2 = x^3 + a4 x + a6 over F_p, p > 3 prime,
// with nonzero discriminant.
struct PrimeCurve {
    Int p, a4, a6;
    PrimeCurve(const Int& prime, const Int& c4, const Int& c6);
};

struct CurvePoint {
    bool infinity = true;
    Int x, y;

    static CurvePoint at_infinity() { return CurvePoint{}; }
    bool operator==(const CurvePoint& o) const {
        if (infinity || o.infinity) return infinity == o.infinity;
        return x == o.x && y == o.y;
    }
};

// Validated affine point; coordinates are reduced mod p.
CurvePoint curve_point(const PrimeCurve& c, const Int& x, const Int& y);

CurvePoint point_add(const PrimeCurve& c, const CurvePoint& p, const CurvePoint& q);
CurvePoint point_neg(const PrimeCurve& c, const CurvePoint& p);
CurvePoint scalar_mul(const PrimeCurve& c, const Int& m, const CurvePoint& p);

// Smallest y with y^2 = x^3 + a4 x + a6, if x lifts to the curve.
std::optional<CurvePoint> lift_x(const PrimeCurve& c, const Int& x);
// First point with abscissa >= start_x.
CurvePoint find_point(const PrimeCurve& c, const Int& start_x);

// Affine self-map g(P) = [m]P + Q of the curve group.
struct AffineDynamic {
    Int m;
    CurvePoint q;
};

CurvePoint apply_map(const PrimeCurve& c, const AffineDynamic& g, const CurvePoint& p);
CurvePoint iterate_map(const PrimeCurve& c, const AffineDynamic& g, const CurvePoint& p,
                       unsigned long n);

// With Q = [m-1]R the iterates satisfy g^n(P) = [m^n]P + [m^n - 1]R;
// checks the closed form for all n <= n_max.
bool verify_translation_identity(const PrimeCurve& c, const AffineDynamic& g,
                                 const CurvePoint& p, const CurvePoint& r,
                                 unsigned long n_max);

// All (i, j) with g1^i(p1) == g2^j(p2), i, j <= n_max, sorted.
std::vector<std::pair<unsigned long, unsigned long>> orbit_intersection(
    const PrimeCurve& c, const AffineDynamic& g1, const CurvePoint& p1,
    const AffineDynamic& g2, const CurvePoint& p2, unsigned long n_max);

// Imaginary quadratic order Z[w] with w^2 = s w + t, from a discriminant
// D < 0, D = 0 or 1 mod 4: (s, t) = (0, D/4) or (1, (D-1)/4).
struct QuadOrder {
    Int D, s, t;
    explicit QuadOrder(const Int& disc);
};

struct QuadElem {
    Int x, y; // x + y w
    bool operator==(const QuadElem& o) const { return x == o.x && y == o.y; }
    bool is_zero() const { return x == 0 && y == 0; }
};

QuadElem qo_add(const QuadElem& a, const QuadElem& b);
QuadElem qo_sub(const QuadElem& a, const QuadElem& b);
QuadElem qo_mul(const QuadOrder& o, const QuadElem& a, const QuadElem& b);
QuadElem qo_conj(const QuadOrder& o, const QuadElem& a);
Int qo_norm(const QuadOrder& o, const QuadElem& a);
QuadElem qo_pow(const QuadOrder& o, const QuadElem& a, unsigned long n);

// Multiplication maps z -> f z and z -> h z on the order, with a marked
// coincidence f^m0 = h^n0 candidate pair.
struct EndoInstance {
    QuadOrder order;
    QuadElem f, h;
    unsigned long m0 = 1, n0 = 1;
};

struct EndoData {
    QuadElem u; // (conj(h)^n0 - 1)(f^m0 - h^n0)
    Int d;      // N(h^n0 - 1)
};

EndoData endo_data(const EndoInstance& inst);

// Exact test of h^n (u + d) - f^m d = u; orbits of the two maps meet at
// parameters (m, n) exactly when this holds.
bool endo_equation_check(const EndoInstance& inst, unsigned long m, unsigned long n);

struct DynamicsReduction {
    bool common_iterate = false; // u = 0: the marked pair already coincides
    std::optional<UnitEquationInstance> instance;
};

// Embeds the order into the quaternions and rewrites the coincidence
// condition as a f a' + b g b' = 1 over the cyclic semigroups <h> and <f>.
DynamicsReduction dynamics_to_unit_equation(const EndoInstance& inst);

} // namespace quatunit
