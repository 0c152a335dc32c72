#include "quatunit/dynamics.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace quatunit {

namespace {

Int mod_reduce(const Int& v, const Int& p) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    return r;
}

Int mod_inv(const Int& v, const Int& p) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t()) == 0)
        fail(ErrorKind::DivisionByZero, "element not invertible mod p");
    return r;
}

Int mod_pow(const Int& base, const Int& e, const Int& p) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return r;
}

Int rhs_at(const PrimeCurve& c, const Int& x) {
    return mod_reduce(x * x * x + c.a4 * x + c.a6, c.p);
}

// Tonelli-Shanks; p odd prime, a a quadratic residue.
std::optional<Int> sqrt_mod(const Int& a0, const Int& p) {
    Int a = mod_reduce(a0, p);
    if (a == 0) return Int(0);
    Int legendre = mod_pow(a, (p - 1) / 2, p);
    if (legendre != 1) return std::nullopt;
    if (mod_reduce(p, Int(4)) == 3) return mod_pow(a, (p + 1) / 4, p);
    Int q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    Int z(2);
    while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;
    Int m(static_cast<unsigned long>(s));
    Int cc = mod_pow(z, q, p);
    Int t = mod_pow(a, q, p);
    Int r = mod_pow(a, (q + 1) / 2, p);
    while (t != 1) {
        Int t2 = t;
        Int i(0);
        while (t2 != 1) {
            t2 = mod_reduce(t2 * t2, p);
            ++i;
            if (i >= m) fail(ErrorKind::Internal, "square root search failed");
        }
        Int b = cc;
        for (Int j = m - i - 1; j > 0; --j) b = mod_reduce(b * b, p);
        m = i;
        cc = mod_reduce(b * b, p);
        t = mod_reduce(t * cc, p);
        r = mod_reduce(r * b, p);
    }
    return r;
}

struct PointKey {
    bool infinity;
    Int x, y;
    bool operator<(const PointKey& o) const {
        return std::tie(infinity, x, y) < std::tie(o.infinity, o.x, o.y);
    }
};

PointKey key_of(const CurvePoint& p) {
    if (p.infinity) return PointKey{true, Int(0), Int(0)};
    return PointKey{false, p.x, p.y};
}

} // namespace

PrimeCurve::PrimeCurve(const Int& prime, const Int& c4, const Int& c6)
    : p(prime), a4(mod_reduce(c4, prime)), a6(mod_reduce(c6, prime)) {
    if (p <= 3) fail(ErrorKind::InvalidInput, "characteristic must exceed 3");
    if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        fail(ErrorKind::InvalidInput, "modulus is not prime");
    Int disc = mod_reduce(Int(4) * a4 * a4 * a4 + Int(27) * a6 * a6, p);
    if (disc == 0) fail(ErrorKind::InvalidInput, "curve is singular");
}

CurvePoint curve_point(const PrimeCurve& c, const Int& x, const Int& y) {
    CurvePoint pt;
    pt.infinity = false;
    pt.x = mod_reduce(x, c.p);
    pt.y = mod_reduce(y, c.p);
    if (mod_reduce(pt.y * pt.y, c.p) != rhs_at(c, pt.x))
        fail(ErrorKind::OffCurve, "point does not satisfy the curve equation");
    return pt;
}

CurvePoint point_neg(const PrimeCurve& c, const CurvePoint& p) {
    if (p.infinity) return p;
    CurvePoint r = p;
    r.y = mod_reduce(-p.y, c.p);
    return r;
}

CurvePoint point_add(const PrimeCurve& c, const CurvePoint& p, const CurvePoint& q) {
    if (p.infinity) return q;
    if (q.infinity) return p;
    if (p.x == q.x && mod_reduce(p.y + q.y, c.p) == 0) return CurvePoint::at_infinity();
    Int lambda;
    if (p.x == q.x) {
        lambda = mod_reduce((Int(3) * p.x * p.x + c.a4) * mod_inv(Int(2) * p.y, c.p), c.p);
    } else {
        lambda = mod_reduce((q.y - p.y) * mod_inv(mod_reduce(q.x - p.x, c.p), c.p), c.p);
    }
    CurvePoint r;
    r.infinity = false;
    r.x = mod_reduce(lambda * lambda - p.x - q.x, c.p);
    r.y = mod_reduce(lambda * (p.x - r.x) - p.y, c.p);
    return r;
}

CurvePoint scalar_mul(const PrimeCurve& c, const Int& m, const CurvePoint& p) {
    Int n = m;
    CurvePoint base = p;
    if (n < 0) {
        n = -n;
        base = point_neg(c, base);
    }
    CurvePoint acc = CurvePoint::at_infinity();
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) acc = point_add(c, acc, base);
        base = point_add(c, base, base);
        n /= 2;
    }
    return acc;
}

std::optional<CurvePoint> lift_x(const PrimeCurve& c, const Int& x) {
    Int xr = mod_reduce(x, c.p);
    auto y = sqrt_mod(rhs_at(c, xr), c.p);
    if (!y) return std::nullopt;
    Int other = mod_reduce(-*y, c.p);
    CurvePoint pt;
    pt.infinity = false;
    pt.x = xr;
    pt.y = *y < other ? *y : other;
    return pt;
}

CurvePoint find_point(const PrimeCurve& c, const Int& start_x) {
    Int x = mod_reduce(start_x, c.p);
    for (Int tries = 0; tries < c.p; ++tries) {
        if (auto pt = lift_x(c, x)) return *pt;
        x = mod_reduce(x + 1, c.p);
    }
    fail(ErrorKind::Internal, "no affine point found");
}

CurvePoint apply_map(const PrimeCurve& c, const AffineDynamic& g, const CurvePoint& p) {
    return point_add(c, scalar_mul(c, g.m, p), g.q);
}

CurvePoint iterate_map(const PrimeCurve& c, const AffineDynamic& g, const CurvePoint& p,
                       unsigned long n) {
    CurvePoint r = p;
    for (unsigned long i = 0; i < n; ++i) r = apply_map(c, g, r);
    return r;
}

bool verify_translation_identity(const PrimeCurve& c, const AffineDynamic& g,
                                 const CurvePoint& p, const CurvePoint& r,
                                 unsigned long n_max) {
    if (!(scalar_mul(c, g.m - 1, r) == g.q))
        fail(ErrorKind::PreconditionFailed, "translation point must satisfy Q = [m-1]R");
    CurvePoint orbit = p;
    Int mn(1);
    for (unsigned long n = 0; n <= n_max; ++n) {
        CurvePoint closed = point_add(c, scalar_mul(c, mn, p), scalar_mul(c, mn - 1, r));
        if (!(orbit == closed)) return false;
        orbit = apply_map(c, g, orbit);
        mn *= g.m;
    }
    return true;
}

std::vector<std::pair<unsigned long, unsigned long>> orbit_intersection(
    const PrimeCurve& c, const AffineDynamic& g1, const CurvePoint& p1,
    const AffineDynamic& g2, const CurvePoint& p2, unsigned long n_max) {
    std::map<PointKey, std::vector<unsigned long>> seen;
    CurvePoint a = p1;
    for (unsigned long i = 0; i <= n_max; ++i) {
        seen[key_of(a)].push_back(i);
        a = apply_map(c, g1, a);
    }
    std::vector<std::pair<unsigned long, unsigned long>> out;
    CurvePoint b = p2;
    for (unsigned long j = 0; j <= n_max; ++j) {
        auto it = seen.find(key_of(b));
        if (it != seen.end())
            for (unsigned long i : it->second) out.emplace_back(i, j);
        b = apply_map(c, g2, b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

QuadOrder::QuadOrder(const Int& disc) : D(disc) {
    if (D >= 0) fail(ErrorKind::InvalidInput, "discriminant must be negative");
    Int residue = mod_reduce(D, Int(4));
    if (residue == 0) {
        s = 0;
        t = D / 4;
    } else if (residue == 1) {
        s = 1;
        t = (D - 1) / 4;
    } else {
        fail(ErrorKind::InvalidInput, "discriminant must be 0 or 1 mod 4");
    }
}

QuadElem qo_add(const QuadElem& a, const QuadElem& b) { return QuadElem{a.x + b.x, a.y + b.y}; }

QuadElem qo_sub(const QuadElem& a, const QuadElem& b) { return QuadElem{a.x - b.x, a.y - b.y}; }

QuadElem qo_mul(const QuadOrder& o, const QuadElem& a, const QuadElem& b) {
    // (x1 + y1 w)(x2 + y2 w) with w^2 = s w + t.
    return QuadElem{a.x * b.x + a.y * b.y * o.t,
                    a.x * b.y + a.y * b.x + a.y * b.y * o.s};
}

QuadElem qo_conj(const QuadOrder& o, const QuadElem& a) {
    // conj(w) = s - w.
    return QuadElem{a.x + a.y * o.s, -a.y};
}

Int qo_norm(const QuadOrder& o, const QuadElem& a) {
    return a.x * a.x + o.s * a.x * a.y - o.t * a.y * a.y;
}

QuadElem qo_pow(const QuadOrder& o, const QuadElem& a, unsigned long n) {
    QuadElem acc{1, 0};
    QuadElem base = a;
    while (n > 0) {
        if (n & 1) acc = qo_mul(o, acc, base);
        base = qo_mul(o, base, base);
        n >>= 1;
    }
    return acc;
}

EndoData endo_data(const EndoInstance& inst) {
    if (inst.m0 < 1 || inst.n0 < 1)
        fail(ErrorKind::InvalidInput, "iteration exponents must be positive");
    const QuadOrder& o = inst.order;
    QuadElem one{1, 0};
    QuadElem hn = qo_pow(o, inst.h, inst.n0);
    QuadElem fm = qo_pow(o, inst.f, inst.m0);
    EndoData out;
    out.u = qo_mul(o, qo_sub(qo_conj(o, hn), one), qo_sub(fm, hn));
    out.d = qo_norm(o, qo_sub(hn, one));
    return out;
}

bool endo_equation_check(const EndoInstance& inst, unsigned long m, unsigned long n) {
    const QuadOrder& o = inst.order;
    if (qo_norm(o, inst.f) <= 1 || qo_norm(o, inst.h) <= 1)
        fail(ErrorKind::PreconditionFailed, "multiplier norms must exceed 1");
    if (m < 1 || n < 1) fail(ErrorKind::InvalidInput, "exponents must be positive");
    EndoData data = endo_data(inst);
    QuadElem dd{data.d, 0};
    QuadElem lhs = qo_sub(qo_mul(o, qo_pow(o, inst.h, n), qo_add(data.u, dd)),
                          qo_mul(o, qo_pow(o, inst.f, m), dd));
    return lhs == data.u;
}

namespace {

Quaternion embed_quad(const QuadOrder& o, const QuadElem& e, const AlgebraicReal& root) {
    // x + y w -> (x + y s / 2) + (y sqrt(|D|) / 2) i.
    AlgebraicReal re(Rat(e.x) + Rat(e.y) * Rat(o.s) / 2);
    AlgebraicReal im = AlgebraicReal(Rat(e.y) / 2) * root;
    return Quaternion{re, im, AlgebraicReal(0L), AlgebraicReal(0L)};
}

} // namespace

DynamicsReduction dynamics_to_unit_equation(const EndoInstance& inst) {
    const QuadOrder& o = inst.order;
    if (qo_norm(o, inst.f) <= 1 || qo_norm(o, inst.h) <= 1)
        fail(ErrorKind::PreconditionFailed, "multiplier norms must exceed 1");
    EndoData data = endo_data(inst);
    DynamicsReduction out;
    if (data.u.is_zero()) {
        out.common_iterate = true;
        return out;
    }
    AlgebraicReal root = ar_sqrt(AlgebraicReal(Rat(-o.D)));
    Quaternion u = embed_quad(o, data.u, root);
    Quaternion u_inv = q_inv(u);
    QuadElem dd{data.d, 0};

    UnitEquationInstance inst2;
    inst2.a = Quaternion::one();
    inst2.a_prime = q_mul(embed_quad(o, qo_add(data.u, dd), root), u_inv);
    inst2.b = Quaternion::one();
    inst2.b_prime = q_mul(q_neg(embed_quad(o, dd, root)), u_inv);
    inst2.gamma1.generators = {embed_quad(o, inst.h, root)};
    inst2.gamma1.labels = {"h"};
    inst2.gamma2.generators = {embed_quad(o, inst.f, root)};
    inst2.gamma2.labels = {"f"};
    out.instance = std::move(inst2);
    return out;
}

} // namespace quatunit
