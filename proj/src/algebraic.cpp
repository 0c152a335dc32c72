#include "quatunit/algebraic.hpp"

#include <algorithm>

namespace quatunit {

namespace {

constexpr int kMaxSelectionRounds = 4096;

Rat eps_at(int k) { return pow2_rat(Int(-(k + 4))); }

} // namespace

void AlgebraicReal::set_rational(const Rat& v) {
    minpoly_ = IntPoly(std::vector<Int>{Int(-v.get_num()), Int(v.get_den())});
    lo_ = v;
    hi_ = v;
}

AlgebraicReal AlgebraicReal::make(IntPoly minpoly, Rat lo, Rat hi) {
    AlgebraicReal out;
    if (minpoly.degree() == 1) {
        out.set_rational(make_rat(-minpoly.c[0], minpoly.c[1]));
        return out;
    }
    out.minpoly_ = std::move(minpoly);
    out.lo_ = std::move(lo);
    out.hi_ = std::move(hi);
    return out;
}

AlgebraicReal AlgebraicReal::from_minpoly(const IntPoly& p, const Rat& lo, const Rat& hi) {
    if (p.degree() < 1) fail(ErrorKind::InvalidInput, "minimal polynomial must be nonconstant");
    if (lo > hi) fail(ErrorKind::InvalidInput, "interval with lo > hi");
    std::vector<IntPoly> factors = factor_roots(p);
    const IntPoly* chosen = nullptr;
    Rat root_lo, root_hi;
    int total = 0;
    for (const IntPoly& f : factors) {
        if (f.degree() == 1) {
            Rat r = make_rat(-f.c[0], f.c[1]);
            if (lo <= r && r <= hi) {
                ++total;
                chosen = &f;
                root_lo = r;
                root_hi = r;
            }
            continue;
        }
        // Irreducible of degree >= 2 has no rational roots, so the closed
        // interval count equals the half-open Sturm count.
        SturmChain chain(f);
        int count = lo == hi ? 0 : chain.count_roots(lo, hi);
        if (count > 0) {
            total += count;
            if (count == 1 && chosen == nullptr) {
                for (const RootInterval& K : isolate_real_roots(f)) {
                    Rat m1 = rat_max(K.lo, lo);
                    Rat m2 = rat_min(K.hi, hi);
                    if (m1 > m2) continue;
                    if (m1 == m2) continue;
                    if (chain.count_roots(m1, m2) == 1) {
                        chosen = &f;
                        root_lo = m1;
                        root_hi = m2;
                        break;
                    }
                }
            }
        }
    }
    if (total != 1 || chosen == nullptr) {
        fail(ErrorKind::InvalidInput, "interval does not isolate exactly one root");
    }
    return make(*chosen, root_lo, root_hi);
}

int AlgebraicReal::sign() const {
    if (is_rational()) return sgn(lo_);
    Rat lo = lo_, hi = hi_;
    while (lo <= 0 && 0 <= hi) {
        refine_root_step(minpoly_, lo, hi);
    }
    return lo > 0 ? 1 : -1;
}

RInterval AlgebraicReal::refine(const Rat& eps) const {
    Rat lo = lo_, hi = hi_;
    while (hi - lo > eps) {
        refine_root_step(minpoly_, lo, hi);
    }
    return RInterval(lo, hi);
}

RInterval AlgebraicReal::refine_nonzero() const {
    if (is_zero()) fail(ErrorKind::ZeroOperand, "refine_nonzero on zero");
    Rat lo = lo_, hi = hi_;
    while (lo <= 0 && 0 <= hi) {
        refine_root_step(minpoly_, lo, hi);
    }
    return RInterval(lo, hi);
}

RInterval AlgebraicReal::refine_relative(unsigned bits) const {
    RInterval base = refine_nonzero();
    if (base.is_point()) return base;
    Rat eps = base.abs_lower() * pow2_rat(Int(-static_cast<long>(bits)));
    Rat lo = base.lo, hi = base.hi;
    while (hi - lo > eps) {
        refine_root_step(minpoly_, lo, hi);
    }
    return RInterval(lo, hi);
}

int AlgebraicReal::compare(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (a.minpoly_ == b.minpoly_) {
        if (a.is_rational()) return cmp(a.lo_, b.lo_);
        Rat alo = a.lo_, ahi = a.hi_, blo = b.lo_, bhi = b.hi_;
        SturmChain chain(a.minpoly_);
        for (;;) {
            if (ahi < blo) return -1;
            if (bhi < alo) return 1;
            Rat hlo = rat_min(alo, blo), hhi = rat_max(ahi, bhi);
            if (chain.count_roots(hlo, hhi) == 1) return 0;
            refine_root_step(a.minpoly_, alo, ahi);
            refine_root_step(b.minpoly_, blo, bhi);
        }
    }
    // Distinct irreducible minimal polynomials: values are distinct.
    Rat alo = a.lo_, ahi = a.hi_, blo = b.lo_, bhi = b.hi_;
    for (;;) {
        if (ahi < blo) return -1;
        if (bhi < alo) return 1;
        if (!a.is_rational()) refine_root_step(a.minpoly_, alo, ahi);
        if (!b.is_rational()) refine_root_step(b.minpoly_, blo, bhi);
    }
}

AlgebraicReal algebraic_from_annihilator(const IntPoly& annihilator,
                                         const std::function<RInterval(int)>& enclosure) {
    std::vector<IntPoly> factors = factor_roots(annihilator);
    if (factors.empty()) fail(ErrorKind::Internal, "annihilator has no roots");
    struct Cand {
        const IntPoly* f;
        Rat lo, hi;
    };
    std::vector<Cand> cands;
    for (const IntPoly& f : factors) {
        if (f.degree() == 1) {
            Rat r = make_rat(-f.c[0], f.c[1]);
            cands.push_back({&f, r, r});
        } else {
            for (const RootInterval& K : isolate_real_roots(f)) {
                cands.push_back({&f, K.lo, K.hi});
            }
        }
    }
    for (int k = 0; k < kMaxSelectionRounds; ++k) {
        RInterval J = enclosure(k);
        int alive = -1;
        int alive_count = 0;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            Cand& c = cands[i];
            while (!(c.hi < J.lo || J.hi < c.lo) && c.hi - c.lo > J.width()) {
                refine_root_step(*c.f, c.lo, c.hi);
            }
            if (!(c.hi < J.lo || J.hi < c.lo)) {
                alive = static_cast<int>(i);
                ++alive_count;
            }
        }
        if (alive_count == 0) fail(ErrorKind::Internal, "enclosure excluded every root");
        if (alive_count == 1) {
            Cand& c = cands[static_cast<std::size_t>(alive)];
            if (c.f->degree() == 1) {
                return AlgebraicReal(make_rat(-c.f->c[0], c.f->c[1]));
            }
            Rat flo = rat_max(c.lo, J.lo);
            Rat fhi = rat_min(c.hi, J.hi);
            return AlgebraicReal::make(*c.f, std::move(flo), std::move(fhi));
        }
    }
    fail(ErrorKind::PrecisionFailure, "root selection did not converge");
}

AlgebraicReal operator+(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (a.is_rational() && b.is_rational()) {
        return AlgebraicReal(Rat(a.rational_value() + b.rational_value()));
    }
    if (a.is_rational() || b.is_rational()) {
        const AlgebraicReal& alg = a.is_rational() ? b : a;
        Rat r = a.is_rational() ? a.rational_value() : b.rational_value();
        if (r == 0) return alg;
        IntPoly shifted = poly_shift_rat(alg.minpoly_, r);
        return AlgebraicReal::make(std::move(shifted), Rat(alg.lo_ + r), Rat(alg.hi_ + r));
    }
    IntPoly ann = annihilator_sum(a.minpoly_, b.minpoly_);
    return algebraic_from_annihilator(ann, [&](int k) {
        Rat eps = eps_at(k);
        return iv_add(a.refine(eps), b.refine(eps));
    });
}

AlgebraicReal AlgebraicReal::operator-() const {
    if (is_rational()) return AlgebraicReal(Rat(-lo_));
    return make(poly_primitive(poly_compose_neg(minpoly_)), Rat(-hi_), Rat(-lo_));
}

AlgebraicReal operator-(const AlgebraicReal& a, const AlgebraicReal& b) {
    return a + (-b);
}

AlgebraicReal operator*(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (a.is_rational() && b.is_rational()) {
        return AlgebraicReal(Rat(a.rational_value() * b.rational_value()));
    }
    if (a.is_rational() || b.is_rational()) {
        const AlgebraicReal& alg = a.is_rational() ? b : a;
        Rat r = a.is_rational() ? a.rational_value() : b.rational_value();
        if (r == 0) return AlgebraicReal(Rat(0));
        IntPoly scaled = poly_scale_rat(alg.minpoly_, r);
        RInterval iv = iv_scale(RInterval(alg.lo_, alg.hi_), r);
        return AlgebraicReal::make(std::move(scaled), iv.lo, iv.hi);
    }
    // Both irrational: minimal polynomials have nonzero constant terms.
    IntPoly ann = annihilator_product(a.minpoly_, b.minpoly_);
    return algebraic_from_annihilator(ann, [&](int k) {
        Rat eps = eps_at(k);
        return iv_mul(a.refine(eps), b.refine(eps));
    });
}

AlgebraicReal ar_inv(const AlgebraicReal& x) {
    if (x.is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
    if (x.is_rational()) return AlgebraicReal(Rat(1 / x.rational_value()));
    IntPoly rev = poly_primitive(poly_reverse(x.minpoly()));
    RInterval nz = x.refine_nonzero();
    return AlgebraicReal::from_minpoly(rev, Rat(1 / nz.hi), Rat(1 / nz.lo));
}

AlgebraicReal operator/(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
    if (b.is_rational()) {
        return a * AlgebraicReal(Rat(1 / b.rational_value()));
    }
    return a * ar_inv(b);
}

AlgebraicReal ar_sqrt(const AlgebraicReal& x) {
    int s = x.sign();
    if (s < 0) fail(ErrorKind::NegativeOperand, "square root of negative value");
    if (s == 0) return AlgebraicReal(Rat(0));
    if (x.is_rational()) {
        Rat v = x.rational_value();
        if (auto exact = rat_sqrt_exact(v)) return AlgebraicReal(*exact);
        IntPoly ann(std::vector<Int>{Int(-v.get_num()), Int(0), Int(v.get_den())});
        return algebraic_from_annihilator(ann, [&](int k) {
            unsigned bits = static_cast<unsigned>(k + 8);
            return RInterval(rat_sqrt_lower(v, bits), rat_sqrt_upper(v, bits));
        });
    }
    IntPoly ann = poly_compose_square(x.minpoly());
    return algebraic_from_annihilator(ann, [&](int k) {
        RInterval iv = x.refine(eps_at(k));
        Rat lo = iv.lo < 0 ? Rat(0) : iv.lo;
        unsigned bits = static_cast<unsigned>(k + 8);
        return RInterval(rat_sqrt_lower(lo, bits), rat_sqrt_upper(iv.hi, bits));
    });
}

AlgebraicReal ar_abs(const AlgebraicReal& x) {
    return x.sign() < 0 ? -x : x;
}

AlgebraicComplex ac_add(const AlgebraicComplex& a, const AlgebraicComplex& b) {
    return AlgebraicComplex(a.re + b.re, a.im + b.im);
}

AlgebraicComplex ac_sub(const AlgebraicComplex& a, const AlgebraicComplex& b) {
    return AlgebraicComplex(a.re - b.re, a.im - b.im);
}

AlgebraicComplex ac_mul(const AlgebraicComplex& a, const AlgebraicComplex& b) {
    return AlgebraicComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

AlgebraicComplex ac_conj(const AlgebraicComplex& a) {
    return AlgebraicComplex(a.re, -a.im);
}

AlgebraicReal ac_norm_sq(const AlgebraicComplex& a) {
    return a.re * a.re + a.im * a.im;
}

namespace {

// Annihilator of i*y from the minimal polynomial q of real y:
// with q(y) = E(y^2) + y*O(y^2), the polynomial E(-T^2)^2 + T^2*O(-T^2)^2
// equals q(y)*q(-y) at T = i*y, hence vanishes there.
IntPoly imaginary_annihilator(const IntPoly& q) {
    std::vector<Int> even, odd;
    for (std::size_t i = 0; i < q.c.size(); ++i) {
        if (i % 2 == 0) even.push_back(q.c[i]);
        else odd.push_back(q.c[i]);
    }
    IntPoly E(std::move(even)), O(std::move(odd));
    auto compose_negsq = [](const IntPoly& p) {
        // p(-T^2)
        IntPoly sq = poly_compose_square(p);
        std::vector<Int> out(sq.c);
        for (std::size_t i = 2; i < out.size(); i += 4) out[i] = -out[i];
        // terms T^(4k+2) flip sign: (-T^2)^j = (-1)^j T^(2j)
        return IntPoly(std::move(out));
    };
    IntPoly a = compose_negsq(E);
    IntPoly b = compose_negsq(O);
    IntPoly t2(std::vector<Int>{Int(0), Int(0), Int(1)});
    return poly_add(poly_mul(a, a), poly_mul(t2, poly_mul(b, b)));
}

struct CInterval {
    RInterval re, im;
};

CInterval c_eval(const IntPoly& p, const RInterval& X, const RInterval& Y) {
    RInterval R = RInterval::point(Rat(0));
    RInterval I = RInterval::point(Rat(0));
    for (std::size_t i = p.c.size(); i-- > 0;) {
        RInterval nr = iv_sub(iv_mul(R, X), iv_mul(I, Y));
        RInterval ni = iv_add(iv_mul(R, Y), iv_mul(I, X));
        nr = iv_add(nr, RInterval::point(Rat(p.c[i])));
        R = nr;
        I = ni;
    }
    return {R, I};
}

} // namespace

IntPoly ac_minpoly(const AlgebraicComplex& z) {
    if (z.im.is_zero()) return z.re.minpoly();
    IntPoly iy_ann = imaginary_annihilator(z.im.minpoly());
    IntPoly ann = z.re.is_zero() ? iy_ann : annihilator_sum(z.re.minpoly(), iy_ann);
    std::vector<IntPoly> factors = factor_roots(ann);
    std::vector<bool> alive(factors.size(), true);
    for (int k = 0; k < kMaxSelectionRounds; ++k) {
        Rat eps = eps_at(k);
        RInterval X = z.re.refine(eps);
        RInterval Y = z.im.refine(eps);
        int count = 0;
        int last = -1;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (!alive[i]) continue;
            CInterval val = c_eval(factors[i], X, Y);
            if (val.re.contains_zero() && val.im.contains_zero()) {
                ++count;
                last = static_cast<int>(i);
            } else {
                alive[i] = false;
            }
        }
        if (count == 0) fail(ErrorKind::Internal, "complex minimal polynomial selection emptied");
        if (count == 1) return factors[static_cast<std::size_t>(last)];
    }
    fail(ErrorKind::PrecisionFailure, "complex minimal polynomial selection did not converge");
}

} // namespace quatunit
