#include "quatunit/transcendental.hpp"

#include <mpfr.h>

namespace quatunit {

namespace {

constexpr unsigned kPrecCap = 1u << 16;

class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

Rat to_rat(const Mpfr& v) {
    Rat out;
    mpfr_get_q(out.get_mpq_t(), v.get());
    return out;
}

Rat width_target(unsigned bits) { return pow2_rat(Int(-static_cast<long>(bits))); }

[[noreturn]] void precision_cap_hit() {
    fail(ErrorKind::ResourceLimit, "precision cap of 2^16 bits exceeded");
}

} // namespace

RInterval pi_interval(unsigned bits) {
    Rat target = width_target(bits);
    for (unsigned prec = std::max(64u, bits + 8); prec <= kPrecCap; prec *= 2) {
        Mpfr lo(prec), hi(prec);
        mpfr_const_pi(lo.get(), MPFR_RNDD);
        mpfr_const_pi(hi.get(), MPFR_RNDU);
        RInterval out(to_rat(lo), to_rat(hi));
        if (out.width() <= target) return out;
    }
    precision_cap_hit();
}

RInterval log_interval_rat(const Rat& x, unsigned bits) {
    if (x <= 0) fail(ErrorKind::NonPositiveOperand, "log of non-positive value");
    if (x == 1) return RInterval::point(Rat(0));
    Rat target = width_target(bits);
    for (unsigned prec = std::max(64u, bits + 8); prec <= kPrecCap; prec *= 2) {
        Mpfr xlo(prec), xhi(prec), lo(prec), hi(prec);
        mpfr_set_q(xlo.get(), x.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(xhi.get(), x.get_mpq_t(), MPFR_RNDU);
        mpfr_log(lo.get(), xlo.get(), MPFR_RNDD);
        mpfr_log(hi.get(), xhi.get(), MPFR_RNDU);
        RInterval out(to_rat(lo), to_rat(hi));
        if (out.width() <= target) return out;
    }
    precision_cap_hit();
}

RInterval exp_interval_rat(const Rat& x, unsigned bits) {
    Rat target = width_target(bits);
    for (unsigned prec = std::max(64u, bits + 8); prec <= kPrecCap; prec *= 2) {
        Mpfr xlo(prec), xhi(prec), lo(prec), hi(prec);
        mpfr_set_q(xlo.get(), x.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(xhi.get(), x.get_mpq_t(), MPFR_RNDU);
        mpfr_exp(lo.get(), xlo.get(), MPFR_RNDD);
        mpfr_exp(hi.get(), xhi.get(), MPFR_RNDU);
        RInterval out(to_rat(lo), to_rat(hi));
        if (out.width() <= target) return out;
    }
    precision_cap_hit();
}

RInterval log_interval(const AlgebraicReal& x, unsigned bits) {
    if (x.sign() <= 0) fail(ErrorKind::NonPositiveOperand, "log of non-positive value");
    if (x.is_rational()) return log_interval_rat(x.rational_value(), bits);
    Rat target = width_target(bits);
    for (unsigned prec = std::max(64u, bits + 8); prec <= kPrecCap; prec *= 2) {
        RInterval iv = x.refine_relative(prec);
        Mpfr xlo(prec), xhi(prec), lo(prec), hi(prec);
        mpfr_set_q(xlo.get(), iv.lo.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(xhi.get(), iv.hi.get_mpq_t(), MPFR_RNDU);
        mpfr_log(lo.get(), xlo.get(), MPFR_RNDD);
        mpfr_log(hi.get(), xhi.get(), MPFR_RNDU);
        RInterval out(to_rat(lo), to_rat(hi));
        if (out.width() <= target) return out;
    }
    precision_cap_hit();
}

RInterval arg_interval(const AlgebraicComplex& z, unsigned bits) {
    if (z.is_zero()) fail(ErrorKind::ZeroOperand, "argument of zero");
    int sy = z.im.sign();
    if (sy == 0) {
        if (z.re.sign() > 0) return RInterval::point(Rat(0));
        return pi_interval(bits);
    }
    Rat target = width_target(bits);
    for (unsigned prec = std::max(64u, bits + 8); prec <= kPrecCap; prec *= 2) {
        Rat eps = pow2_rat(Int(-static_cast<long>(prec / 2)));
        RInterval X = z.re.refine(eps);
        RInterval Y = z.im.is_zero() ? RInterval::point(Rat(0)) : z.im.refine(eps);
        // Keep the box inside an open half-plane so atan2 stays continuous.
        if (Y.contains_zero()) {
            RInterval nz = z.im.refine_nonzero();
            Y = RInterval(rat_max(Y.lo, nz.lo), rat_min(Y.hi, nz.hi));
        }
        // Monotone in each coordinate over a y-sign-definite box, so the
        // extrema sit at corners of the outward-rounded box.
        Mpfr xd(prec), xu(prec), yd(prec), yu(prec);
        mpfr_set_q(xd.get(), X.lo.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(xu.get(), X.hi.get_mpq_t(), MPFR_RNDU);
        mpfr_set_q(yd.get(), Y.lo.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(yu.get(), Y.hi.get_mpq_t(), MPFR_RNDU);
        Mpfr tmp(prec);
        bool first = true;
        Rat lo_acc, hi_acc;
        for (mpfr_srcptr yv : {yd.get(), yu.get()}) {
            for (mpfr_srcptr xv : {xd.get(), xu.get()}) {
                mpfr_atan2(tmp.get(), yv, xv, MPFR_RNDD);
                Rat a = to_rat(tmp);
                mpfr_atan2(tmp.get(), yv, xv, MPFR_RNDU);
                Rat b = to_rat(tmp);
                if (first) {
                    lo_acc = a;
                    hi_acc = b;
                    first = false;
                } else {
                    lo_acc = rat_min(lo_acc, a);
                    hi_acc = rat_max(hi_acc, b);
                }
            }
        }
        RInterval out(lo_acc, hi_acc);
        if (sy < 0) {
            RInterval two_pi = iv_scale(pi_interval(prec), Rat(2));
            out = iv_add(out, two_pi);
        }
        if (out.width() <= target) return out;
    }
    precision_cap_hit();
}

RInterval weil_height_poly(const IntPoly& minpoly) {
    int d = minpoly.degree();
    if (d < 1) fail(ErrorKind::InvalidInput, "height needs a nonconstant polynomial");
    if (d == 1) {
        Int num = abs(minpoly.c[0]);
        Int den = abs(minpoly.c[1]);
        Int m = num > den ? num : den;
        if (m == 1) return RInterval::point(Rat(0));
        return log_interval_rat(Rat(m), 24);
    }
    // Graeffe iterations: P_{k+1}(x^2) = +-P_k(x) P_k(-x); then Landau:
    // ln M(P_k) in [ln||P_k||_2 - d*ln2, ln||P_k||_2], and
    // ln M(P) = 2^-k ln M(P_k). Width after k steps: 2^-k * d * ln2.
    unsigned k = 10;
    {
        unsigned dd = static_cast<unsigned>(d);
        while ((1u << (k - 10)) < dd) ++k;
    }
    IntPoly cur = minpoly;
    for (unsigned i = 0; i < k; ++i) {
        IntPoly prod = poly_mul(cur, poly_compose_neg(cur));
        std::vector<Int> even(static_cast<std::size_t>(d) + 1);
        for (int j = 0; j <= d; ++j) even[static_cast<std::size_t>(j)] = prod.coeff(2 * static_cast<std::size_t>(j));
        cur = IntPoly(std::move(even));
    }
    Int S(0);
    for (const Int& c : cur.c) S += c * c;
    // ln S via MPFR on the big integer.
    unsigned prec = 96;
    Mpfr slo(prec), shi(prec), llo(prec), lhi(prec);
    mpfr_set_z(slo.get(), S.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(shi.get(), S.get_mpz_t(), MPFR_RNDU);
    mpfr_log(llo.get(), slo.get(), MPFR_RNDD);
    mpfr_log(lhi.get(), shi.get(), MPFR_RNDU);
    Rat lnS_lo = to_rat(llo);
    Rat lnS_hi = to_rat(lhi);
    RInterval ln2 = log_interval_rat(Rat(2), 48);
    Rat scale = pow2_rat(Int(-static_cast<long>(k)));
    Rat lo = (lnS_lo / 2 - Rat(d) * ln2.hi) * scale / Rat(d);
    Rat hi = (lnS_hi / 2) * scale / Rat(d);
    if (lo < 0) lo = 0;
    if (hi < lo) hi = lo;
    return RInterval(lo, hi);
}

RInterval weil_height(const AlgebraicReal& x) {
    return weil_height_poly(x.minpoly());
}

RInterval weil_height_complex(const AlgebraicComplex& z) {
    return weil_height_poly(ac_minpoly(z));
}

} // namespace quatunit
