#include "quatunit/baker.hpp"

namespace quatunit {

namespace {

constexpr unsigned kBitsCap = 1u << 16;

Int factorial(unsigned long n) {
    Int out(1);
    for (unsigned long i = 2; i <= n; ++i) out *= static_cast<unsigned long>(i);
    return out;
}

} // namespace

LogGenerator log_generator_positive_real(const AlgebraicReal& alpha, unsigned bits) {
    if (alpha.sign() <= 0) {
        fail(ErrorKind::NonPositiveOperand, "real log generator needs a positive value");
    }
    LogGenerator g;
    g.alpha = AlgebraicComplex(alpha, AlgebraicReal(0L));
    if (alpha.is_one()) {
        g.lambda_re = RInterval::point(Rat(0));
    } else {
        g.lambda_re = log_interval(alpha, bits);
    }
    g.lambda_im = RInterval::point(Rat(0));
    g.degree_bound = static_cast<unsigned long>(alpha.degree());
    return g;
}

LogGenerator log_generator_unit(const AlgebraicComplex& v, unsigned bits) {
    if (v.is_zero()) fail(ErrorKind::ZeroOperand, "unit log generator needs a nonzero value");
    if (ac_norm_sq(v) != AlgebraicReal(1L)) {
        fail(ErrorKind::PreconditionFailed, "unit log generator needs |v| = 1");
    }
    LogGenerator g;
    g.alpha = v;
    g.lambda_re = RInterval::point(Rat(0));
    g.lambda_im = arg_interval(v, bits);
    g.degree_bound = static_cast<unsigned long>(ac_minpoly(v).degree());
    return g;
}

LogGenerator log_generator_minus_one(unsigned bits) {
    LogGenerator g;
    g.alpha = AlgebraicComplex(AlgebraicReal(Rat(-1)), AlgebraicReal(0L));
    g.lambda_re = RInterval::point(Rat(0));
    g.lambda_im = pi_interval(bits);
    g.degree_bound = 1;
    return g;
}

BakerCertificate explicit_constants(const std::vector<LogGenerator>& gens,
                                    unsigned long degree_hint, unsigned bits) {
    if (gens.empty()) fail(ErrorKind::InvalidInput, "certificate needs at least one generator");
    BakerCertificate cert;
    cert.generators = gens;
    cert.r = gens.size();
    Int d(1);
    if (degree_hint > 0) {
        d = static_cast<unsigned long>(degree_hint);
    } else {
        for (const LogGenerator& g : gens) {
            if (g.degree_bound == 0) fail(ErrorKind::InvalidInput, "generator degree bound 0");
            d *= static_cast<unsigned long>(g.degree_bound);
        }
    }
    if (!d.fits_ulong_p()) fail(ErrorKind::ResourceLimit, "degree bound too large");
    cert.degree = d.get_ui();

    unsigned long r = cert.r;
    Int A = 18 * factorial(r + 1) * int_pow(Int(r), r + 1) * int_pow(32 * d, r + 2);
    Rat ln_2rd_up = log_interval_rat(Rat(2 * Int(r) * d), 64).hi;
    Rat C = Rat(A) * ln_2rd_up;
    for (const LogGenerator& g : gens) {
        if (g.alpha.is_zero()) fail(ErrorKind::ZeroOperand, "certificate generator alpha is zero");
        RInterval h = weil_height_complex(g.alpha);
        // |lambda| <= |re| + |im| suffices for an upper bound.
        Rat lam_abs_up = g.lambda_re.abs_upper() + g.lambda_im.abs_upper();
        Rat hp = rat_max(h.hi, rat_max(lam_abs_up / Rat(d), Rat(1) / Rat(d)));
        C *= hp;
    }
    cert.C = C;
    // k = 2^-E <= e^-C with E = ceil(C / ln 2 lower).
    Rat ln2_lo = log_interval_rat(Rat(2), std::max(bits, 96u)).lo;
    Int E = rat_ceil(C / ln2_lo);
    if (E < 0) E = 0;
    cert.k = ScaledRat(Rat(1), Int(-E));
    return cert;
}

ScaledRat lower_bound(const BakerCertificate& cert, const Int& H) {
    if (H < 1) fail(ErrorKind::InvalidInput, "lower_bound needs H >= 1");
    if (H == 1) return cert.k;
    // Exact materialization for small integral exponents.
    if (cert.C.get_den() == 1 && cert.C.get_num().fits_ulong_p()) {
        unsigned long c = cert.C.get_num().get_ui();
        unsigned long hbits = mpz_sizeinbase(H.get_mpz_t(), 2);
        if (c == 0) return cert.k;
        if (c * hbits <= 4096) {
            Int hc = int_pow(H, c);
            return ScaledRat(Rat(cert.k.mantissa / Rat(hc)), cert.k.exp2);
        }
    }
    // Certified dyadic floor: k * 2^-ceil(C * log2(H)).
    RInterval lnH = log_interval_rat(Rat(H), 96);
    Rat ln2_lo = log_interval_rat(Rat(2), 96).lo;
    Rat log2H_up = lnH.hi / ln2_lo;
    Int E2 = rat_ceil(cert.C * log2H_up);
    if (E2 < 0) E2 = 0;
    return cert.k.mul_pow2(Int(-E2));
}

namespace {

// Certified three-way test of C*ln(H) + ln(scale) - ln(k) < rate*H.
// Returns 1 when certified true, -1 certified false, 0 indeterminate.
int cap_predicate(const BakerCertificate& cert, const RInterval& rate,
                  const RInterval& scale, const Int& H, unsigned bits) {
    RInterval lnH = H == 1 ? RInterval::point(Rat(0)) : log_interval_rat(Rat(H), bits);
    RInterval lnScale(log_interval_rat(scale.lo, bits).lo, log_interval_rat(scale.hi, bits).hi);
    // -ln k = -ln(mantissa) - exp2 * ln 2
    unsigned long ebits = mpz_sizeinbase(cert.k.exp2.get_mpz_t(), 2);
    RInterval ln2 = log_interval_rat(Rat(2), bits + static_cast<unsigned>(ebits) + 4);
    RInterval neg_ln_k = iv_scale(ln2, Rat(-cert.k.exp2));
    if (cert.k.mantissa != 1) {
        RInterval lnm = log_interval_rat(cert.k.mantissa, bits);
        neg_ln_k = iv_sub(neg_ln_k, lnm);
    }
    Rat lhs_up = cert.C * lnH.hi + lnScale.hi + neg_ln_k.hi;
    Rat lhs_lo = cert.C * lnH.lo + lnScale.lo + neg_ln_k.lo;
    Rat rhs_lo = rate.lo * Rat(H);
    Rat rhs_up = rate.hi * Rat(H);
    if (lhs_up < rhs_lo) return 1;
    if (lhs_lo > rhs_up) return -1;
    return 0;
}

bool cap_holds(const BakerCertificate& cert, const RInterval& rate, const RInterval& scale,
               const Int& H, unsigned bits) {
    for (unsigned b = bits; b <= kBitsCap; b *= 2) {
        int s = cap_predicate(cert, rate, scale, H, b);
        if (s == 1) return true;
        if (s == -1) return false;
    }
    // Wide caller intervals can straddle the comparison at any precision;
    // treating that as "not certified" keeps the returned cap sound (the
    // search settles on the first certifiably true height).
    return false;
}

} // namespace

Int solve_height_cap(const BakerCertificate& cert, const RInterval& rate,
                     const RInterval& scale, unsigned bits) {
    if (rate.lo <= 0) fail(ErrorKind::NonPositiveOperand, "decay rate must be positive");
    if (scale.lo <= 0) fail(ErrorKind::NonPositiveOperand, "decay scale must be positive");
    Int h_min = rat_floor(cert.C / rate.lo) + 1;
    if (h_min < 1) h_min = 1;
    if (cap_holds(cert, rate, scale, h_min, bits)) return h_min;
    // Exponential march then binary search on the monotone region.
    Int lo = h_min; // certified false
    Int hi = h_min * 2;
    int guard = 0;
    while (!cap_holds(cert, rate, scale, hi, bits)) {
        lo = hi;
        hi *= 2;
        if (++guard > 512) fail(ErrorKind::PrecisionFailure, "height cap search diverged");
    }
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (cap_holds(cert, rate, scale, mid, bits)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

} // namespace quatunit
