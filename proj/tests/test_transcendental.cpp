#include "quatunit/transcendental.hpp"

#include <doctest.h>

using namespace quatunit;

namespace {

IntPoly make_poly(std::vector<long> coeffs) {
    std::vector<Int> c;
    for (long v : coeffs) c.emplace_back(v);
    return IntPoly(std::move(c));
}

// ln((1+x)/(1-x)) = 2 sum x^(2k+1)/(2k+1); monotone tail bounded by a
// geometric series. Returns certified rational bounds.
RInterval log_series(const Rat& x, int terms) {
    Rat sum(0);
    Rat pw = x;
    for (int k = 0; k < terms; ++k) {
        sum += pw / Rat(2 * k + 1);
        pw *= x * x;
    }
    // Tail <= pw/(2t+1) * 1/(1 - x^2).
    Rat tail = pw / (Rat(2 * terms + 1) * (Rat(1) - x * x));
    return RInterval{2 * sum, 2 * (sum + tail)};
}

RInterval ln2_oracle() { return log_series(Rat(1, 3), 40); }
RInterval ln3_oracle() { return log_series(Rat(1, 2), 60); }

// atan via alternating series: consecutive partial sums bracket the value.
RInterval atan_oracle(const Rat& x, int terms) {
    Rat lo(0), hi(0), sum(0);
    Rat pw = x;
    for (int k = 0; k < terms; ++k) {
        Rat term = pw / Rat(2 * k + 1);
        sum += (k % 2 == 0) ? term : -term;
        if (k == terms - 2) lo = sum;
        if (k == terms - 1) hi = sum;
        pw *= x * x;
    }
    if (lo > hi) std::swap(lo, hi);
    return RInterval{lo, hi};
}

RInterval pi_oracle() {
    RInterval a5 = atan_oracle(Rat(1, 5), 30);
    RInterval a239 = atan_oracle(Rat(1, 239), 12);
    return RInterval{16 * a5.lo - 4 * a239.hi, 16 * a5.hi - 4 * a239.lo};
}

RInterval exp1_oracle() {
    Rat sum(1);
    Rat term(1);
    for (int k = 1; k <= 25; ++k) {
        term /= k;
        sum += term;
    }
    return RInterval{sum, sum + 2 * term / 26};
}

bool intersects(const RInterval& a, const RInterval& b) {
    return !(a.hi < b.lo || b.hi < a.lo);
}

Rat pow2_neg(unsigned bits) { return make_rat(Int(1), int_pow(Int(2), bits)); }

} // namespace

TEST_CASE("natural log of rationals against series oracle") {
    RInterval got = log_interval_rat(Rat(2), 80);
    CHECK(got.hi - got.lo <= pow2_neg(80));
    CHECK(intersects(got, ln2_oracle()));

    RInterval got3 = log_interval_rat(Rat(3), 80);
    CHECK(intersects(got3, ln3_oracle()));

    RInterval one = log_interval_rat(Rat(1), 80);
    CHECK(one.lo == 0);
    CHECK(one.hi == 0);

    // ln(1/2) = -ln(2).
    RInterval inv = log_interval_rat(Rat(1, 2), 80);
    RInterval l2 = ln2_oracle();
    CHECK(intersects(inv, RInterval{-l2.hi, -l2.lo}));

    CHECK_THROWS_AS(log_interval_rat(Rat(0), 16), Error);
    CHECK_THROWS_AS(log_interval_rat(Rat(-3), 16), Error);
}

TEST_CASE("pi enclosure against Machin oracle") {
    RInterval got = pi_interval(96);
    CHECK(got.hi - got.lo <= pow2_neg(96));
    CHECK(intersects(got, pi_oracle()));
}

TEST_CASE("exponential enclosure against series oracle") {
    RInterval got = exp_interval_rat(Rat(1), 64);
    CHECK(got.hi - got.lo <= pow2_neg(60)); // e > 1 scales the width slightly
    CHECK(intersects(got, exp1_oracle()));

    RInterval zero = exp_interval_rat(Rat(0), 64);
    CHECK(zero.lo <= 1);
    CHECK(1 <= zero.hi);

    // exp(ln 7) recovers 7.
    RInterval l7 = log_interval_rat(Rat(7), 80);
    CHECK(exp_interval_rat(l7.lo, 80).lo <= 7);
    CHECK(7 <= exp_interval_rat(l7.hi, 80).hi);
}

TEST_CASE("log of algebraic numbers") {
    AlgebraicReal r2 = AlgebraicReal::from_minpoly(make_poly({-2, 0, 1}), Rat(1), Rat(2));
    // ln(sqrt 2) = ln2 / 2.
    RInterval got = log_interval(r2, 80);
    RInterval l2 = ln2_oracle();
    CHECK(intersects(got, RInterval{l2.lo / 2, l2.hi / 2}));
    CHECK_THROWS_AS(log_interval(AlgebraicReal(0L), 32), Error);
}

TEST_CASE("argument of complex algebraic numbers") {
    RInterval pi = pi_oracle();
    AlgebraicComplex i{AlgebraicReal(0L), AlgebraicReal(1L)};
    RInterval a = arg_interval(i, 72);
    CHECK(a.hi - a.lo <= pow2_neg(72));
    CHECK(intersects(a, RInterval{pi.lo / 2, pi.hi / 2}));

    AlgebraicComplex upd{AlgebraicReal(1L), AlgebraicReal(1L)};
    CHECK(intersects(arg_interval(upd, 72), RInterval{pi.lo / 4, pi.hi / 4}));

    // Third quadrant maps into [0, 2 pi): arg(-1 - i) = 5 pi / 4.
    AlgebraicComplex low{AlgebraicReal(-1L), AlgebraicReal(-1L)};
    CHECK(intersects(arg_interval(low, 72), RInterval{5 * pi.lo / 4, 5 * pi.hi / 4}));

    AlgebraicComplex pos{AlgebraicReal(3L), AlgebraicReal(0L)};
    RInterval zero = arg_interval(pos, 72);
    CHECK(zero.lo == 0);
    CHECK(zero.hi == 0);

    AlgebraicComplex neg{AlgebraicReal(-3L), AlgebraicReal(0L)};
    CHECK(intersects(arg_interval(neg, 72), pi));

    CHECK_THROWS_AS(arg_interval(AlgebraicComplex{}, 32), Error);
}

TEST_CASE("height of rationals and small algebraics") {
    RInterval l2 = ln2_oracle();
    // h(2) = h(1/2) = ln 2.
    CHECK(intersects(weil_height(AlgebraicReal(2L)), l2));
    CHECK(intersects(weil_height(AlgebraicReal(Rat(1, 2))), l2));
    // h(1) = 0.
    RInterval one = weil_height(AlgebraicReal(1L));
    CHECK(one.lo == 0);
    CHECK(one.hi == 0);
    // h(sqrt 2) = ln(2)/2: Mahler measure of x^2 - 2 is 2.
    AlgebraicReal r2 = AlgebraicReal::from_minpoly(make_poly({-2, 0, 1}), Rat(1), Rat(2));
    RInterval h2 = weil_height(r2);
    CHECK(h2.lo <= l2.hi / 2);
    CHECK(l2.lo / 2 <= h2.hi);
    CHECK(h2.hi - h2.lo <= Rat(1, 100));
    // h(golden) = ln(phi)/2 with ln(phi) in (0.4812, 0.4813).
    AlgebraicReal phi = AlgebraicReal::from_minpoly(make_poly({-1, -1, 1}), Rat(1), Rat(2));
    RInterval hp = weil_height(phi);
    CHECK(hp.hi >= Rat(2406, 10000));
    CHECK(hp.lo <= Rat(2407, 10000));
    CHECK(hp.lo >= 0);
}

TEST_CASE("height of roots of unity vanishes") {
    // x^4 + 1: all roots on the unit circle.
    RInterval h = weil_height_poly(make_poly({1, 0, 0, 0, 1}));
    CHECK(h.lo >= 0);
    CHECK(h.hi <= Rat(1, 1000));
    // Complex eighth root of unity through the full pipeline.
    AlgebraicReal r2 = AlgebraicReal::from_minpoly(make_poly({-2, 0, 1}), Rat(1), Rat(2));
    AlgebraicReal h2 = ar_inv(r2);
    RInterval hz = weil_height_complex(AlgebraicComplex{h2, h2});
    CHECK(hz.lo >= 0);
    CHECK(hz.hi <= Rat(1, 1000));
}

TEST_CASE("precision escalation is capped") {
    CHECK_THROWS_AS(log_interval_rat(Rat(2), 1u << 17), Error);
    try {
        log_interval_rat(Rat(2), 1u << 17);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ResourceLimit);
    }
}
