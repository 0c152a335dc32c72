#pragma once

#include <vector>

#include "quatunit/rat.hpp"

namespace quatunit {

// Closed interval with exact rational endpoints.
struct RInterval {
    Rat lo, hi;

    RInterval() : lo(0), hi(0) {}
    RInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) fail(ErrorKind::InvalidInput, "interval with lo > hi");
    }
    static RInterval point(const Rat& v) { return RInterval(v, v); }

    Rat width() const { return hi - lo; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    bool is_point() const { return lo == hi; }
    Rat mid() const { return (lo + hi) / 2; }
    // max(|lo|, |hi|)
    Rat abs_upper() const { return rat_max(rat_abs(lo), rat_abs(hi)); }
    // min |x| over the interval (0 if it straddles zero)
    Rat abs_lower() const {
        if (contains_zero()) return Rat(0);
        return rat_min(rat_abs(lo), rat_abs(hi));
    }
};

inline RInterval iv_add(const RInterval& a, const RInterval& b) {
    return RInterval(a.lo + b.lo, a.hi + b.hi);
}

inline RInterval iv_sub(const RInterval& a, const RInterval& b) {
    return RInterval(a.lo - b.hi, a.hi - b.lo);
}

inline RInterval iv_neg(const RInterval& a) { return RInterval(-a.hi, -a.lo); }

inline RInterval iv_mul(const RInterval& a, const RInterval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rat lo = rat_min(rat_min(p1, p2), rat_min(p3, p4));
    Rat hi = rat_max(rat_max(p1, p2), rat_max(p3, p4));
    return RInterval(lo, hi);
}

inline RInterval iv_scale(const RInterval& a, const Rat& s) {
    if (s >= 0) return RInterval(a.lo * s, a.hi * s);
    return RInterval(a.hi * s, a.lo * s);
}

inline RInterval iv_inv(const RInterval& a) {
    if (a.contains_zero()) fail(ErrorKind::DivisionByZero, "interval inverse across zero");
    return RInterval(1 / a.hi, 1 / a.lo);
}

inline RInterval iv_div(const RInterval& a, const RInterval& b) {
    return iv_mul(a, iv_inv(b));
}

inline bool iv_disjoint(const RInterval& a, const RInterval& b) {
    return a.hi < b.lo || b.hi < a.lo;
}

inline RInterval iv_hull(const RInterval& a, const RInterval& b) {
    return RInterval(rat_min(a.lo, b.lo), rat_max(a.hi, b.hi));
}

// Envelope of the pointwise min/max of a set of values known by intervals.
inline RInterval iv_min_envelope(const std::vector<RInterval>& v) {
    RInterval out = v.at(0);
    for (std::size_t i = 1; i < v.size(); ++i) {
        out = RInterval(rat_min(out.lo, v[i].lo), rat_min(out.hi, v[i].hi));
    }
    return out;
}

inline RInterval iv_max_envelope(const std::vector<RInterval>& v) {
    RInterval out = v.at(0);
    for (std::size_t i = 1; i < v.size(); ++i) {
        out = RInterval(rat_max(out.lo, v[i].lo), rat_max(out.hi, v[i].hi));
    }
    return out;
}

} // namespace quatunit
