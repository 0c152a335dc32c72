#include "quatunit/poly.hpp"

#include <algorithm>

namespace quatunit {

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> out(std::max(a.c.size(), b.c.size()), Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) out[i] += b.c[i];
    return IntPoly(std::move(out));
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> out(std::max(a.c.size(), b.c.size()), Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) out[i] -= b.c[i];
    return IntPoly(std::move(out));
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> out(a.c.size() + b.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            out[i + j] += a.c[i] * b.c[j];
        }
    }
    return IntPoly(std::move(out));
}

IntPoly poly_neg(const IntPoly& a) {
    std::vector<Int> out(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) out[i] = -a.c[i];
    return IntPoly(std::move(out));
}

IntPoly poly_derivative(const IntPoly& a) {
    if (a.c.size() <= 1) return IntPoly();
    std::vector<Int> out(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) out[i - 1] = a.c[i] * static_cast<long>(i);
    return IntPoly(std::move(out));
}

Int poly_content(const IntPoly& a) {
    Int g(0);
    for (const Int& v : a.c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly poly_primitive(const IntPoly& a) {
    if (a.is_zero()) return a;
    Int g = poly_content(a);
    if (a.lead() < 0) g = -g;
    std::vector<Int> out(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) out[i] = a.c[i] / g;
    return IntPoly(std::move(out));
}

Rat poly_eval(const IntPoly& a, const Rat& x) {
    Rat acc(0);
    for (std::size_t i = a.c.size(); i-- > 0;) {
        acc = acc * x + a.c[i];
    }
    return acc;
}

Int poly_eval_int(const IntPoly& a, const Int& x) {
    Int acc(0);
    for (std::size_t i = a.c.size(); i-- > 0;) {
        acc = acc * x + a.c[i];
    }
    return acc;
}

int poly_sign_at(const IntPoly& a, const Rat& x) {
    if (a.is_zero()) return 0;
    // sign(a(p/q)) = sign(sum c_i p^i q^(d-i)), q > 0
    const Int& p = x.get_num();
    const Int& q = x.get_den();
    Int acc(0);
    Int qpow(1);
    std::vector<Int> ppows(a.c.size());
    Int pp(1);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        ppows[i] = pp;
        pp *= p;
    }
    for (std::size_t i = a.c.size(); i-- > 0;) {
        acc += a.c[i] * ppows[i] * qpow;
        qpow *= q;
    }
    return sgn(acc);
}

IntPoly poly_compose_neg(const IntPoly& a) {
    std::vector<Int> out(a.c);
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
    return IntPoly(std::move(out));
}

IntPoly poly_compose_square(const IntPoly& a) {
    if (a.is_zero()) return a;
    std::vector<Int> out(2 * a.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) out[2 * i] = a.c[i];
    return IntPoly(std::move(out));
}

IntPoly poly_reverse(const IntPoly& a) {
    std::vector<Int> out(a.c.rbegin(), a.c.rend());
    return IntPoly(std::move(out));
}

namespace {

// q(b + a*y) as a polynomial in y, by Horner.
RatPoly poly_compose_linear(const IntPoly& q, const Rat& a, const Rat& b) {
    RatPoly acc;
    RatPoly lin(std::vector<Rat>{b, a});
    for (std::size_t i = q.c.size(); i-- > 0;) {
        acc = ratpoly_mul(acc, lin);
        if (acc.c.empty()) acc.c.resize(1, Rat(0));
        acc.c[0] += Rat(q.c[i]);
        acc.normalize();
    }
    return acc;
}

} // namespace

IntPoly poly_shift_rat(const IntPoly& a, const Rat& r) {
    // Annihilator of alpha + r from annihilator of alpha: p(x - r).
    return ratpoly_clear_denominators(poly_compose_linear(a, Rat(1), Rat(-r)));
}

IntPoly poly_scale_rat(const IntPoly& a, const Rat& r) {
    if (r == 0) fail(ErrorKind::ZeroOperand, "poly_scale_rat by zero");
    // Annihilator of r*alpha: sum a_i (x/r)^i, scaled by r^deg.
    int d = a.degree();
    std::vector<Rat> out(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        out[i] = Rat(a.c[i]) * rat_pow(r, static_cast<unsigned long>(d - static_cast<int>(i)));
    }
    return ratpoly_clear_denominators(RatPoly(std::move(out)));
}

Rat poly_root_bound(const IntPoly& a) {
    if (a.degree() < 1) return Rat(1);
    Rat maxabs(0);
    for (std::size_t i = 0; i + 1 < a.c.size(); ++i) {
        Rat v = rat_abs(make_rat(a.c[i], a.lead()));
        if (v > maxabs) maxabs = v;
    }
    return maxabs + 1;
}

RatPoly ratpoly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rat> out(a.c.size() + b.c.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            out[i + j] += a.c[i] * b.c[j];
        }
    }
    return RatPoly(std::move(out));
}

RatPoly ratpoly_sub(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> out(std::max(a.c.size(), b.c.size()), Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) out[i] -= b.c[i];
    return RatPoly(std::move(out));
}

RatPoly ratpoly_scale(const RatPoly& a, const Rat& s) {
    std::vector<Rat> out(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) out[i] = a.c[i] * s;
    return RatPoly(std::move(out));
}

RatPoly ratpoly_rem(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial remainder by zero");
    std::vector<Rat> r(a.c);
    int db = b.degree();
    while (static_cast<int>(r.size()) - 1 >= db) {
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (static_cast<int>(r.size()) - 1 < db) break;
        Rat q = r.back() / b.lead();
        std::size_t shift = r.size() - 1 - static_cast<std::size_t>(db);
        for (std::size_t i = 0; i < b.c.size(); ++i) {
            r[shift + i] -= q * b.c[i];
        }
        r.pop_back();
    }
    return RatPoly(std::move(r));
}

Rat ratpoly_eval(const RatPoly& a, const Rat& x) {
    Rat acc(0);
    for (std::size_t i = a.c.size(); i-- > 0;) acc = acc * x + a.c[i];
    return acc;
}

IntPoly ratpoly_clear_denominators(const RatPoly& a) {
    if (a.is_zero()) return IntPoly();
    Int l(1);
    for (const Rat& v : a.c) {
        Int d = v.get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<Int> out(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        Rat scaled = a.c[i] * Rat(l);
        out[i] = scaled.get_num();
    }
    return poly_primitive(IntPoly(std::move(out)));
}

Rat ratpoly_resultant(const RatPoly& a, const RatPoly& b) {
    // res(A, B) = (-1)^(dA*dB) lc(B)^(dA - dR) res(B, R), R = A mod B.
    if (a.is_zero() || b.is_zero()) return Rat(0);
    if (b.degree() == 0) return rat_pow(b.c[0], static_cast<unsigned long>(a.degree()));
    if (a.degree() == 0) return rat_pow(a.c[0], static_cast<unsigned long>(b.degree()));
    RatPoly r = ratpoly_rem(a, b);
    if (r.is_zero()) return Rat(0);
    int da = a.degree(), db = b.degree(), dr = r.degree();
    Rat factor = rat_pow(b.lead(), static_cast<unsigned long>(da - dr));
    if ((static_cast<long>(da) * db) % 2 != 0) factor = -factor;
    return factor * ratpoly_resultant(b, r);
}

namespace {

// gcd over Q via Euclid, returned as primitive integer polynomial.
IntPoly poly_gcd_primitive(const IntPoly& a, const IntPoly& b) {
    RatPoly x = RatPoly::from_int(a);
    RatPoly y = RatPoly::from_int(b);
    while (!y.is_zero()) {
        RatPoly r = ratpoly_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return IntPoly();
    return ratpoly_clear_denominators(x);
}

} // namespace

IntPoly poly_squarefree_part(const IntPoly& p) {
    IntPoly prim = poly_primitive(p);
    if (prim.degree() <= 1) return prim;
    IntPoly g = poly_gcd_primitive(prim, poly_derivative(prim));
    if (g.degree() == 0) return prim;
    // exact division prim / g over Q
    RatPoly num = RatPoly::from_int(prim);
    RatPoly den = RatPoly::from_int(g);
    std::vector<Rat> q(static_cast<std::size_t>(prim.degree() - g.degree()) + 1, Rat(0));
    std::vector<Rat> r(num.c);
    int dg = den.degree();
    while (static_cast<int>(r.size()) - 1 >= dg) {
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (static_cast<int>(r.size()) - 1 < dg) break;
        Rat coef = r.back() / den.lead();
        std::size_t shift = r.size() - 1 - static_cast<std::size_t>(dg);
        q[shift] = coef;
        for (std::size_t i = 0; i < den.c.size(); ++i) r[shift + i] -= coef * den.c[i];
        r.pop_back();
    }
    return ratpoly_clear_denominators(RatPoly(std::move(q)));
}

SturmChain::SturmChain(const IntPoly& squarefree) {
    chain_.push_back(poly_primitive(squarefree));
    if (squarefree.degree() >= 1) {
        chain_.push_back(poly_primitive(poly_derivative(squarefree)));
        while (chain_.back().degree() >= 1) {
            RatPoly r = ratpoly_rem(RatPoly::from_int(chain_[chain_.size() - 2]),
                                    RatPoly::from_int(chain_.back()));
            if (r.is_zero()) break;
            // Chain element is -r up to a positive scalar; clearing
            // denominators forces a positive lead, so restore the sign.
            IntPoly cleared = ratpoly_clear_denominators(r);
            chain_.push_back(r.lead() > 0 ? poly_neg(cleared) : cleared);
        }
    }
}

int SturmChain::variations_at(const Rat& x) const {
    int var = 0;
    int prev = 0;
    for (const IntPoly& p : chain_) {
        int s = poly_sign_at(p, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int SturmChain::count_roots(const Rat& a, const Rat& b) const {
    if (a > b) fail(ErrorKind::InvalidInput, "count_roots with reversed interval");
    return variations_at(a) - variations_at(b);
}

std::vector<RootInterval> isolate_real_roots(const IntPoly& squarefree) {
    std::vector<RootInterval> out;
    if (squarefree.degree() < 1) return out;
    if (squarefree.degree() == 1) {
        Rat r = make_rat(-squarefree.c[0], squarefree.c[1]);
        out.push_back({r, r});
        return out;
    }
    SturmChain chain(squarefree);
    // The Cauchy bound is strict, so +-bound bracket every root without
    // being roots themselves.
    Rat bound = poly_root_bound(squarefree);
    struct Seg {
        Rat lo, hi;
        int count;
    };
    std::vector<Seg> stack;
    int total = chain.count_roots(-bound, bound);
    if (total > 0) stack.push_back({-bound, bound, total});
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1) {
            out.push_back({s.lo, s.hi});
            continue;
        }
        Rat mid = (s.lo + s.hi) / 2;
        // Perturb mid if it happens to be a root (only possible for rational
        // roots of squarefree factors of degree > 1 composites; primitive
        // irreducible of degree >= 2 has no rational roots, but squarefree
        // input here may still have linear factors).
        while (poly_sign_at(squarefree, mid) == 0) {
            out.push_back({mid, mid});
            // Remove that root by splitting slightly around it.
            Rat eps = (s.hi - s.lo) / 1024;
            int left = chain.count_roots(s.lo, mid - eps);
            int right = chain.count_roots(mid + eps, s.hi);
            // Roots strictly inside (mid-eps, mid+eps) other than mid would be
            // missed; shrink eps until the window isolates mid alone and the
            // new segment endpoints are not roots themselves.
            while (left + right + 1 != s.count ||
                   poly_sign_at(squarefree, mid - eps) == 0 ||
                   poly_sign_at(squarefree, mid + eps) == 0) {
                eps /= 2;
                left = chain.count_roots(s.lo, mid - eps);
                right = chain.count_roots(mid + eps, s.hi);
            }
            if (left > 0) stack.push_back({s.lo, mid - eps, left});
            if (right > 0) stack.push_back({mid + eps, s.hi, right});
            goto next_seg;
        }
        {
            int left = chain.count_roots(s.lo, mid);
            int right = s.count - left;
            if (left > 0) stack.push_back({s.lo, mid, left});
            if (right > 0) stack.push_back({mid, s.hi, right});
        }
    next_seg:;
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) {
        return a.lo < b.lo;
    });
    // Adjacent intervals may share a (non-root) bisection endpoint; refine the
    // left one until the intervals are strictly disjoint.
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
        while (out[i].lo != out[i].hi && !(out[i].hi < out[i + 1].lo)) {
            refine_root_step(squarefree, out[i].lo, out[i].hi);
        }
    }
    return out;
}

void refine_root_step(const IntPoly& p, Rat& lo, Rat& hi) {
    if (lo == hi) return;
    Rat mid = (lo + hi) / 2;
    int sm = poly_sign_at(p, mid);
    if (sm == 0) {
        lo = mid;
        hi = mid;
        return;
    }
    int sl = poly_sign_at(p, lo);
    if (sl == 0) {
        // point interval invariant broken only for rational-root endpoints
        hi = lo;
        return;
    }
    if (sl != sm) {
        hi = mid;
    } else {
        lo = mid;
    }
}

namespace {

// Lagrange interpolation through integer nodes with rational values.
RatPoly interpolate(const std::vector<Int>& xs, const std::vector<Rat>& ys) {
    RatPoly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        RatPoly term(std::vector<Rat>{Rat(1)});
        Rat denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            term = ratpoly_mul(term, RatPoly(std::vector<Rat>{Rat(-xs[j]), Rat(1)}));
            denom *= Rat(xs[i] - xs[j]);
        }
        acc = ratpoly_sub(acc, ratpoly_scale(term, -(ys[i] / denom)));
    }
    return acc;
}

} // namespace

IntPoly annihilator_sum(const IntPoly& p, const IntPoly& q) {
    // res_y(p(y), q(x - y)) as polynomial in x, degree <= deg p * deg q.
    int n = p.degree() * q.degree();
    if (n <= 0) fail(ErrorKind::InvalidInput, "annihilator_sum needs positive degrees");
    std::vector<Int> xs;
    std::vector<Rat> ys;
    RatPoly py = RatPoly::from_int(p);
    Int node(0);
    while (static_cast<int>(xs.size()) <= n) {
        // q(x0 - y): compose with linear (-1)*y + x0
        RatPoly qshift = poly_compose_linear(q, Rat(-1), Rat(node));
        // Degenerate samples cannot occur: deg_y q(x0 - y) == deg q always.
        Rat r = ratpoly_resultant(py, qshift);
        xs.push_back(node);
        ys.push_back(r);
        node = node <= 0 ? Int(-node + 1) : Int(-node);
    }
    return ratpoly_clear_denominators(interpolate(xs, ys));
}

IntPoly annihilator_product(const IntPoly& p, const IntPoly& q) {
    // res_y(p(y), y^m q(x/y)) with m = deg q; requires q(0) != 0 so the
    // y-degree of the second argument stays m for every sample x0 != 0.
    if (q.coeff(0) == 0) fail(ErrorKind::InvalidInput, "annihilator_product needs q(0) != 0");
    int n = p.degree() * q.degree();
    if (n <= 0) fail(ErrorKind::InvalidInput, "annihilator_product needs positive degrees");
    std::vector<Int> xs;
    std::vector<Rat> ys;
    RatPoly py = RatPoly::from_int(p);
    int m = q.degree();
    Int node(1);
    while (static_cast<int>(xs.size()) <= n) {
        // y^m q(x0/y) = sum q_i x0^i y^(m-i)
        std::vector<Rat> coeffs(static_cast<std::size_t>(m) + 1, Rat(0));
        Rat xpow(1);
        for (int i = 0; i <= m; ++i) {
            coeffs[static_cast<std::size_t>(m - i)] = Rat(q.coeff(static_cast<std::size_t>(i))) * xpow;
            xpow *= Rat(node);
        }
        RatPoly qy(std::move(coeffs));
        Rat r = ratpoly_resultant(py, qy);
        xs.push_back(node);
        ys.push_back(r);
        node = node <= 0 ? Int(-node + 1) : Int(-node);
    }
    return ratpoly_clear_denominators(interpolate(xs, ys));
}

std::vector<IntPoly> factor_roots(const IntPoly& p) {
    IntPoly sf = poly_squarefree_part(p);
    if (sf.degree() < 1) return {};
    return factor_squarefree(sf);
}

} // namespace quatunit
