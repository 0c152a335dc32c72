#include <algorithm>
#include <cstdint>

#include "quatunit/poly.hpp"

// Irreducible factorization over Z for squarefree primitive input:
// monicize, Berlekamp mod a good prime, quadratic Hensel lifting to a
// Landau-Mignotte modulus, subset recombination, map back.

namespace quatunit {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

// Polynomials over F_p, constant term first, normalized.
using FpPoly = std::vector<u64>;

void fp_normalize(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int fp_deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    FpPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + mulmod(a[i], b[j], p)) % p;
        }
    }
    fp_normalize(out);
    return out;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, u64 p) {
    FpPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] % p;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + p - b[i] % p) % p;
    fp_normalize(out);
    return out;
}

// Remainder of a by b; b nonzero.
FpPoly fp_rem(FpPoly a, const FpPoly& b, u64 p) {
    int db = fp_deg(b);
    u64 inv_lead = invmod(b.back(), p);
    while (fp_deg(a) >= db) {
        u64 coef = mulmod(a.back(), inv_lead, p);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = (a[shift + i] + p - mulmod(coef, b[i], p)) % p;
        }
        fp_normalize(a);
    }
    return a;
}

FpPoly fp_divexact(FpPoly a, const FpPoly& b, u64 p) {
    int db = fp_deg(b);
    u64 inv_lead = invmod(b.back(), p);
    FpPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (fp_deg(a) >= db) {
        u64 coef = mulmod(a.back(), inv_lead, p);
        std::size_t shift = a.size() - b.size();
        q[shift] = coef;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = (a[shift + i] + p - mulmod(coef, b[i], p)) % p;
        }
        fp_normalize(a);
    }
    return q;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
    while (!b.empty()) {
        FpPoly r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        u64 inv = invmod(a.back(), p);
        for (u64& v : a) v = mulmod(v, inv, p);
    }
    return a;
}

FpPoly fp_monic(FpPoly a, u64 p) {
    if (a.empty()) return a;
    u64 inv = invmod(a.back(), p);
    for (u64& v : a) v = mulmod(v, inv, p);
    return a;
}

FpPoly fp_derivative(const FpPoly& a, u64 p) {
    if (a.size() <= 1) return {};
    FpPoly out(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = mulmod(a[i], i % p, p);
    fp_normalize(out);
    return out;
}

// Extended Euclid: s*a + t*b == gcd (monic); requires gcd == 1 here.
void fp_bezout(const FpPoly& a, const FpPoly& b, u64 p, FpPoly& s, FpPoly& t) {
    FpPoly r0 = a, r1 = b;
    FpPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        FpPoly q = fp_divexact(r0, r1, p);
        FpPoly r2 = fp_rem(r0, r1, p);
        FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
        FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (fp_deg(r0) != 0) fail(ErrorKind::Internal, "bezout of non-coprime polynomials");
    u64 inv = invmod(r0[0], p);
    for (u64& v : s0) v = mulmod(v, inv, p);
    for (u64& v : t0) v = mulmod(v, inv, p);
    s = std::move(s0);
    t = std::move(t0);
}

// Berlekamp factorization of a monic squarefree polynomial over F_p.
std::vector<FpPoly> berlekamp(const FpPoly& f, u64 p) {
    int n = fp_deg(f);
    if (n == 1) return {f};
    // M[i][j]: x^(i*p) mod f = sum_j M[i][j] x^j
    FpPoly xp{0, 1};
    // x^p mod f
    {
        FpPoly base{0, 1};
        FpPoly acc{1};
        u64 e = p;
        while (e) {
            if (e & 1) acc = fp_rem(fp_mul(acc, base, p), f, p);
            base = fp_rem(fp_mul(base, base, p), f, p);
            e >>= 1;
        }
        xp = std::move(acc);
    }
    std::vector<std::vector<u64>> M(n, std::vector<u64>(n, 0));
    FpPoly cur{1};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= fp_deg(cur); ++j) M[i][j] = cur[j];
        cur = fp_rem(fp_mul(cur, xp, p), f, p);
    }
    // Left-nullspace of (M - I): rows v with v*(M - I) = 0, via elimination
    // on N = (M - I)^T.
    std::vector<std::vector<u64>> N(n, std::vector<u64>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            u64 v = M[j][i] % p;
            if (i == j) v = (v + p - 1) % p;
            N[i][j] = v;
        }
    }
    // Gaussian elimination; record pivots, extract nullspace basis.
    std::vector<int> pivot_col(n, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int sel = -1;
        for (int row = rank; row < n; ++row) {
            if (N[row][col] != 0) { sel = row; break; }
        }
        if (sel < 0) continue;
        std::swap(N[sel], N[rank]);
        u64 inv = invmod(N[rank][col], p);
        for (int j = 0; j < n; ++j) N[rank][j] = mulmod(N[rank][j], inv, p);
        for (int row = 0; row < n; ++row) {
            if (row == rank || N[row][col] == 0) continue;
            u64 c = N[row][col];
            for (int j = 0; j < n; ++j) {
                N[row][j] = (N[row][j] + p - mulmod(c, N[rank][j], p)) % p;
            }
        }
        pivot_col[rank] = col;
        ++rank;
    }
    std::vector<FpPoly> basis;
    std::vector<bool> is_pivot(n, false);
    for (int r = 0; r < rank; ++r) is_pivot[static_cast<std::size_t>(pivot_col[r])] = true;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[static_cast<std::size_t>(col)]) continue;
        FpPoly v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(col)] = 1;
        for (int r = 0; r < rank; ++r) {
            u64 val = N[r][col];
            if (val) v[static_cast<std::size_t>(pivot_col[r])] = (p - val) % p;
        }
        fp_normalize(v);
        basis.push_back(std::move(v));
    }
    std::size_t r_count = basis.size();
    if (r_count == 1) return {f};

    std::vector<FpPoly> factors{f};
    for (const FpPoly& v : basis) {
        if (factors.size() == r_count) break;
        if (fp_deg(v) < 1) continue; // constant vector
        std::vector<FpPoly> next;
        for (FpPoly& u : factors) {
            if (fp_deg(u) <= 1) { next.push_back(std::move(u)); continue; }
            std::vector<FpPoly> pieces{std::move(u)};
            for (u64 c = 0; c < p; ++c) {
                FpPoly shifted = v;
                if (shifted.empty()) shifted.resize(1, 0);
                shifted[0] = (shifted[0] + p - c % p) % p;
                fp_normalize(shifted);
                std::vector<FpPoly> refined;
                for (FpPoly& piece : pieces) {
                    if (fp_deg(piece) <= 1) { refined.push_back(std::move(piece)); continue; }
                    FpPoly g = fp_gcd(piece, shifted, p);
                    if (fp_deg(g) > 0 && fp_deg(g) < fp_deg(piece)) {
                        FpPoly q = fp_divexact(piece, g, p);
                        refined.push_back(fp_monic(std::move(g), p));
                        refined.push_back(fp_monic(std::move(q), p));
                    } else {
                        refined.push_back(std::move(piece));
                    }
                }
                pieces = std::move(refined);
            }
            for (FpPoly& piece : pieces) next.push_back(std::move(piece));
        }
        factors = std::move(next);
    }
    if (factors.size() != r_count) fail(ErrorKind::Internal, "berlekamp split count mismatch");
    return factors;
}

// ---- arithmetic over Z_m with mpz coefficients ----

using ZmPoly = std::vector<Int>;

void zm_normalize(ZmPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Int zm_reduce_coeff(const Int& v, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
}

ZmPoly zm_reduce(const ZmPoly& a, const Int& m) {
    ZmPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = zm_reduce_coeff(a[i], m);
    zm_normalize(out);
    return out;
}

ZmPoly zm_mul(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZmPoly out(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return zm_reduce(out, m);
}

ZmPoly zm_sub(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    ZmPoly out(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return zm_reduce(out, m);
}

ZmPoly zm_add(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    ZmPoly out(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return zm_reduce(out, m);
}

// Division by a monic divisor.
void zm_divmod_monic(const ZmPoly& a, const ZmPoly& b, const Int& m, ZmPoly& q, ZmPoly& r) {
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(r.size()) - 1 >= db) {
        Int coef = r.back();
        std::size_t shift = r.size() - b.size();
        q[shift] = coef;
        for (std::size_t i = 0; i < b.size(); ++i) {
            r[shift + i] = zm_reduce_coeff(r[shift + i] - coef * b[i], m);
        }
        zm_normalize(r);
    }
    // q entries already reduced except the multiplications above; reduce all.
    for (Int& v : q) v = zm_reduce_coeff(v, m);
    zm_normalize(q);
}

struct LiftPair {
    ZmPoly g, h, s, t;
};

// One quadratic Hensel step: modulus m -> m^2 with f monic over Z_(m^2).
void hensel_step(const ZmPoly& f, LiftPair& pair, const Int& m) {
    Int m2 = m * m;
    ZmPoly e = zm_sub(zm_reduce(f, m2), zm_mul(pair.g, pair.h, m2), m2);
    ZmPoly q, r;
    zm_divmod_monic(zm_mul(pair.s, e, m2), pair.h, m2, q, r);
    ZmPoly hn = zm_add(pair.h, r, m2);
    ZmPoly gn = zm_add(pair.g, zm_add(zm_mul(pair.t, e, m2), zm_mul(q, pair.g, m2), m2), m2);
    // Bezout update
    ZmPoly b = zm_sub(zm_add(zm_mul(pair.s, gn, m2), zm_mul(pair.t, hn, m2), m2),
                      ZmPoly{Int(1)}, m2);
    ZmPoly c, d;
    zm_divmod_monic(zm_mul(pair.s, b, m2), hn, m2, c, d);
    ZmPoly sn = zm_sub(pair.s, d, m2);
    ZmPoly tn = zm_sub(zm_sub(pair.t, zm_mul(pair.t, b, m2), m2), zm_mul(c, gn, m2), m2);
    pair.g = std::move(gn);
    pair.h = std::move(hn);
    pair.s = std::move(sn);
    pair.t = std::move(tn);
}

ZmPoly zm_from_fp(const FpPoly& a) {
    ZmPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = Int(static_cast<unsigned long>(a[i]));
    return out;
}

// Lift the leaves to factors of f modulo M = p^(2^J), recursively.
std::vector<ZmPoly> hensel_split(const ZmPoly& f, const std::vector<FpPoly>& leaves,
                                 std::size_t lo, std::size_t hi, u64 p, const Int& M) {
    if (hi - lo == 1) return {zm_reduce(f, M)};
    std::size_t mid = lo + (hi - lo) / 2;
    FpPoly gp{1}, hp{1};
    for (std::size_t i = lo; i < mid; ++i) gp = fp_mul(gp, leaves[i], p);
    for (std::size_t i = mid; i < hi; ++i) hp = fp_mul(hp, leaves[i], p);
    FpPoly sp, tp;
    fp_bezout(gp, hp, p, sp, tp);
    LiftPair pair{zm_from_fp(gp), zm_from_fp(hp), zm_from_fp(sp), zm_from_fp(tp)};
    Int m(static_cast<unsigned long>(p));
    while (m < M) {
        hensel_step(f, pair, m);
        m = m * m;
    }
    ZmPoly g = zm_reduce(pair.g, M);
    ZmPoly h = zm_reduce(pair.h, M);
    // f == g*h mod M by construction; assert cheaply.
    ZmPoly check = zm_sub(zm_reduce(f, M), zm_mul(g, h, M), M);
    if (!check.empty()) fail(ErrorKind::Internal, "hensel lift verification failed");
    std::vector<ZmPoly> left = hensel_split(g, leaves, lo, mid, p, M);
    std::vector<ZmPoly> right = hensel_split(h, leaves, mid, hi, p, M);
    for (ZmPoly& v : right) left.push_back(std::move(v));
    return left;
}

// Symmetric representative in (-M/2, M/2].
IntPoly symmetric_lift(const ZmPoly& a, const Int& M) {
    Int half = M / 2;
    std::vector<Int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] > half ? Int(a[i] - M) : a[i];
    }
    return IntPoly(std::move(out));
}

// Exact division of monic integer polynomials; nullopt if not divisible.
std::optional<IntPoly> monic_divide(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> r(a.c);
    std::vector<Int> q(a.c.size() >= b.c.size() ? a.c.size() - b.c.size() + 1 : 0, Int(0));
    int db = b.degree();
    while (static_cast<int>(r.size()) - 1 >= db) {
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (static_cast<int>(r.size()) - 1 < db) break;
        Int coef = r.back();
        std::size_t shift = r.size() - b.c.size();
        q[shift] = coef;
        for (std::size_t i = 0; i < b.c.size(); ++i) r[shift + i] -= coef * b.c[i];
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    for (const Int& v : r) {
        if (v != 0) return std::nullopt;
    }
    return IntPoly(std::move(q));
}

std::vector<u64> small_primes_from(u64 start, std::size_t count) {
    std::vector<u64> out;
    u64 n = start;
    while (out.size() < count) {
        bool prime = n >= 2;
        for (u64 d = 2; d * d <= n && prime; ++d) {
            if (n % d == 0) prime = false;
        }
        if (prime) out.push_back(n);
        ++n;
    }
    return out;
}

std::vector<IntPoly> factor_monic(const IntPoly& f) {
    int n = f.degree();
    if (n <= 1) return {f};

    // Find a prime where f stays squarefree.
    u64 prime = 0;
    FpPoly fbar;
    u64 candidate = 3;
    for (int attempts = 0; attempts < 4000; ++attempts) {
        std::vector<u64> ps = small_primes_from(candidate, 1);
        u64 p = ps[0];
        candidate = p + 1;
        FpPoly fb(f.c.size());
        Int pm(static_cast<unsigned long>(p));
        for (std::size_t i = 0; i < f.c.size(); ++i) {
            Int r = zm_reduce_coeff(f.c[i], pm);
            fb[i] = r.get_ui();
        }
        fp_normalize(fb);
        if (fp_deg(fb) != n) continue; // cannot happen for monic f
        FpPoly g = fp_gcd(fb, fp_derivative(fb, p), p);
        if (fp_deg(g) == 0) {
            prime = p;
            fbar = fp_monic(std::move(fb), p);
            break;
        }
    }
    if (prime == 0) fail(ErrorKind::ResourceLimit, "no squarefree prime found for factorization");

    std::vector<FpPoly> leaves = berlekamp(fbar, prime);
    if (leaves.size() == 1) return {f};
    std::sort(leaves.begin(), leaves.end());

    // Landau-Mignotte style bound: coefficients of any monic factor are
    // bounded by 2^n * ||f||_2.
    Int norm2_sq(0);
    for (const Int& v : f.c) norm2_sq += v * v;
    Int norm2 = sqrt(norm2_sq) + 1;
    Int bound = (norm2 << static_cast<unsigned long>(n)) + 1;
    Int target = 2 * bound + 1;
    Int M(static_cast<unsigned long>(prime));
    while (M < target) M = M * M;

    ZmPoly fz(f.c.begin(), f.c.end());
    std::vector<ZmPoly> lifted = hensel_split(zm_reduce(fz, M), leaves, 0, leaves.size(), prime, M);

    // Subset recombination.
    std::vector<IntPoly> out;
    std::vector<std::size_t> avail(lifted.size());
    for (std::size_t i = 0; i < avail.size(); ++i) avail[i] = i;
    IntPoly rem = f;
    std::size_t subset_size = 1;
    while (avail.size() > 0 && subset_size <= avail.size() / 2) {
        bool found = false;
        std::vector<std::size_t> comb(subset_size);
        for (std::size_t i = 0; i < subset_size; ++i) comb[i] = i;
        while (true) {
            ZmPoly prod{Int(1)};
            for (std::size_t idx : comb) prod = zm_mul(prod, lifted[avail[idx]], M);
            IntPoly cand = symmetric_lift(prod, M);
            std::optional<IntPoly> quo = monic_divide(rem, cand);
            if (quo) {
                out.push_back(cand);
                rem = *quo;
                std::vector<std::size_t> keep;
                for (std::size_t i = 0; i < avail.size(); ++i) {
                    if (std::find(comb.begin(), comb.end(), i) == comb.end()) {
                        keep.push_back(avail[i]);
                    }
                }
                avail = std::move(keep);
                found = true;
                break;
            }
            // next combination
            std::size_t k = subset_size;
            while (k > 0 && comb[k - 1] == avail.size() - subset_size + (k - 1)) --k;
            if (k == 0) break;
            ++comb[k - 1];
            for (std::size_t j = k; j < subset_size; ++j) comb[j] = comb[j - 1] + 1;
        }
        if (!found) ++subset_size;
    }
    if (rem.degree() >= 1) out.push_back(rem);
    return out;
}

} // namespace

std::vector<IntPoly> factor_squarefree(const IntPoly& p) {
    IntPoly prim = poly_primitive(p);
    if (prim.degree() < 1) return {};
    if (prim.degree() == 1) return {prim};

    std::vector<IntPoly> factors;
    if (prim.lead() == 1) {
        factors = factor_monic(prim);
    } else {
        // Monicize: F(x) = lc^(d-1) * p(x/lc) with coefficients
        // a_i * lc^(d-1-i); roots scaled by lc.
        const Int& lc = prim.lead();
        int d = prim.degree();
        std::vector<Int> fc(prim.c.size());
        fc[static_cast<std::size_t>(d)] = 1;
        Int pow(1);
        for (int i = d - 1; i >= 0; --i) {
            fc[static_cast<std::size_t>(i)] = prim.c[static_cast<std::size_t>(i)] * pow;
            pow *= lc;
        }
        IntPoly F(std::move(fc));
        std::vector<IntPoly> monic_factors = factor_monic(F);
        for (const IntPoly& h : monic_factors) {
            // map back: roots of h are lc * (roots of p)
            factors.push_back(poly_scale_rat(h, make_rat(Int(1), lc)));
        }
    }
    std::sort(factors.begin(), factors.end(), [](const IntPoly& a, const IntPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (std::size_t i = a.c.size(); i-- > 0;) {
            int c = cmp(a.c[i], b.c[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    // Safety: the factors must multiply back to the primitive input.
    IntPoly prod = IntPoly::constant(Int(1));
    for (const IntPoly& fac : factors) prod = poly_mul(prod, fac);
    if (!(poly_primitive(prod) == prim)) {
        fail(ErrorKind::Internal, "factorization product mismatch");
    }
    return factors;
}

} // namespace quatunit
