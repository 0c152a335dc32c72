#include "quatunit/solver.hpp"

#include "quatunit/transcendental.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <thread>

namespace quatunit {

namespace {

struct ValueLess {
    bool operator()(const Quaternion& x, const Quaternion& y) const {
        return q_compare(x, y) < 0;
    }
};

// Deterministic parallel map: results land at fixed indices, so the output
// is independent of the thread count.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
    int use = threads < 1 ? 1 : threads;
    if (use == 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex error_mu;
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!first_error) first_error = std::current_exception();
                next.store(n);
                return;
            }
        }
    };
    for (int t = 0; t < use; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

Int ceil_to_int(const Rat& q) { return rat_ceil(q); }

bool solution_order(const SolutionPair& x, const SolutionPair& y) {
    int c = word_compare(x.f_word, y.f_word);
    if (c != 0) return c < 0;
    return word_compare(x.g_word, y.g_word) < 0;
}

// g0 = b^-1 (1 - a f a') b'^-1: the unique g making the pair (f, g) solve
// the equation, whether or not g0 lies in the second semigroup.
Quaternion paired_value(const UnitEquationInstance& inst, const Quaternion& f) {
    Quaternion afa = q_mul(q_mul(inst.a, f), inst.a_prime);
    Quaternion rem = q_sub(Quaternion::one(), afa);
    return q_mul(q_mul(q_inv(inst.b), rem), q_inv(inst.b_prime));
}

void verify_solution(const UnitEquationInstance& inst, const Quaternion& f, const Quaternion& g) {
    Quaternion lhs = q_add(q_mul(q_mul(inst.a, f), inst.a_prime),
                           q_mul(q_mul(inst.b, g), inst.b_prime));
    if (!q_equal(lhs, Quaternion::one()))
        fail(ErrorKind::Internal, "solution failed exact re-verification");
}

// Looks up each value in a norm-bounded enumeration of the semigroup,
// enumerated once up to the largest query norm.
std::vector<std::optional<Word>> batch_membership(const SemigroupSpec& spec,
                                                  const std::vector<Quaternion>& queries,
                                                  unsigned long element_cap) {
    std::vector<std::optional<Word>> out(queries.size());
    std::optional<Rat> max_norm;
    AlgebraicReal one(1);
    for (const auto& q : queries) {
        AlgebraicReal n = q_norm(q);
        if (AlgebraicReal::compare(n, one) <= 0) continue;
        Rat hi = n.refine(Rat(1, 16)).hi;
        if (!max_norm || hi > *max_norm) max_norm = hi;
    }
    if (!max_norm) return out;
    auto elems = enumerate_norm_bounded(spec, AlgebraicReal(*max_norm), element_cap, nullptr);
    std::map<Quaternion, Word, ValueLess> table;
    for (auto& e : elems) table.emplace(e.value, e.witnesses.front());
    for (std::size_t i = 0; i < queries.size(); ++i) {
        auto it = table.find(queries[i]);
        if (it != table.end()) out[i] = it->second;
    }
    return out;
}

Completeness window_status(bool finite_cap, const Int& cap, std::size_t n_generators, int window) {
    if (!finite_cap) return Completeness::OracleWindowOnly;
    Int needed = Int(n_generators) * (cap - 1);
    if (needed <= Int(window)) return Completeness::OracleCompleteBelowCap;
    return Completeness::OracleWindowOnly;
}

const Int& two_pow_64() {
    static const Int v = Int(1) << 64;
    return v;
}

} // namespace

void validate_instance(const UnitEquationInstance& inst) {
    if (inst.a.is_zero() || inst.a_prime.is_zero() || inst.b.is_zero() || inst.b_prime.is_zero())
        fail(ErrorKind::ZeroOperand, "coefficients a, a', b, b' must be nonzero");
    validate(inst.gamma1);
    validate(inst.gamma2);
}

bool hyperplane_test(const Quaternion& a, const Quaternion& a_prime, const Quaternion& f) {
    Quaternion d = q_mul(q_inv(a), q_inv(a_prime));
    AlgebraicReal lhs = q_dot(d, f) * AlgebraicReal(2);
    return AlgebraicReal::compare(lhs, q_norm(d)) == 0;
}

CommutativeEmbedding embed_commutative(const SemigroupSpec& spec) {
    ValidationResult v = validate(spec);
    if (!v.commutative)
        fail(ErrorKind::NotCommutative, "semigroup generators do not commute");
    CommutativeEmbedding emb;
    AlgebraicReal zero(0);
    std::optional<std::size_t> anchor;
    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        if (!spec.generators[i].is_real()) {
            anchor = i;
            break;
        }
    }
    if (anchor) {
        const Quaternion& g = spec.generators[*anchor];
        AlgebraicReal len = ar_sqrt(g.b * g.b + g.c * g.c + g.d * g.d);
        emb.axis = Quaternion{zero, g.b / len, g.c / len, g.d / len};
    } else {
        emb.axis = Quaternion{zero, AlgebraicReal(1), zero, zero};
    }
    for (const auto& g : spec.generators) {
        AlgebraicReal y = g.b * emb.axis.b + g.c * emb.axis.c + g.d * emb.axis.d;
        Quaternion recon{g.a, y * emb.axis.b, y * emb.axis.c, y * emb.axis.d};
        if (!q_equal(recon, g))
            fail(ErrorKind::NotCoplanar, "commutative generators do not span a complex plane");
        emb.images.push_back(AlgebraicComplex{g.a, y});
    }
    return emb;
}

ReductionBound reduction_bound(const UnitEquationInstance& inst, unsigned bits) {
    validate_instance(inst);
    ReductionBound out;

    std::vector<RInterval> x = log_norm_data(inst.gamma1, bits);
    std::vector<RInterval> y = log_norm_data(inst.gamma2, bits);
    RInterval min_x = iv_min_envelope(x);
    RInterval max_x = iv_max_envelope(x);
    RInterval min_y = iv_min_envelope(y);
    RInterval max_y = iv_max_envelope(y);
    std::size_t t = x.size(), u = y.size();

    AlgebraicReal A = q_abs(inst.a) * q_abs(inst.a_prime);
    AlgebraicReal B = q_abs(inst.b) * q_abs(inst.b_prime);

    out.comparability.C1 = min_x.lo / (Rat(2 * (long)u) * max_y.hi);
    out.comparability.C2 = Rat(2 * (long)t) * max_x.hi / min_y.lo;
    out.comparability.C2_prime = rat_max(out.comparability.C2, Rat(1));

    AlgebraicReal ratio = A / B;
    std::vector<LogGenerator> gens;
    if (ratio.is_one()) {
        out.c_term_dropped = true;
        out.c_log = RInterval::point(Rat(0));
    } else {
        LogGenerator cg = log_generator_positive_real(ratio, bits);
        out.c_log = cg.lambda_re;
        gens.push_back(std::move(cg));
    }
    for (const auto& g : inst.gamma1.generators)
        gens.push_back(log_generator_positive_real(q_abs(g), bits));
    for (const auto& g : inst.gamma2.generators)
        gens.push_back(log_generator_positive_real(q_abs(g), bits));

    out.baker = explicit_constants(gens, 0, bits);

    // Small-exponent threshold M*: beyond it sum(m_i x_i) >= 2 + 2|c| and
    // |a f a'| >= 2, which drives both comparability and the linear form
    // decay |ln(X/Y)| <= (2 / A) e^{-min_x max_m}.
    RInterval ln_a = log_interval(A, bits);
    RInterval ln_b = log_interval(B, bits);
    Rat c_abs = out.c_log.abs_upper();
    RInterval ln2 = log_interval_rat(Rat(2), bits);
    Int m_star = ceil_to_int((Rat(2) + Rat(2) * c_abs) / min_x.lo);
    Rat growth_need = (ln2.hi - ln_a.lo) / min_x.lo;
    if (growth_need > 0) {
        Int alt = ceil_to_int(growth_need);
        if (alt > m_star) m_star = alt;
    }
    if (m_star < 1) m_star = 1;
    out.small_threshold = m_star;

    // With max_m < M*, the other side satisfies
    // |b g b'| <= |a f a'| + 1 <= A e^{t max_x M*} + 1.
    Rat exp_arg = Rat((long)t) * max_x.hi * Rat(m_star);
    RInterval growth = exp_interval_rat(exp_arg, bits);
    RInterval a_box = A.refine(Rat(1, 1) / pow2_rat(Int(bits)));
    Rat top = a_box.hi * growth.hi + 1;
    Rat g_up = log_interval_rat(top, bits).hi - ln_b.lo;
    Int h_small = m_star;
    if (g_up > 0) {
        Int alt = ceil_to_int(g_up / min_y.lo);
        if (alt > h_small) h_small = alt;
    }
    out.h_small = h_small;

    RInterval rate{min_x.lo / out.comparability.C2_prime, min_x.hi / out.comparability.C2_prime};
    RInterval a_tight = A.refine_nonzero(); // A > 0, so lo > 0 after sign refinement
    RInterval scale{Rat(2) / a_tight.hi, Rat(2) / a_tight.lo};
    out.h_baker = solve_height_cap(out.baker, rate, scale, bits);

    Int cap = out.h_small + 1;
    if (out.h_baker > cap) cap = out.h_baker;
    out.h_cap.value = cap;
    out.h_cap.overflow = cap > two_pow_64();
    return out;
}

LocusBound locus_bound(const Quaternion& a, const Quaternion& a_prime,
                       const SemigroupSpec& gamma, unsigned bits) {
    LocusBound out;
    CommutativeEmbedding emb = embed_commutative(gamma);
    Quaternion d = q_mul(q_inv(a), q_inv(a_prime));
    AlgebraicReal w1 = d.a;
    AlgebraicReal w2 = d.b * emb.axis.b + d.c * emb.axis.c + d.d * emb.axis.d;
    AlgebraicReal tau = q_norm(d) / AlgebraicReal(2);

    if (w1.is_zero() && w2.is_zero()) {
        // Constraint reads 0 = tau with tau > 0: empty locus.
        out.empty_constraint = true;
        out.n_cap.value = 1;
        out.big_m = RInterval::point(Rat(0));
        out.c_prime = Rat(0);
        return out;
    }

    AlgebraicReal w_len = ar_sqrt(w1 * w1 + w2 * w2);
    AlgebraicReal big_m = tau / w_len;
    RInterval m_box = big_m.refine_nonzero(); // tau > 0, so lo > 0
    out.big_m = m_box;
    AlgebraicReal v1 = w1 / w_len;
    AlgebraicReal v2 = w2 / w_len;

    std::vector<RInterval> xlog = log_norm_data(gamma, bits);
    RInterval rate = iv_min_envelope(xlog);

    bool all_real = true;
    for (const auto& z : emb.images)
        if (!z.im.is_zero()) all_real = false;

    if (all_real) {
        // Real images: x w1 = tau pins |f| = |tau / w1| exactly.
        out.via_baker = false;
        if (w1.is_zero()) {
            out.n_cap.value = 1;
            out.c_prime = Rat(0);
            return out;
        }
        AlgebraicReal x_star = ar_abs(tau / w1);
        if (AlgebraicReal::compare(x_star, AlgebraicReal(1)) <= 0) {
            out.n_cap.value = 1;
            out.c_prime = Rat(0);
            return out;
        }
        RInterval lnx = log_interval(x_star, bits);
        out.n_cap.value = rat_floor(lnx.hi / rate.lo) + 1;
        out.c_prime = Rat(0);
        if (out.n_cap.value < 1) out.n_cap.value = 1;
        out.n_cap.overflow = out.n_cap.value > two_pow_64();
        return out;
    }

    // Unit-circle linear form: solutions satisfy
    // cos(sum(n_j theta_j) - theta) = M prod(r_j^-n_j) > 0, hence an integer
    // m with |sum(n_j theta_j) - theta - (m + 1/2) pi| <= (pi/2) M prod(r^-n).
    out.via_baker = true;
    AlgebraicComplex v{v1, v2};
    RInterval theta = arg_interval(v, bits);
    AlgebraicComplex iv = ac_mul(AlgebraicComplex{AlgebraicReal(0), AlgebraicReal(1)}, v);

    std::vector<LogGenerator> gens;
    LogGenerator g0;
    g0.alpha = iv;
    g0.lambda_re = RInterval::point(Rat(0));
    g0.lambda_im = iv_add(iv_scale(pi_interval(bits), Rat(1, 2)), theta);
    g0.degree_bound = ac_minpoly(iv).degree();
    gens.push_back(std::move(g0));
    gens.push_back(log_generator_minus_one(bits));

    Rat max_theta(0);
    for (std::size_t j = 0; j < emb.images.size(); ++j) {
        const AlgebraicComplex& z = emb.images[j];
        AlgebraicReal r = ar_sqrt(ac_norm_sq(z));
        AlgebraicComplex unit{z.re / r, z.im / r};
        if (unit.im.is_zero() && unit.re.sign() > 0) continue; // theta_j = 0
        LogGenerator gj = log_generator_unit(unit, bits);
        max_theta = rat_max(max_theta, gj.lambda_im.hi);
        gens.push_back(std::move(gj));
    }

    BakerCertificate cert = explicit_constants(gens, 0, bits);
    out.baker = cert;

    // Coefficient of pi is bounded by C'' max_n with
    // C' = (s max_theta + pi/2 + 2 pi + 2 M) / pi.
    RInterval pi_box = pi_interval(bits);
    Rat s(static_cast<long>(gamma.generators.size()));
    Rat c_prime = (s * max_theta + pi_box.hi / 2 + Rat(2) * pi_box.hi + Rat(2) * m_box.hi) / pi_box.lo;
    out.c_prime = rat_max(c_prime, Rat(1));

    // Fold the height inflation into the constant: k' = k C''^-C.
    BakerCertificate folded = cert;
    if (out.c_prime > 1) {
        RInterval ln_cpp = log_interval_rat(out.c_prime, bits);
        RInterval ln2 = log_interval_rat(Rat(2), bits);
        Int shift = ceil_to_int(cert.C * ln_cpp.hi / ln2.lo);
        if (shift < 0) shift = 0;
        folded.k = folded.k.mul_pow2(-shift);
    }

    RInterval scale{Rat(2) * m_box.lo, Rat(2) * m_box.hi};
    out.n_cap.value = solve_height_cap(folded, rate, scale, bits);
    out.n_cap.overflow = out.n_cap.value > two_pow_64();
    return out;
}

SolutionSet solve_reduction(const UnitEquationInstance& inst, const RunConfig& cfg) {
    validate_instance(inst);
    SolutionSet out;
    ReductionBound bound = reduction_bound(inst, cfg.precision_bits);

    auto candidates = enumerate_length_bounded(inst.gamma1, cfg.oracle_len, cfg.element_cap, nullptr);

    std::vector<std::optional<Quaternion>> paired(candidates.size());
    parallel_for(candidates.size(), cfg.threads, [&](std::size_t i) {
        const Quaternion& f = candidates[i].value;
        if (hyperplane_test(inst.a, inst.a_prime, f)) return;
        Quaternion g0 = paired_value(inst, f);
        if (g0.is_zero()) return;
        paired[i] = std::move(g0);
    });

    std::vector<std::size_t> live;
    std::vector<Quaternion> queries;
    for (std::size_t i = 0; i < paired.size(); ++i) {
        if (paired[i]) {
            live.push_back(i);
            queries.push_back(*paired[i]);
        }
    }
    auto hits = batch_membership(inst.gamma2, queries, cfg.element_cap);
    for (std::size_t k = 0; k < live.size(); ++k) {
        if (!hits[k]) continue;
        const auto& cand = candidates[live[k]];
        SolutionPair sp{cand.witnesses.front(), *hits[k], cand.value, queries[k]};
        verify_solution(inst, sp.f_value, sp.g_value);
        out.solutions.push_back(std::move(sp));
    }
    std::sort(out.solutions.begin(), out.solutions.end(), solution_order);

    out.certificate.reduction = bound;
    out.certificate.oracle_window = cfg.oracle_len;
    out.status = window_status(!bound.h_cap.overflow, bound.h_cap.value,
                               inst.gamma1.generators.size(), cfg.oracle_len);
    return out;
}

LocusResult solve_locus(const Quaternion& a, const Quaternion& a_prime,
                        const SemigroupSpec& gamma, const RunConfig& cfg) {
    LocusResult out;
    out.bound = locus_bound(a, a_prime, gamma, cfg.precision_bits);
    out.oracle_window = cfg.oracle_len;

    auto candidates = enumerate_length_bounded(gamma, cfg.oracle_len, cfg.element_cap, nullptr);
    std::vector<char> on(candidates.size(), 0);
    parallel_for(candidates.size(), cfg.threads, [&](std::size_t i) {
        on[i] = hyperplane_test(a, a_prime, candidates[i].value) ? 1 : 0;
    });
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (on[i]) out.on_locus.push_back(LocusSolution{candidates[i].witnesses.front(), candidates[i].value});

    out.status = window_status(!out.bound.n_cap.overflow, out.bound.n_cap.value,
                               gamma.generators.size(), cfg.oracle_len);
    return out;
}

SolutionSet solve_main(const UnitEquationInstance& inst, const RunConfig& cfg) {
    validate_instance(inst);
    ValidationResult v1 = validate(inst.gamma1);
    if (!v1.commutative)
        fail(ErrorKind::NotCommutative, "first semigroup must be commutative");

    SolutionSet out = solve_reduction(inst, cfg);
    LocusResult loc = solve_locus(inst.a, inst.a_prime, inst.gamma1, cfg);

    std::vector<Quaternion> queries;
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < loc.on_locus.size(); ++i) {
        Quaternion g0 = paired_value(inst, loc.on_locus[i].f_value);
        if (g0.is_zero()) continue;
        live.push_back(i);
        queries.push_back(std::move(g0));
    }
    auto hits = batch_membership(inst.gamma2, queries, cfg.element_cap);
    for (std::size_t k = 0; k < live.size(); ++k) {
        if (!hits[k]) continue;
        const auto& ls = loc.on_locus[live[k]];
        SolutionPair sp{ls.f_word, *hits[k], ls.f_value, queries[k]};
        verify_solution(inst, sp.f_value, sp.g_value);
        out.solutions.push_back(std::move(sp));
    }
    std::sort(out.solutions.begin(), out.solutions.end(), solution_order);

    out.certificate.locus = loc.bound;
    bool complete = out.status == Completeness::OracleCompleteBelowCap &&
                    loc.status == Completeness::OracleCompleteBelowCap;
    out.status = complete ? Completeness::OracleCompleteBelowCap : Completeness::OracleWindowOnly;
    return out;
}

SolutionSet brute_force_oracle(const UnitEquationInstance& inst, const RunConfig& cfg) {
    validate_instance(inst);
    SolutionSet out;
    auto fs = enumerate_length_bounded(inst.gamma1, cfg.oracle_len, cfg.element_cap, nullptr);
    auto gs = enumerate_length_bounded(inst.gamma2, cfg.oracle_len, cfg.element_cap, nullptr);

    std::vector<std::vector<SolutionPair>> rows(fs.size());
    parallel_for(fs.size(), cfg.threads, [&](std::size_t i) {
        Quaternion lhs = q_mul(q_mul(inst.a, fs[i].value), inst.a_prime);
        for (const auto& g : gs) {
            Quaternion total = q_add(lhs, q_mul(q_mul(inst.b, g.value), inst.b_prime));
            if (q_equal(total, Quaternion::one()))
                rows[i].push_back(SolutionPair{fs[i].witnesses.front(), g.witnesses.front(),
                                               fs[i].value, g.value});
        }
    });
    for (auto& row : rows)
        for (auto& sp : row) out.solutions.push_back(std::move(sp));
    std::sort(out.solutions.begin(), out.solutions.end(), solution_order);

    out.certificate.oracle_window = cfg.oracle_len;
    out.status = Completeness::OracleWindowOnly;
    return out;
}

std::vector<MatrixPair> matrix_counterexample(long n_max) {
    if (n_max < 1) fail(ErrorKind::InvalidInput, "n_max must be at least 1");
    std::vector<MatrixPair> out;
    for (long n = 1; n <= n_max; ++n) {
        MatrixPair mp;
        mp.n = n;
        mp.f = Mat2{Rat(1), Rat(n), Rat(0), Rat(1)};
        // g = f^2 for upper unitriangular matrices.
        mp.g = Mat2{Rat(1), Rat(2 * n), Rat(0), Rat(1)};
        Mat2 ff{mp.f.m00 * mp.f.m00 + mp.f.m01 * mp.f.m10,
                mp.f.m00 * mp.f.m01 + mp.f.m01 * mp.f.m11,
                mp.f.m10 * mp.f.m00 + mp.f.m11 * mp.f.m10,
                mp.f.m10 * mp.f.m01 + mp.f.m11 * mp.f.m11};
        bool is_square = ff.m00 == mp.g.m00 && ff.m01 == mp.g.m01 &&
                         ff.m10 == mp.g.m10 && ff.m11 == mp.g.m11;
        bool solves = (Rat(2) * mp.f.m00 - mp.g.m00) == 1 &&
                      (Rat(2) * mp.f.m01 - mp.g.m01) == 0 &&
                      (Rat(2) * mp.f.m10 - mp.g.m10) == 0 &&
                      (Rat(2) * mp.f.m11 - mp.g.m11) == 1;
        mp.verified = is_square && solves;
        out.push_back(mp);
    }
    return out;
}

} // namespace quatunit
