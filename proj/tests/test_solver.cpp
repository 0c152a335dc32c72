#include "quatunit/solver.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace quatunit;

namespace {

Quaternion rq(long a, long b = 0, long c = 0, long d = 0) {
    return Quaternion::from_rat(Rat(a), Rat(b), Rat(c), Rat(d));
}

SemigroupSpec span(std::vector<Quaternion> gens) {
    SemigroupSpec s;
    s.generators = std::move(gens);
    return s;
}

// 3^m - 2^n = 1, the classical pair with solutions (1,1) and (2,3).
UnitEquationInstance catalan_instance() {
    UnitEquationInstance inst;
    inst.a = rq(1);
    inst.a_prime = rq(1);
    inst.b = rq(-1);
    inst.b_prime = rq(1);
    inst.gamma1 = span({rq(3)});
    inst.gamma2 = span({rq(2)});
    return inst;
}

// f + g = 1 with f in <1+i> and g in a noncommutative pair; the only
// solution is (1+i)^2 + (1-2i) = 1.
UnitEquationInstance mixed_instance() {
    UnitEquationInstance inst;
    inst.a = rq(1);
    inst.a_prime = rq(1);
    inst.b = rq(1);
    inst.b_prime = rq(1);
    inst.gamma1 = span({rq(1, 1)});
    inst.gamma2 = span({rq(1, -2), rq(1, 0, 1)});
    return inst;
}

Quaternion random_quat(std::mt19937_64& rng, bool nonzero) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    while (true) {
        auto r = [&]() { return make_rat(Int(num(rng)), Int(den(rng))); };
        Quaternion q = Quaternion::from_rat(r(), r(), r(), r());
        if (!nonzero || !q.is_zero()) return q;
    }
}

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

} // namespace

TEST_CASE("instance validation") {
    UnitEquationInstance inst = catalan_instance();
    validate_instance(inst);
    inst.b = rq(0);
    CHECK(kind_of([&] { validate_instance(inst); }) == ErrorKind::ZeroOperand);
    inst = catalan_instance();
    inst.gamma2 = span({rq(0, 1)}); // norm 1 generator
    CHECK(kind_of([&] { validate_instance(inst); }) == ErrorKind::NormNotAboveOne);
}

TEST_CASE("hyperplane membership matches the norm characterization") {
    // 2<d, f> = N(d) with d = a^-1 a'^-1 is exactly |1 - a f a'| = |a f a'|.
    std::mt19937_64 rng(20240601);
    int on = 0;
    for (int iter = 0; iter < 100; ++iter) {
        Quaternion a = random_quat(rng, true);
        Quaternion ap = random_quat(rng, true);
        Quaternion f = random_quat(rng, false);
        Quaternion afa = q_mul(q_mul(a, f), ap);
        bool norm_eq = q_norm(q_sub(Quaternion::one(), afa)) == q_norm(afa);
        CHECK(hyperplane_test(a, ap, f) == norm_eq);
        if (norm_eq) ++on;
    }
    // Engineered hits: with a = a' = 1 the condition is Re f = 1/2.
    Quaternion half = Quaternion::from_rat(Rat(1, 2), Rat(7), Rat(-3), Rat(1, 5));
    CHECK(hyperplane_test(rq(1), rq(1), half));
    CHECK(!hyperplane_test(rq(1), rq(1), rq(1)));
    CHECK(on <= 5); // random rationals almost never land on the hyperplane
}

TEST_CASE("commutative embedding into a complex plane") {
    // <1+i, 2i, 3+4i> lives in the i-plane; products map to products.
    auto emb = embed_commutative(span({rq(1, 1), rq(0, 2), rq(3, 4)}));
    CHECK(q_equal(emb.axis, rq(0, 1)));
    REQUIRE(emb.images.size() == 3);
    CHECK(emb.images[0] == AlgebraicComplex(AlgebraicReal(1L), AlgebraicReal(1L)));
    CHECK(emb.images[1] == AlgebraicComplex(AlgebraicReal(0L), AlgebraicReal(2L)));
    CHECK(ac_mul(emb.images[0], emb.images[0]) == emb.images[1]);
    CHECK(ac_norm_sq(emb.images[2]) == AlgebraicReal(25L));

    // Same plane through j with a real generator mixed in.
    auto embj = embed_commutative(span({rq(2), rq(1, 0, -1)}));
    REQUIRE(embj.images.size() == 2);
    CHECK(embj.images[0].is_real());
    // The image of 1-j is 1 + t i for t = <imag(1-j), axis> = +-1; its norm
    // and real part are plane-independent.
    CHECK(ac_norm_sq(embj.images[1]) == AlgebraicReal(2L));
    CHECK(embj.images[1].re == AlgebraicReal(1L));

    CHECK(kind_of([&] { embed_commutative(span({rq(1, 1), rq(1, 0, 1)})); }) ==
          ErrorKind::NotCommutative);
}

TEST_CASE("embedding preserves random products") {
    // x, y in the same complex plane commute; their embedded images multiply
    // like complex numbers: (x1 + y1 u)(x2 + y2 u) = (x1 x2 - y1 y2) + ...
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (int iter = 0; iter < 40; ++iter) {
        long x1 = coef(rng), y1 = coef(rng), x2 = coef(rng), y2 = coef(rng);
        Quaternion g1 = rq(x1, 0, 2 * y1, 0); // plane spanned by 1 and j
        Quaternion g2 = rq(x2, 0, 2 * y2, 0);
        if (q_norm(g1) <= Rat(1) || q_norm(g2) <= Rat(1) || q_equal(g1, g2)) continue;
        auto emb = embed_commutative(span({g1, g2}));
        AlgebraicComplex prod = ac_mul(emb.images[0], emb.images[1]);
        Quaternion qprod = q_mul(g1, g2);
        CHECK(prod.re == qprod.a);
        CHECK(ac_norm_sq(prod) == AlgebraicReal(q_norm(qprod)));
    }
}

TEST_CASE("reduction branch solves the catalan pair") {
    UnitEquationInstance inst = catalan_instance();
    RunConfig cfg;
    cfg.oracle_len = 12;
    SolutionSet out = solve_reduction(inst, cfg);
    REQUIRE(out.solutions.size() == 2);
    CHECK(out.solutions[0].f_word.indices == std::vector<int>{0});
    CHECK(out.solutions[0].g_word.indices == std::vector<int>{0});
    CHECK(out.solutions[1].f_word.indices == std::vector<int>{0, 0});
    CHECK(out.solutions[1].g_word.indices == std::vector<int>{0, 0, 0});
    CHECK(q_equal(out.solutions[0].f_value, rq(3)));
    CHECK(q_equal(out.solutions[1].g_value, rq(8)));
    REQUIRE(out.certificate.reduction.has_value());
    const ReductionBound& rb = *out.certificate.reduction;
    CHECK(!rb.h_cap.overflow);
    CHECK(rb.h_cap.value > 0);
    CHECK(rb.c_term_dropped); // |a a'| = |b b'| = 1
    CHECK(rb.comparability.C2_prime >= 1);
    CHECK(rb.small_threshold >= 1);
    CHECK(out.certificate.oracle_window == 12);
}

TEST_CASE("reduction keeps the correction term for unequal coefficients") {
    UnitEquationInstance inst = catalan_instance();
    inst.a = rq(5); // |a a'| / |b b'| = 5
    ReductionBound rb = reduction_bound(inst, 96);
    CHECK(!rb.c_term_dropped);
    CHECK(rb.c_log.lo > Rat(16, 10));
    CHECK(rb.c_log.hi < Rat(17, 10));
    CHECK(!rb.h_cap.overflow);
}

TEST_CASE("full solve agrees with the brute force oracle") {
    RunConfig cfg;
    cfg.oracle_len = 8;

    SolutionSet a = solve_main(catalan_instance(), cfg);
    SolutionSet b = brute_force_oracle(catalan_instance(), cfg);
    REQUIRE(a.solutions.size() == b.solutions.size());
    for (std::size_t i = 0; i < a.solutions.size(); ++i) {
        CHECK(a.solutions[i].f_word == b.solutions[i].f_word);
        CHECK(a.solutions[i].g_word == b.solutions[i].g_word);
    }

    SolutionSet c = solve_main(mixed_instance(), cfg);
    SolutionSet d = brute_force_oracle(mixed_instance(), cfg);
    REQUIRE(c.solutions.size() == 1);
    REQUIRE(d.solutions.size() == 1);
    CHECK(c.solutions[0].f_word.indices == std::vector<int>{0, 0});
    CHECK(c.solutions[0].g_word.indices == std::vector<int>{0});
    CHECK(q_equal(c.solutions[0].f_value, rq(0, 2)));
    CHECK(q_equal(c.solutions[0].g_value, rq(1, -2)));
    CHECK(c.solutions[0].f_word == d.solutions[0].f_word);
}

TEST_CASE("every reported solution satisfies the equation exactly") {
    RunConfig cfg;
    cfg.oracle_len = 8;
    for (const auto& inst : {catalan_instance(), mixed_instance()}) {
        SolutionSet out = solve_main(inst, cfg);
        for (const auto& sol : out.solutions) {
            Quaternion lhs = q_add(q_mul(q_mul(inst.a, sol.f_value), inst.a_prime),
                                   q_mul(q_mul(inst.b, sol.g_value), inst.b_prime));
            CHECK(q_equal(lhs, Quaternion::one()));
            CHECK(q_equal(eval_word(inst.gamma1, sol.f_word), sol.f_value));
            CHECK(q_equal(eval_word(inst.gamma2, sol.g_word), sol.g_value));
        }
    }
}

TEST_CASE("locus branch pins the gaussian power with real part one") {
    // d = 2: the hyperplane is Re f = 1, hit by (1+i)^1 alone.
    RunConfig cfg;
    cfg.oracle_len = 12;
    Quaternion half = Quaternion::from_rat(Rat(1, 2), Rat(0), Rat(0), Rat(0));
    LocusResult res = solve_locus(rq(1), half, span({rq(1, 1)}), cfg);
    REQUIRE(res.on_locus.size() == 1);
    CHECK(res.on_locus[0].f_word.indices == std::vector<int>{0});
    CHECK(q_equal(res.on_locus[0].f_value, rq(1, 1)));
    CHECK(res.bound.via_baker);
    CHECK(!res.bound.empty_constraint);
    CHECK(!res.bound.n_cap.overflow);
    REQUIRE(res.bound.baker.has_value());
    CHECK(res.bound.baker->r == 3); // rotated offset, -1, one unit generator
    CHECK(res.bound.baker->degree == 8);
    CHECK(res.status == Completeness::OracleWindowOnly); // cap is astronomical
}

TEST_CASE("locus branch with purely real images avoids transcendence bounds") {
    // d = 3 against <2>: the constraint 3 f = 9/2 pins f = 3/2 < 2, so no
    // word length is feasible and the cap collapses to 1.
    RunConfig cfg;
    cfg.oracle_len = 10;
    Quaternion third = Quaternion::from_rat(Rat(1, 3), Rat(0), Rat(0), Rat(0));
    LocusResult res = solve_locus(rq(1), third, span({rq(2)}), cfg);
    CHECK(res.on_locus.empty());
    CHECK(!res.bound.via_baker);
    CHECK(!res.bound.empty_constraint);
    CHECK(!res.bound.n_cap.overflow);
    CHECK(res.bound.n_cap.value == 1);
    CHECK(res.status == Completeness::OracleCompleteBelowCap);
}

TEST_CASE("locus constraint can miss the semigroup plane entirely") {
    // d = j is orthogonal to span{1, i}: no element of <1+i> can satisfy
    // 2<j, f> = 1, so the constraint is empty and the cap is immediate.
    RunConfig cfg;
    cfg.oracle_len = 10;
    LocusResult res = solve_locus(rq(1), rq(0, 0, -1), span({rq(1, 1)}), cfg);
    CHECK(res.on_locus.empty());
    CHECK(res.bound.empty_constraint);
    CHECK(!res.bound.via_baker);
    CHECK(res.bound.n_cap.value == 1);
    CHECK(res.status == Completeness::OracleCompleteBelowCap);
}

TEST_CASE("main solver requires a commutative first semigroup") {
    UnitEquationInstance inst = mixed_instance();
    inst.gamma1 = span({rq(1, 1), rq(1, 0, 1)});
    RunConfig cfg;
    CHECK(kind_of([&] { solve_main(inst, cfg); }) == ErrorKind::NotCommutative);
}

TEST_CASE("thread count does not change the result") {
    RunConfig one;
    one.oracle_len = 8;
    one.threads = 1;
    RunConfig four = one;
    four.threads = 4;
    SolutionSet s1 = solve_main(mixed_instance(), one);
    SolutionSet s4 = solve_main(mixed_instance(), four);
    REQUIRE(s1.solutions.size() == s4.solutions.size());
    for (std::size_t i = 0; i < s1.solutions.size(); ++i) {
        CHECK(s1.solutions[i].f_word == s4.solutions[i].f_word);
        CHECK(s1.solutions[i].g_word == s4.solutions[i].g_word);
    }
    CHECK(s1.status == s4.status);
}

TEST_CASE("matrix pairs defeat finiteness in the split algebra") {
    auto pairs = matrix_counterexample(50);
    REQUIRE(pairs.size() == 50);
    for (const auto& p : pairs) {
        CHECK(p.verified);
        CHECK(p.f.m01 == Rat(p.n));
        CHECK(p.g.m01 == Rat(2 * p.n));
        CHECK(p.f.m00 == 1);
        CHECK(p.g.m10 == 0);
    }
    CHECK(kind_of([] { matrix_counterexample(0); }) == ErrorKind::InvalidInput);
}
