#include "quatunit/dynamics.hpp"

#include <doctest.h>

#include <functional>
#include <random>
#include <utility>
#include <vector>

using namespace quatunit;

namespace {

PrimeCurve test_curve() {
    // p = 1009 = 1 mod 4 exercises the general square-root path.
    return PrimeCurve(Int(1009), Int(1), Int(1));
}

QuadElem qe(long x, long y) { return QuadElem{Int(x), Int(y)}; }

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

} // namespace

TEST_CASE("curve construction rejects bad parameters") {
    CHECK(kind_of([] { PrimeCurve(Int(3), Int(1), Int(1)); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { PrimeCurve(Int(1000), Int(1), Int(1)); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { PrimeCurve(Int(1009), Int(0), Int(0)); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { curve_point(test_curve(), Int(0), Int(2)); }) == ErrorKind::OffCurve);
    CHECK_NOTHROW(curve_point(test_curve(), Int(0), Int(1))); // 1^2 = 0 + 0 + 1
}

TEST_CASE("group laws on the curve") {
    PrimeCurve c = test_curve();
    CurvePoint p1 = find_point(c, Int(0));
    CurvePoint p2 = find_point(c, Int(10));
    CurvePoint p3 = find_point(c, Int(100));
    CHECK(p1 == curve_point(c, Int(0), Int(1)));
    CurvePoint inf = CurvePoint::at_infinity();

    CHECK(point_add(c, p1, inf) == p1);
    CHECK(point_add(c, inf, p2) == p2);
    CHECK(point_add(c, p1, point_neg(c, p1)) == inf);
    CHECK(point_add(c, p1, p2) == point_add(c, p2, p1));
    CHECK(point_add(c, point_add(c, p1, p2), p3) == point_add(c, p1, point_add(c, p2, p3)));
    CHECK(point_add(c, p1, p1) == scalar_mul(c, Int(2), p1));
}

TEST_CASE("scalar multiples") {
    PrimeCurve c = test_curve();
    CurvePoint p = find_point(c, Int(0));
    CurvePoint sum = CurvePoint::at_infinity();
    for (int i = 0; i < 6; ++i) sum = point_add(c, sum, p);
    CHECK(scalar_mul(c, Int(6), p) == sum);
    CHECK(scalar_mul(c, Int(0), p) == CurvePoint::at_infinity());
    CHECK(scalar_mul(c, Int(-2), p) == point_neg(c, point_add(c, p, p)));
    CHECK(scalar_mul(c, Int(1), p) == p);
}

TEST_CASE("square roots lift only residues") {
    PrimeCurve c = test_curve();
    int lifted = 0;
    for (long x = 0; x <= 40; ++x) {
        auto p = lift_x(c, Int(x));
        if (!p.has_value()) continue;
        ++lifted;
        CHECK_NOTHROW(curve_point(c, p->x, p->y));
        CHECK(p->y <= c.p - p->y); // canonical smaller root
    }
    CHECK(lifted > 5);
    CHECK(lifted < 41); // some abscissas must fail to lift
}

TEST_CASE("translated multiplication iterates in closed form") {
    PrimeCurve c = test_curve();
    CurvePoint p = find_point(c, Int(3));
    CurvePoint r = find_point(c, Int(17));

    AffineDynamic doubling{Int(2), r}; // q = [1] r
    CHECK(verify_translation_identity(c, doubling, p, r, 15));

    AffineDynamic quint{Int(5), scalar_mul(c, Int(4), r)};
    CHECK(verify_translation_identity(c, quint, p, r, 12));

    AffineDynamic broken{Int(3), r}; // q != [2] r
    CHECK(kind_of([&] { verify_translation_identity(c, broken, p, r, 5); }) ==
          ErrorKind::PreconditionFailed);
}

TEST_CASE("orbit intersection matches a direct double loop") {
    PrimeCurve c = test_curve();
    CurvePoint p = find_point(c, Int(7));
    AffineDynamic g1{Int(2), find_point(c, Int(23))};
    AffineDynamic g2{Int(3), find_point(c, Int(41))};
    const unsigned long n_max = 12;

    auto fast = orbit_intersection(c, g1, p, g2, p, n_max);

    std::vector<std::pair<unsigned long, unsigned long>> slow;
    for (unsigned long i = 0; i <= n_max; ++i) {
        CurvePoint lhs = iterate_map(c, g1, p, i);
        for (unsigned long j = 0; j <= n_max; ++j) {
            if (lhs == iterate_map(c, g2, p, j)) slow.emplace_back(i, j);
        }
    }
    CHECK(fast == slow);
    REQUIRE(!fast.empty());
    CHECK(fast.front() == std::pair<unsigned long, unsigned long>(0, 0));
}

TEST_CASE("imaginary quadratic orders") {
    QuadOrder gauss(Int(-4)); // w = i
    CHECK(gauss.s == 0);
    CHECK(gauss.t == -1);
    CHECK(qo_norm(gauss, qe(3, 4)) == 25);
    CHECK(qo_conj(gauss, qe(3, 4)) == qe(3, -4));
    CHECK(qo_pow(gauss, qe(1, 1), 4) == qe(-4, 0)); // (1+i)^4

    QuadOrder eisen(Int(-3)); // w^2 = w - 1
    CHECK(eisen.s == 1);
    CHECK(eisen.t == -1);
    CHECK(qo_norm(eisen, qe(1, 1)) == 3);
    CHECK(qo_mul(eisen, qe(0, 1), qe(0, 1)) == qe(-1, 1));

    CHECK(kind_of([] { QuadOrder(Int(4)); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { QuadOrder(Int(-5)); }) == ErrorKind::InvalidInput);
}

TEST_CASE("conjugation and norm are multiplicative in the order") {
    std::mt19937_64 rng(1123);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (long disc : {-3L, -4L, -7L, -8L, -11L}) {
        QuadOrder o((Int(disc)));
        for (int iter = 0; iter < 30; ++iter) {
            QuadElem a = qe(coef(rng), coef(rng));
            QuadElem b = qe(coef(rng), coef(rng));
            QuadElem ab = qo_mul(o, a, b);
            CHECK(qo_conj(o, ab) == qo_mul(o, qo_conj(o, a), qo_conj(o, b)));
            CHECK(qo_norm(o, ab) == qo_norm(o, a) * qo_norm(o, b));
            CHECK(qo_norm(o, a) >= 0);
        }
    }
}

TEST_CASE("endomorphism data for the gaussian example") {
    EndoInstance inst{QuadOrder(Int(-4)), qe(2, 0), qe(1, 1), 2, 4};
    EndoData data = endo_data(inst);
    CHECK(data.u == qe(-40, 0));
    CHECK(data.d == 25);

    // The coincidence parameters in [1,10]^2 are exactly (2, 4).
    for (unsigned long m = 1; m <= 10; ++m) {
        for (unsigned long n = 1; n <= 10; ++n) {
            CHECK(endo_equation_check(inst, m, n) == (m == 2 && n == 4));
        }
    }

    EndoInstance bad = inst;
    bad.m0 = 0;
    CHECK(kind_of([&] { endo_data(bad); }) == ErrorKind::InvalidInput);
    EndoInstance unit{QuadOrder(Int(-4)), qe(0, 1), qe(1, 1), 1, 1};
    CHECK(kind_of([&] { endo_equation_check(unit, 1, 1); }) == ErrorKind::PreconditionFailed);
    CHECK(kind_of([&] { endo_equation_check(inst, 0, 1); }) == ErrorKind::InvalidInput);
}

TEST_CASE("the marked pair always satisfies the coincidence equation") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<long> coef(-3, 3);
    std::uniform_int_distribution<unsigned long> expo(1, 3);
    int done = 0;
    while (done < 25) {
        long disc = (coef(rng) % 2 == 0) ? -4 : -7;
        QuadOrder o((Int(disc)));
        QuadElem f = qe(coef(rng), coef(rng));
        QuadElem h = qe(coef(rng), coef(rng));
        if (qo_norm(o, f) <= 1 || qo_norm(o, h) <= 1) continue;
        EndoInstance inst{o, f, h, expo(rng), expo(rng)};
        CHECK(endo_equation_check(inst, inst.m0, inst.n0));
        ++done;
    }
}

TEST_CASE("reduction of the gaussian instance to a unit equation") {
    EndoInstance inst{QuadOrder(Int(-4)), qe(2, 0), qe(1, 1), 2, 4};
    DynamicsReduction red = dynamics_to_unit_equation(inst);
    CHECK(!red.common_iterate);
    REQUIRE(red.instance.has_value());
    const UnitEquationInstance& eq = *red.instance;
    CHECK(q_equal(eq.a, Quaternion::one()));
    CHECK(q_equal(eq.b, Quaternion::one()));
    // u = -40, d = 25: a' = (u+d)/u = 3/8, b' = -d/u = 5/8, both real here.
    CHECK(q_equal(eq.a_prime, Quaternion::from_rat(Rat(3, 8), Rat(0), Rat(0), Rat(0))));
    CHECK(q_equal(eq.b_prime, Quaternion::from_rat(Rat(5, 8), Rat(0), Rat(0), Rat(0))));
    REQUIRE(eq.gamma1.generators.size() == 1);
    REQUIRE(eq.gamma2.generators.size() == 1);
    CHECK(q_equal(eq.gamma1.generators[0], Quaternion::from_rat(Rat(1), Rat(1), Rat(0), Rat(0))));
    CHECK(q_equal(eq.gamma2.generators[0], Quaternion::from_rat(Rat(2), Rat(0), Rat(0), Rat(0))));
    CHECK(eq.gamma1.labels == std::vector<std::string>{"h"});
    CHECK(eq.gamma2.labels == std::vector<std::string>{"f"});

    // The marked coincidence appears as the unique solution in the window.
    RunConfig cfg;
    cfg.oracle_len = 10;
    SolutionSet solved = solve_main(eq, cfg);
    SolutionSet oracle = brute_force_oracle(eq, cfg);
    REQUIRE(solved.solutions.size() == 1);
    REQUIRE(oracle.solutions.size() == 1);
    CHECK(solved.solutions[0].f_word.indices == std::vector<int>{0, 0, 0, 0});
    CHECK(solved.solutions[0].g_word.indices == std::vector<int>{0, 0});
    CHECK(solved.solutions[0].f_word == oracle.solutions[0].f_word);
    CHECK(solved.solutions[0].g_word == oracle.solutions[0].g_word);
}

TEST_CASE("reduction with an irrational embedding keeps norms exact") {
    // D = -7: w embeds with an irrational imaginary part sqrt(7)/2.
    EndoInstance inst{QuadOrder(Int(-7)), qe(2, 0), qe(0, 1), 1, 1};
    DynamicsReduction red = dynamics_to_unit_equation(inst);
    REQUIRE(red.instance.has_value());
    const UnitEquationInstance& eq = *red.instance;
    CHECK(q_norm(eq.gamma1.generators[0]) == Rat(2)); // N(w) = 2
    CHECK(q_norm(eq.a_prime) == Rat(1, 4));           // N(u+d)/N(u) = 2/8
    CHECK(q_norm(eq.b_prime) == Rat(1, 2));           // N(d)/N(u) = 4/8
    // The defining identity holds at the marked pair: h a' + f b' = 1.
    Quaternion lhs = q_add(q_mul(eq.gamma1.generators[0], eq.a_prime),
                           q_mul(eq.gamma2.generators[0], eq.b_prime));
    CHECK(q_equal(lhs, Quaternion::one()));
}

TEST_CASE("identical maps short-circuit to a common iterate") {
    EndoInstance inst{QuadOrder(Int(-4)), qe(2, 0), qe(2, 0), 1, 1};
    DynamicsReduction red = dynamics_to_unit_equation(inst);
    CHECK(red.common_iterate);
    CHECK(!red.instance.has_value());
}
