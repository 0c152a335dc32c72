#pragma once

#include "quatunit/baker.hpp"
#include "quatunit/semigroup.hpp"

namespace quatunit {

// a f a' + b g b' = 1 with f, g ranging over the two semigroups.
struct UnitEquationInstance {
    Quaternion a, a_prime, b, b_prime;
    SemigroupSpec gamma1, gamma2;
};

struct RunConfig {
    int oracle_len = 12;
    unsigned precision_bits = 128;
    unsigned long element_cap = 10000000;
    int threads = 1;
};

struct SolutionPair {
    Word f_word, g_word;
    Quaternion f_value, g_value;
};

// Two-sided comparability constants between the exponent heights of the two
// sides: max n <= C2' * max m away from the degenerate locus, and C1 the
// symmetric counterpart.
struct Comparability {
    Rat C1, C2, C2_prime;
};

// Cap with overflow classification against 2^64.
struct CapValue {
    Int value;
    bool overflow = false;
};

struct ReductionBound {
    CapValue h_cap;
    BakerCertificate baker;
    Comparability comparability;
    bool c_term_dropped = false;
    RInterval c_log;     // ln(|a a'| / |b b'|); [0,0] when dropped
    Int small_threshold; // M*: below it the direct small-exponent bound applies
    Int h_small;
    Int h_baker;
};

struct LocusBound {
    CapValue n_cap;
    bool via_baker = false;
    bool empty_constraint = false; // the hyperplane misses the semigroup plane
    std::optional<BakerCertificate> baker;
    Rat c_prime;    // folds the pi coefficient into the exponent height
    RInterval big_m; // hyperplane offset M = N(d) / (2 |w|)
};

enum class Completeness { OracleCompleteBelowCap, OracleWindowOnly };

struct Certificate {
    std::optional<ReductionBound> reduction;
    std::optional<LocusBound> locus;
    int oracle_window = 0;
};

struct SolutionSet {
    std::vector<SolutionPair> solutions;
    Certificate certificate;
    Completeness status = Completeness::OracleWindowOnly;
};

// Embedding of a commutative quaternion semigroup into the complex numbers:
// all generators lie in span{1, u} for a pure imaginary unit u.
struct CommutativeEmbedding {
    Quaternion axis;
    std::vector<AlgebraicComplex> images;
};

void validate_instance(const UnitEquationInstance& inst);

// Exact test of 2<d, f> == N(d) with d = a^-1 a'^-1, equivalent to
// |1 - a f a'| == |a f a'|.
bool hyperplane_test(const Quaternion& a, const Quaternion& a_prime, const Quaternion& f);

CommutativeEmbedding embed_commutative(const SemigroupSpec& spec);

// Certified exponent-height cap for solutions off the degenerate locus.
ReductionBound reduction_bound(const UnitEquationInstance& inst, unsigned bits);

// Certified cap for semigroup elements on the hyperplane 2<d, f> = N(d).
LocusBound locus_bound(const Quaternion& a, const Quaternion& a_prime,
                       const SemigroupSpec& gamma, unsigned bits);

SolutionSet solve_reduction(const UnitEquationInstance& inst, const RunConfig& cfg);

struct LocusSolution {
    Word f_word;
    Quaternion f_value;
};

struct LocusResult {
    std::vector<LocusSolution> on_locus;
    LocusBound bound;
    Completeness status = Completeness::OracleWindowOnly;
    int oracle_window = 0;
};

LocusResult solve_locus(const Quaternion& a, const Quaternion& a_prime,
                        const SemigroupSpec& gamma, const RunConfig& cfg);

// Full pipeline: reduction branch plus locus branch mapped through the
// second semigroup; gamma1 must be commutative.
SolutionSet solve_main(const UnitEquationInstance& inst, const RunConfig& cfg);

// Independent double enumeration with exact verification; no analytic bounds.
SolutionSet brute_force_oracle(const UnitEquationInstance& inst, const RunConfig& cfg);

// 2x2 rational matrices f_n = [[1, n], [0, 1]], g_n = f_n^2 solve
// 2 f - g = 1 for every n: the finiteness phenomenon needs a division ring.
struct Mat2 {
    Rat m00, m01, m10, m11;
};

struct MatrixPair {
    long n = 0;
    Mat2 f, g;
    bool verified = false;
};

std::vector<MatrixPair> matrix_counterexample(long n_max);

} // namespace quatunit
