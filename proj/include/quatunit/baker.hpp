#pragma once

#include "quatunit/transcendental.hpp"

namespace quatunit {

// One multiplicative generator of a linear form in logarithms: a nonzero
// algebraic alpha with a fixed branch lambda of its logarithm (e^lambda =
// alpha) and a degree bound for Q(alpha).
struct LogGenerator {
    AlgebraicComplex alpha;
    RInterval lambda_re, lambda_im;
    unsigned long degree_bound = 1;
};

// lambda = ln(alpha) for real alpha > 0.
LogGenerator log_generator_positive_real(const AlgebraicReal& alpha, unsigned bits);
// lambda = i * arg(v) for |v| = 1 (checked exactly), arg in [0, 2*pi).
LogGenerator log_generator_unit(const AlgebraicComplex& v, unsigned bits);
// alpha = -1, lambda = i*pi.
LogGenerator log_generator_minus_one(unsigned bits);

// Certified statement: every nonzero integer combination
// Lambda = sum a_i lambda_i satisfies |Lambda| > k * H^-C, H = max(1, |a_i|).
struct BakerCertificate {
    ScaledRat k;
    Rat C;
    unsigned long r = 0;
    unsigned long degree = 1;
    std::vector<LogGenerator> generators;
};

// C = C(r,d) * prod h'(lambda_i), all factors rounded up, with
// C(r,d) = 18 * (r+1)! * r^(r+1) * (32 d)^(r+2) * ln(2 r d) and
// h'(lambda) = max(h(alpha), |lambda|/d, 1/d); k is a certified dyadic lower
// bound of e^-C so the H = 1 case is immediate. degree_hint = 0 uses the
// product of the generator degree bounds for d.
BakerCertificate explicit_constants(const std::vector<LogGenerator>& gens,
                                    unsigned long degree_hint, unsigned bits);

// k * H^-C, exact when C is a small integer, else a certified dyadic floor.
ScaledRat lower_bound(const BakerCertificate& cert, const Int& H);

// Smallest verified integer H0 strictly past the turning point C/rate with
// scale * e^(-rate*H) < k * H^-C certified at H0; the ratio is monotone
// beyond the turning point, so the inequality holds for every H >= H0.
Int solve_height_cap(const BakerCertificate& cert, const RInterval& rate,
                     const RInterval& scale, unsigned bits);

} // namespace quatunit
