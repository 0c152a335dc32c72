#pragma once

#include "quatunit/algebraic.hpp"

namespace quatunit {

// Certified enclosures with exact rational endpoints. Target width 2^-bits;
// working precision escalates by doubling with a hard cap of 2^16 bits,
// raising ResourceLimit if the cap is hit.
RInterval pi_interval(unsigned bits);
RInterval log_interval_rat(const Rat& x, unsigned bits);
RInterval exp_interval_rat(const Rat& x, unsigned bits);

// Natural log of a positive algebraic value.
RInterval log_interval(const AlgebraicReal& x, unsigned bits);

// Argument of a nonzero complex algebraic value, normalized into [0, 2*pi).
// Exact [0,0] on the positive real axis; a pi-enclosure on the negative one.
RInterval arg_interval(const AlgebraicComplex& z, unsigned bits);

// Absolute logarithmic Weil height, h = (1/deg) * ln(Mahler measure of the
// minimal polynomial), enclosed by Graeffe root-squaring and Landau's
// inequality. Nonnegative by construction.
RInterval weil_height_poly(const IntPoly& minpoly);
RInterval weil_height(const AlgebraicReal& x);
RInterval weil_height_complex(const AlgebraicComplex& z);

} // namespace quatunit
