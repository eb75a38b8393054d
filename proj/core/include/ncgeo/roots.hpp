#ifndef NCGEO_ROOTS_HPP
#define NCGEO_ROOTS_HPP

#include <string>
#include <vector>

#include "poly.hpp"

namespace ncgeo {

struct RootReport {
    std::string value;       // decimal string, "re" or "re+imi"
    double re = 0.0;         // double approximations, for quick inspection only
    double im = 0.0;
    int multiplicity = 1;
    double residual = 0.0;   // |p_monic(z)| at the working precision
    std::string residual_str;
};

// All complex roots of p with certified multiplicities (exact square-free
// split, then Aberth-Ehrlich refinement in MPFR). Deterministic output,
// sorted by (re, im). `digits` controls the printed decimal precision.
std::vector<RootReport> find_roots(const Poly& p, unsigned digits = 30);

}  // namespace ncgeo

#endif
