#pragma once

#include <string>
#include <vector>

#include "poly.hpp"
#include "representation.hpp"
#include "riemannian.hpp"
#include "roots.hpp"

namespace ncgeo {

struct BraidedGammas {
    std::size_t dimw = 0;
    std::vector<Matrix> gamma;  // per position of C, dimw x dimw
};

// gamma_a = sum_b eta^{-1}_{ab} rho_W(b - e); degenerate Killing form rejected
BraidedGammas tautological_gammas(const AdSet& C, const Representation& W);

// gamma_{gag^-1} = rho(g) gamma_a rho(g)^-1 for all g
bool gammas_equivariant(const AdSet& C, const Representation& W, const BraidedGammas& g);

// group algebra coefficients of sum_{a,b} eta^{-1}_{ab} (a - e)(b - e)
std::vector<Rational> braided_casimir(const AdSet& C);
Matrix casimir_action(const AdSet& C, const Representation& W);

// matrix of partial^a on functions, entry (x, y) = [y = xa] - [y = x]
Matrix partial_matrix(const AdSet& C, std::size_t ia);

// Dirac operator partial^a gamma_a - A_b{}^a gamma_a tau_W^b on functions
// tensor spinors, function index outer
Matrix dirac_matrix(const TwoFormSpace& space, const Connection& conn,
                    const Representation& W, const BraidedGammas& g);

struct Spectrum {
    Poly char_poly;  // integer-normalized characteristic polynomial
    std::vector<RootReport> roots;
};

Spectrum spectrum(const Matrix& D, int digits = 30);

Rational trace_d_squared(const Matrix& D);

struct ConnesFailure {
    std::string condition;
    std::string where;
    Matrix value;
};

struct ConnesReport {
    bool passed = true;
    std::vector<ConnesFailure> failures;
};

// necessary nilpotency conditions: gamma_a^2 = 0 whenever a^2 lands back in
// C u {e}, and sum_{ab=g} gamma_a gamma_b = 0 for every g in C u {e}
ConnesReport connes_necessary_check(const AdSet& C, const BraidedGammas& g);

}  // namespace ncgeo
