#pragma once

#include <utility>
#include <vector>

#include "group.hpp"
#include "matrix.hpp"

namespace ncgeo {

// Function on the group with exact rational values, the coefficient ring of
// every form below.
struct GroupFunction {
    std::vector<Rational> values;

    GroupFunction() = default;
    explicit GroupFunction(std::size_t order) : values(order) {}
    static GroupFunction constant(std::size_t order, const Rational& c);
    static GroupFunction delta(std::size_t order, int x);

    bool is_zero() const;
    bool is_constant() const;
    bool operator==(const GroupFunction& o) const = default;
    GroupFunction operator+(const GroupFunction& o) const;
    GroupFunction operator-(const GroupFunction& o) const;
    GroupFunction operator-() const;
    GroupFunction operator*(const GroupFunction& o) const;  // pointwise
    GroupFunction operator*(const Rational& c) const;
};

// (R_a f)(x) = f(xa)
GroupFunction shift_right(const GroupTable& G, int a, const GroupFunction& f);

// 1-form with left coefficients, alpha = sum_a comp[a] . E_a over positions of C
struct OneForm {
    std::vector<GroupFunction> comp;

    OneForm() = default;
    OneForm(std::size_t csize, std::size_t order)
        : comp(csize, GroupFunction(order)) {}
    bool is_zero() const;
    bool operator==(const OneForm& o) const = default;
    OneForm operator+(const OneForm& o) const;
    OneForm operator-(const OneForm& o) const;
    OneForm operator*(const Rational& c) const;
};

// 2-form in the quotient basis of a TwoFormSpace
struct TwoForm {
    std::vector<GroupFunction> comp;

    TwoForm() = default;
    TwoForm(std::size_t dim2, std::size_t order) : comp(dim2, GroupFunction(order)) {}
    bool is_zero() const;
    bool operator==(const TwoForm& o) const = default;
    TwoForm operator+(const TwoForm& o) const;
    TwoForm operator-(const TwoForm& o) const;
    TwoForm operator*(const Rational& c) const;
};

// basis of the sigma-invariant subspace P_g, vectors over the domain D_g
struct PgBasis {
    int g = 0;                  // element index of the product
    std::vector<int> domain;    // D_g = {a in C : a^-1 g in C}, ascending
    std::vector<std::vector<Rational>> vectors;  // orbit-sum indicators over domain
};

// The quotient Omega^2 for (G, C): chosen basis pairs, the projection matrix
// from the |C|^2 pair space, and the defining relation rows.
struct TwoFormSpace {
    const GroupTable* group = nullptr;
    AdSet C;
    std::size_t dim2 = 0;
    std::vector<std::pair<int, int>> basis_pairs;  // element indices (a, b)
    Matrix wedge_matrix;    // dim2 x |C|^2, pair index = ia*|C|+ib
    Matrix relation_rows;   // one row per Lemma relation, over pair space
    std::vector<PgBasis> pg;
    std::vector<TwoForm> dE;  // Maurer-Cartan differentials per position of C

    std::size_t csize() const { return C.size(); }
    std::size_t order() const { return group->order(); }
    std::size_t pair_index(std::size_t ia, std::size_t ib) const { return ia * C.size() + ib; }
};

// (partial^a f)(x) = f(xa) - f(x)
GroupFunction partial(const AdSet& C, int a, const GroupFunction& f);

// df = sum_a (partial^a f) . E_a
OneForm differential(const AdSet& C, const GroupFunction& f);

// R_a f, the bimodule push E_a . f = R_a(f) . E_a
GroupFunction push_right(const AdSet& C, int a, const GroupFunction& f);

// Psi(E_a x E_b) = E_{aba^-1} x E_a on labels
std::pair<int, int> braiding(const AdSet& C, std::pair<int, int> ab);

// permutation matrix of Psi on the |C|^2 pair space
Matrix psi_matrix(const AdSet& C);

// sigma-orbit-sum bases of the P_g, g over the product set of C, ascending
std::vector<PgBasis> invariant_subspaces(const AdSet& C);

// the pair-space vector sum_{ab=g} lambda_a e_{(a,b)} of one P_g element
std::vector<Rational> relation_vector(const AdSet& C, const PgBasis& pb,
                                      const std::vector<Rational>& lambda);

TwoFormSpace build_omega2(const AdSet& C);

TwoForm wedge(const TwoFormSpace& space, const OneForm& alpha, const OneForm& beta);

TwoForm d_one_form(const TwoFormSpace& space, const OneForm& alpha);

// unit 1-form E at position ia of C
OneForm unit_one_form(const TwoFormSpace& space, std::size_t ia);
// theta = sum_a E_a
OneForm theta_form(const TwoFormSpace& space);

}  // namespace ncgeo
