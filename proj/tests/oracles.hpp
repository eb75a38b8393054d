#pragma once

#include <utility>
#include <vector>

#include "ncgeo/dirac.hpp"
#include "ncgeo/finset.hpp"

// independent reference computations shared by the unit tests and the
// acceptance gate

namespace oracle {

using namespace ncgeo;

// brute-force relation span: the fixed space of the braiding on pairs,
// returned as rows
inline Matrix ker_id_minus_psi_rows(const AdSet& C) {
    std::size_t n2 = C.size() * C.size();
    Matrix ns = (Matrix::identity(n2) - psi_matrix(C)).nullspace();
    return ns.transpose();
}

// det(xI - M) sampled at x = 0..points-1 and interpolated
inline Poly char_poly_interpolated(const Matrix& M, std::size_t points) {
    std::vector<std::pair<Rational, Rational>> pts;
    for (std::size_t k = 0; k < points; ++k) {
        Rational x(static_cast<long>(k));
        Matrix S = Matrix::identity(M.rows()) * x - M;
        pts.emplace_back(x, S.det());
    }
    return lagrange_interpolate(pts);
}

inline Matrix kron(const Matrix& A, const Matrix& B) {
    Matrix out(A.rows() * B.rows(), A.cols() * B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            for (std::size_t k = 0; k < B.rows(); ++k)
                for (std::size_t l = 0; l < B.cols(); ++l)
                    out.at(i * B.rows() + k, j * B.cols() + l) = A.at(i, j) * B.at(k, l);
    return out;
}

inline Connection zero_connection(const TwoFormSpace& sp) {
    Connection c;
    c.comps.assign(sp.csize(),
                   std::vector<GroupFunction>(sp.csize(), GroupFunction(sp.order())));
    return c;
}

inline Connection maurer_cartan_connection(const TwoFormSpace& sp) {
    Connection c = zero_connection(sp);
    for (std::size_t i = 0; i < sp.csize(); ++i)
        c.comps[i][i] = GroupFunction::constant(sp.order(), 1);
    return c;
}

// the unique torsion and cotorsion free regular point for the order-6 group
inline Connection levi_civita_s3(const TwoFormSpace& sp) {
    Connection c = zero_connection(sp);
    for (std::size_t iw = 0; iw < sp.csize(); ++iw)
        for (std::size_t ic = 0; ic < sp.csize(); ++ic)
            c.comps[iw][ic] = GroupFunction::constant(
                sp.order(), iw == ic ? Rational(2, 3) : Rational(-1, 3));
    return c;
}

// torsion-free family member with left coefficients: rows follow the cyclic
// pattern (al+1, ga, be | ga, be+1, al | be, al, ga+1), ga = -1 - al - be
inline std::vector<Rational> prop_family_vector(const TwoFormSpace& sp,
                                                const GroupFunction& al,
                                                const GroupFunction& be) {
    std::size_t order = sp.order();
    GroupFunction ga = GroupFunction::constant(order, -1) - al - be;
    GroupFunction one = GroupFunction::constant(order, 1);
    Connection c;
    c.comps = {{al + one, ga, be}, {ga, be + one, al}, {be, al, ga + one}};
    return connection_to_vector(sp, c);
}

// same pattern with coefficients written from the right, converted to the
// left-normalized storage via f E_b = E_b R_{b^-1} f in reverse
inline std::vector<Rational> mirror_family_vector(const TwoFormSpace& sp,
                                                  const GroupFunction& ap,
                                                  const GroupFunction& bp) {
    std::size_t order = sp.order();
    const GroupTable& G = *sp.group;
    GroupFunction gp = GroupFunction::constant(order, -1) - ap - bp;
    GroupFunction one = GroupFunction::constant(order, 1);
    std::vector<std::vector<GroupFunction>> right = {
        {ap + one, gp, bp}, {gp, bp + one, ap}, {bp, ap, gp + one}};
    Connection c = zero_connection(sp);
    for (std::size_t iw = 0; iw < sp.csize(); ++iw)
        for (std::size_t ic = 0; ic < sp.csize(); ++ic)
            c.comps[iw][ic] = shift_right(G, sp.C.element(ic), right[iw][ic]);
    return connection_to_vector(sp, c);
}

// affine family spanned by a parametrized constructor over two free functions
template <typename F>
inline AffineModuli family_from_pattern(const TwoFormSpace& sp, F&& make) {
    std::size_t order = sp.order();
    GroupFunction z(order);
    std::vector<Rational> base = make(z, z);
    Matrix basis(connection_ambient_dim(sp), 2 * order);
    std::size_t col = 0;
    for (int which = 0; which < 2; ++which)
        for (std::size_t x = 0; x < order; ++x) {
            GroupFunction d = GroupFunction::delta(order, static_cast<int>(x));
            std::vector<Rational> v = make(which == 0 ? d : z, which == 0 ? z : d);
            for (std::size_t i = 0; i < v.size(); ++i) basis.at(i, col) = v[i] - base[i];
            ++col;
        }
    return AffineModuli{connection_ambient_dim(sp), base, basis, true, "reference family"};
}

// +1 on odd permutations, -1 on even ones, in the builtin order-6 labeling
inline GroupFunction alternating_character(const GroupTable& G) {
    GroupFunction chi(G.order());
    for (std::size_t x = 0; x < G.order(); ++x)
        chi.values[x] = (x == 1 || x == 2 || x == 5) ? 1 : -1;
    return chi;
}

inline OneOneTensor unit_cotensor(std::size_t n, std::size_t order) {
    OneOneTensor h(n, order);
    for (std::size_t a = 0; a < n; ++a) h.comp[a][a] = GroupFunction::constant(order, 1);
    return h;
}

inline bool all_zero(const std::vector<TwoForm>& forms) {
    for (const auto& f : forms)
        if (!f.is_zero()) return false;
    return true;
}

// deterministic filler values for sets without a distinguished connection
inline Connection synthetic_connection(const TwoFormSpace& sp) {
    Connection conn = zero_connection(sp);
    for (std::size_t iw = 0; iw < sp.csize(); ++iw)
        for (std::size_t ic = 0; ic < sp.csize(); ++ic)
            for (std::size_t x = 0; x < sp.order(); ++x)
                conn.comps[iw][ic].values[x] =
                    rat(static_cast<long>((2 * iw + ic + x) % 3) - 1,
                        static_cast<long>(iw + 2));
    return conn;
}

inline BraidedGammas synthetic_gammas(std::size_t nlabels, std::size_t dimw) {
    BraidedGammas g;
    g.dimw = dimw;
    for (std::size_t i = 0; i < nlabels; ++i) {
        Matrix mtx(dimw, dimw);
        for (std::size_t r = 0; r < dimw; ++r)
            for (std::size_t c = 0; c < dimw; ++c)
                mtx.at(r, c) = Rational(static_cast<long>((r + 2 * c + i) % 3) - 1);
        g.gamma.push_back(mtx);
    }
    return g;
}

struct S3Fixture {
    GroupTable G;
    AdSet C;
    TwoFormSpace space;
    Coframing cf;

    S3Fixture() : G(builtin_s3()) {
        C = validate_ad_set(G, {1, 2, 5});
        space = build_omega2(C);
        cf = killing_coframing(space);
    }
};

}  // namespace oracle
