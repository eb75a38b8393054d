#include "ncgeo/dirac.hpp"

namespace ncgeo {

BraidedGammas tautological_gammas(const AdSet& C, const Representation& W) {
    KillingForm kf = killing_form(C);
    if (!kf.semisimple)
        throw DegenerateKilling("braided-Killing form is degenerate, no tautological gammas");
    std::size_t n = C.size();
    BraidedGammas g;
    g.dimw = W.dim;
    for (std::size_t ia = 0; ia < n; ++ia) {
        Matrix acc(W.dim, W.dim);
        for (std::size_t ib = 0; ib < n; ++ib) {
            const Rational& c = kf.eta_inv->at(ia, ib);
            if (c != 0) acc = acc + W.of_minus_id(C.element(ib)) * c;
        }
        g.gamma.push_back(std::move(acc));
    }
    return g;
}

bool gammas_equivariant(const AdSet& C, const Representation& W, const BraidedGammas& g) {
    const GroupTable& G = *C.group;
    for (int x = 0; x < static_cast<int>(G.order()); ++x)
        for (std::size_t ia = 0; ia < C.size(); ++ia) {
            std::size_t im = static_cast<std::size_t>(C.index_of(G.conj(x, C.element(ia))));
            if (W.of(x) * g.gamma[ia] != g.gamma[im] * W.of(x)) return false;
        }
    return true;
}

std::vector<Rational> braided_casimir(const AdSet& C) {
    const GroupTable& G = *C.group;
    KillingForm kf = killing_form(C);
    if (!kf.semisimple)
        throw DegenerateKilling("braided-Killing form is degenerate, no braided Casimir");
    std::vector<Rational> coeffs(G.order());
    for (std::size_t ia = 0; ia < C.size(); ++ia)
        for (std::size_t ib = 0; ib < C.size(); ++ib) {
            const Rational& c = kf.eta_inv->at(ia, ib);
            if (c == 0) continue;
            int a = C.element(ia), b = C.element(ib);
            coeffs[static_cast<std::size_t>(G.mul(a, b))] += c;
            coeffs[static_cast<std::size_t>(a)] -= c;
            coeffs[static_cast<std::size_t>(b)] -= c;
            coeffs[static_cast<std::size_t>(G.id())] += c;
        }
    return coeffs;
}

Matrix casimir_action(const AdSet& C, const Representation& W) {
    const GroupTable& G = *C.group;
    std::vector<Rational> coeffs = braided_casimir(C);
    Matrix acc(W.dim, W.dim);
    for (std::size_t g = 0; g < G.order(); ++g)
        if (coeffs[g] != 0) acc = acc + W.of(static_cast<int>(g)) * coeffs[g];
    return acc;
}

Matrix partial_matrix(const AdSet& C, std::size_t ia) {
    const GroupTable& G = *C.group;
    int a = C.element(ia);
    Matrix M(G.order(), G.order());
    for (std::size_t x = 0; x < G.order(); ++x) {
        M.at(x, static_cast<std::size_t>(G.mul(static_cast<int>(x), a))) += 1;
        M.at(x, x) -= 1;
    }
    return M;
}

Matrix dirac_matrix(const TwoFormSpace& space, const Connection& conn,
                    const Representation& W, const BraidedGammas& g) {
    const GroupTable& G = *space.group;
    std::size_t n = space.csize();
    std::size_t order = space.order();
    std::size_t dw = g.dimw;
    Matrix D(order * dw, order * dw);
    for (std::size_t ia = 0; ia < n; ++ia) {
        Matrix P = partial_matrix(space.C, ia);
        for (std::size_t x = 0; x < order; ++x)
            for (std::size_t y = 0; y < order; ++y) {
                const Rational& p = P.at(x, y);
                if (p == 0) continue;
                for (std::size_t s = 0; s < dw; ++s)
                    for (std::size_t t = 0; t < dw; ++t)
                        D.at(x * dw + s, y * dw + t) += p * g.gamma[ia].at(s, t);
            }
    }
    for (std::size_t ib = 0; ib < n; ++ib) {
        Matrix tau = W.of_minus_id(G.inv(space.C.element(ib)));
        for (std::size_t ia = 0; ia < n; ++ia) {
            Matrix M = g.gamma[ia] * tau;
            for (std::size_t x = 0; x < order; ++x) {
                const Rational& c = conn.comps[ib][ia].values[x];
                if (c == 0) continue;
                for (std::size_t s = 0; s < dw; ++s)
                    for (std::size_t t = 0; t < dw; ++t)
                        D.at(x * dw + s, x * dw + t) -= c * M.at(s, t);
            }
        }
    }
    return D;
}

Spectrum spectrum(const Matrix& D, int digits) {
    Spectrum s;
    s.char_poly = char_poly(D);
    s.roots = find_roots(s.char_poly, static_cast<unsigned>(digits));
    return s;
}

Rational trace_d_squared(const Matrix& D) {
    Rational t = 0;
    for (std::size_t i = 0; i < D.rows(); ++i)
        for (std::size_t j = 0; j < D.cols(); ++j) t += D.at(i, j) * D.at(j, i);
    return t;
}

ConnesReport connes_necessary_check(const AdSet& C, const BraidedGammas& g) {
    const GroupTable& G = *C.group;
    ConnesReport rep;
    for (std::size_t ia = 0; ia < C.size(); ++ia) {
        int a = C.element(ia);
        int a2 = G.mul(a, a);
        if (a2 != G.id() && !C.contains(a2)) continue;
        Matrix sq = g.gamma[ia] * g.gamma[ia];
        if (!sq.is_zero())
            rep.failures.push_back({"gamma_a^2 = 0", G.label(a), sq});
    }
    std::vector<int> targets{G.id()};
    for (std::size_t i = 0; i < C.size(); ++i) targets.push_back(C.element(i));
    for (int q : targets) {
        Matrix acc(g.dimw, g.dimw);
        for (std::size_t ia = 0; ia < C.size(); ++ia)
            for (std::size_t ib = 0; ib < C.size(); ++ib)
                if (G.mul(C.element(ia), C.element(ib)) == q)
                    acc = acc + g.gamma[ia] * g.gamma[ib];
        if (!acc.is_zero())
            rep.failures.push_back({"sum_{ab=q} gamma_a gamma_b = 0", G.label(q), acc});
    }
    rep.passed = rep.failures.empty();
    return rep;
}

}  // namespace ncgeo
