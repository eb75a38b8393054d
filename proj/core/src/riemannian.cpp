#include "ncgeo/riemannian.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ncgeo/representation.hpp"

namespace ncgeo {

KillingForm killing_form(const AdSet& C, bool offset) {
    const GroupTable& G = *C.group;
    auto ncount = [&](int g) {
        int cnt = 0;
        for (std::size_t i = 0; i < C.size(); ++i) {
            int c = C.element(i);
            if (G.mul(c, g) == G.mul(g, c)) ++cnt;
        }
        return cnt;
    };
    std::size_t n = C.size();
    KillingForm kf;
    kf.eta = Matrix(n, n);
    for (std::size_t ia = 0; ia < n; ++ia)
        for (std::size_t ib = 0; ib < n; ++ib) {
            int ab = G.mul(C.element(ia), C.element(ib));
            Rational v = ncount(ab);
            if (offset)
                v = v - ncount(C.element(ia)) - ncount(C.element(ib)) + ncount(G.id());
            kf.eta.at(ia, ib) = v;
        }
    kf.eta_inv = kf.eta.inverse();
    kf.semisimple = kf.eta_inv.has_value();
    return kf;
}

OneForm Coframing::dual_form(const TwoFormSpace& space, std::size_t ia) const {
    std::size_t n = space.csize();
    OneForm alpha(n, space.order());
    for (std::size_t ib = 0; ib < n; ++ib)
        alpha.comp[ib] = shift_right(*space.group, space.C.element(ib), gmat[ib][ia]);
    return alpha;
}

Coframing coframing_from_functions(const TwoFormSpace& space,
                                   const std::vector<std::vector<GroupFunction>>& gmat) {
    std::size_t n = space.csize();
    std::size_t order = space.order();
    Coframing cf;
    cf.gmat = gmat;
    cf.gmat_inv.assign(n, std::vector<GroupFunction>(n, GroupFunction(order)));
    for (std::size_t x = 0; x < order; ++x) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = gmat[i][j].values[x];
        auto inv = m.inverse();
        if (!inv)
            throw NotInvertible("coframing coefficient matrix is singular at " +
                                space.group->label(static_cast<int>(x)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) cf.gmat_inv[i][j].values[x] = inv->at(i, j);
    }
    return cf;
}

Coframing coframing_from_cotensor(const TwoFormSpace& space, const Matrix& g_upper) {
    std::size_t n = space.csize();
    auto lower = g_upper.inverse();
    if (!lower) throw NotInvertible("metric cotensor is singular");
    std::vector<std::vector<GroupFunction>> gmat(
        n, std::vector<GroupFunction>(n, GroupFunction(space.order())));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            gmat[i][j] = GroupFunction::constant(space.order(), lower->at(i, j));
    Coframing cf;
    cf.gmat = std::move(gmat);
    cf.gmat_inv.assign(n, std::vector<GroupFunction>(n, GroupFunction(space.order())));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            cf.gmat_inv[i][j] = GroupFunction::constant(space.order(), g_upper.at(i, j));
    return cf;
}

Coframing killing_coframing(const TwoFormSpace& space) {
    KillingForm kf = killing_form(space.C);
    if (!kf.semisimple)
        throw DegenerateKilling("braided-Killing form is degenerate for this set");
    return coframing_from_cotensor(space, kf.eta);
}

Matrix metric_family(const KillingForm& kf, const Rational& lambda) {
    Matrix out = kf.eta;
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j) out.at(i, j) -= lambda;
    return out;
}

OneForm Connection::form(const TwoFormSpace& space, std::size_t which) const {
    OneForm alpha(space.csize(), space.order());
    alpha.comp = comps[which];
    return alpha;
}

std::size_t connection_ambient_dim(const TwoFormSpace& space) {
    return space.csize() * space.csize() * space.order();
}

Connection connection_from_vector(const TwoFormSpace& space, const std::vector<Rational>& v) {
    std::size_t n = space.csize();
    std::size_t order = space.order();
    Connection conn;
    conn.comps.assign(n, std::vector<GroupFunction>(n, GroupFunction(order)));
    for (std::size_t iw = 0; iw < n; ++iw)
        for (std::size_t ic = 0; ic < n; ++ic)
            for (std::size_t x = 0; x < order; ++x)
                conn.comps[iw][ic].values[x] = v[(iw * n + ic) * order + x];
    return conn;
}

std::vector<Rational> connection_to_vector(const TwoFormSpace& space, const Connection& conn) {
    std::size_t n = space.csize();
    std::size_t order = space.order();
    std::vector<Rational> v(connection_ambient_dim(space));
    for (std::size_t iw = 0; iw < n; ++iw)
        for (std::size_t ic = 0; ic < n; ++ic)
            for (std::size_t x = 0; x < order; ++x)
                v[(iw * n + ic) * order + x] = conn.comps[iw][ic].values[x];
    return v;
}

namespace {

// difference 1-form E_m - E_a as positions
OneForm basis_difference(const TwoFormSpace& space, std::size_t im, std::size_t ia) {
    OneForm beta(space.csize(), space.order());
    if (im == ia) return beta;
    beta.comp[im] = GroupFunction::constant(space.order(), 1);
    beta.comp[ia] = GroupFunction::constant(space.order(), -1);
    return beta;
}

}  // namespace

std::vector<TwoForm> torsion_of(const TwoFormSpace& space, const Connection& conn) {
    const GroupTable& G = *space.group;
    std::size_t n = space.csize();
    std::vector<TwoForm> out;
    for (std::size_t ia = 0; ia < n; ++ia) {
        int a = space.C.element(ia);
        TwoForm T = space.dE[ia];
        for (std::size_t ib = 0; ib < n; ++ib) {
            int b = space.C.element(ib);
            std::size_t im = static_cast<std::size_t>(space.C.index_of(G.conj(G.inv(b), a)));
            if (im == ia) continue;
            T = T + wedge(space, conn.form(space, ib), basis_difference(space, im, ia));
        }
        out.push_back(std::move(T));
    }
    return out;
}

std::vector<TwoForm> cotorsion_of(const TwoFormSpace& space, const Coframing& cf,
                                  const Connection& conn) {
    const GroupTable& G = *space.group;
    std::size_t n = space.csize();
    std::vector<TwoForm> out;
    for (std::size_t ia = 0; ia < n; ++ia) {
        int a = space.C.element(ia);
        OneForm dual = cf.dual_form(space, ia);
        TwoForm T = d_one_form(space, dual);
        for (std::size_t ic = 0; ic < n; ++ic) {
            int c = space.C.element(ic);
            std::size_t im = static_cast<std::size_t>(space.C.index_of(G.conj(c, a)));
            OneForm gamma = cf.dual_form(space, im) - dual;
            if (gamma.is_zero()) continue;
            T = T + wedge(space, gamma, conn.form(space, ic));
        }
        out.push_back(std::move(T));
    }
    return out;
}

std::vector<std::pair<int, TwoForm>> regularity_residuals(const TwoFormSpace& space,
                                                          const Connection& conn) {
    const GroupTable& G = *space.group;
    std::size_t n = space.csize();
    std::map<int, TwoForm> acc;
    for (std::size_t ia = 0; ia < n; ++ia)
        for (std::size_t ib = 0; ib < n; ++ib) {
            int q = G.mul(space.C.element(ia), space.C.element(ib));
            if (q == G.id() || space.C.contains(q)) continue;
            auto [it, fresh] = acc.try_emplace(q, TwoForm(space.dim2, space.order()));
            it->second =
                it->second + wedge(space, conn.form(space, ia), conn.form(space, ib));
        }
    return {acc.begin(), acc.end()};
}

std::vector<Rational> AffineModuli::point(const std::vector<Rational>& coeffs) const {
    std::vector<Rational> v = base;
    std::vector<Rational> dir = basis.apply(coeffs);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += dir[i];
    return v;
}

namespace {

AffineModuli solve_affine(
    const std::function<std::vector<Rational>(const std::vector<Rational>&)>& eval,
    std::size_t ambient, std::string description) {
    std::vector<Rational> zero(ambient);
    std::vector<Rational> c0 = eval(zero);
    Matrix L(c0.size(), ambient);
    for (std::size_t j = 0; j < ambient; ++j) {
        std::vector<Rational> v(ambient);
        v[j] = 1;
        std::vector<Rational> col = eval(v);
        for (std::size_t i = 0; i < c0.size(); ++i) L.at(i, j) = col[i] - c0[i];
    }
    AffineModuli m;
    m.ambient_dim = ambient;
    m.description = std::move(description);
    std::vector<Rational> rhs(c0.size());
    for (std::size_t i = 0; i < c0.size(); ++i) rhs[i] = -c0[i];
    auto part = L.solve(rhs);
    if (!part) {
        m.consistent = false;
        m.base.assign(ambient, Rational(0));
        m.basis = Matrix(ambient, 0);
        return m;
    }
    m.base = *part;
    m.basis = L.nullspace();
    return m;
}

std::vector<Rational> flatten_forms(const std::vector<TwoForm>& forms) {
    std::vector<Rational> out;
    for (const auto& tf : forms)
        for (const auto& f : tf.comp)
            out.insert(out.end(), f.values.begin(), f.values.end());
    return out;
}

}  // namespace

AffineModuli solve_torsion_free(const TwoFormSpace& space) {
    return solve_affine(
        [&](const std::vector<Rational>& v) {
            return flatten_forms(torsion_of(space, connection_from_vector(space, v)));
        },
        connection_ambient_dim(space), "torsion-free connections");
}

AffineModuli solve_cotorsion_free(const TwoFormSpace& space, const Coframing& cf) {
    return solve_affine(
        [&](const std::vector<Rational>& v) {
            return flatten_forms(cotorsion_of(space, cf, connection_from_vector(space, v)));
        },
        connection_ambient_dim(space), "cotorsion-free connections");
}

AffineModuli intersect_moduli(const AffineModuli& m1, const AffineModuli& m2) {
    AffineModuli out;
    out.ambient_dim = m1.ambient_dim;
    out.description = m1.description + " meet " + m2.description;
    if (!m1.consistent || !m2.consistent) {
        out.consistent = false;
        out.base.assign(out.ambient_dim, Rational(0));
        out.basis = Matrix(out.ambient_dim, 0);
        return out;
    }
    Matrix A = Matrix::hstack(m1.basis, -m2.basis);
    std::vector<Rational> rhs(m1.ambient_dim);
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = m2.base[i] - m1.base[i];
    auto part = A.solve(rhs);
    if (!part) {
        out.consistent = false;
        out.base.assign(out.ambient_dim, Rational(0));
        out.basis = Matrix(out.ambient_dim, 0);
        return out;
    }
    std::vector<Rational> s0(part->begin(), part->begin() + static_cast<long>(m1.dim()));
    out.base = m1.point(s0);
    Matrix N = A.nullspace();
    out.basis = Matrix(out.ambient_dim, N.cols());
    for (std::size_t k = 0; k < N.cols(); ++k) {
        std::vector<Rational> s(m1.dim());
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = N.at(i, k);
        std::vector<Rational> dir = m1.basis.apply(s);
        for (std::size_t i = 0; i < dir.size(); ++i) out.basis.at(i, k) = dir[i];
    }
    return out;
}

bool moduli_contains(const AffineModuli& m, const std::vector<Rational>& v) {
    if (!m.consistent) return false;
    std::vector<Rational> rhs(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) rhs[i] = v[i] - m.base[i];
    return m.basis.solve(rhs).has_value();
}

bool same_affine_span(const AffineModuli& m1, const AffineModuli& m2) {
    if (!m1.consistent || !m2.consistent) return m1.consistent == m2.consistent;
    if (m1.dim() != m2.dim()) return false;
    if (!moduli_contains(m1, m2.base)) return false;
    for (std::size_t k = 0; k < m2.basis.cols(); ++k) {
        std::vector<Rational> col(m2.ambient_dim);
        for (std::size_t i = 0; i < col.size(); ++i) col[i] = m2.basis.at(i, k);
        if (!m1.basis.solve(col)) return false;
    }
    return true;
}

RegularSearch find_regular(const TwoFormSpace& space, const AffineModuli& moduli,
                           std::size_t bound) {
    RegularSearch rs;
    if (!moduli.consistent) {
        rs.status = RegularSearch::Status::Empty;
        rs.note = "the family is empty";
        return rs;
    }
    std::size_t d = moduli.dim();
    if (d > bound)
        throw DimensionTooLarge("regular point search over " + std::to_string(d) +
                                " parameters exceeds the bound " + std::to_string(bound));

    auto residuals_at = [&](const std::vector<Rational>& params) {
        Connection conn = connection_from_vector(space, moduli.point(params));
        std::vector<Rational> flat;
        for (const auto& [q, tf] : regularity_residuals(space, conn))
            for (const auto& f : tf.comp)
                flat.insert(flat.end(), f.values.begin(), f.values.end());
        return flat;
    };

    std::vector<Rational> zero(d);
    std::vector<Rational> p0 = residuals_at(zero);
    auto all_zero = [](const std::vector<Rational>& v) {
        return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
    };
    if (p0.empty()) {
        rs.status = RegularSearch::Status::EveryPoint;
        rs.note = "no products fall outside the set, every member is regular";
        return rs;
    }
    if (d == 0) {
        if (all_zero(p0)) {
            rs.status = RegularSearch::Status::Points;
            rs.params = {{}};
            rs.points = {moduli.base};
        } else {
            rs.status = RegularSearch::Status::Empty;
            rs.note = "the unique member is not regular";
        }
        return rs;
    }

    // the residuals are quadratic in the parameters; reconstruct them from
    // point evaluations at 0, +-e_i and e_i + e_j
    std::size_t m = p0.size();
    std::vector<std::vector<Rational>> plus(d), minus(d);
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Rational> v(d);
        v[i] = 1;
        plus[i] = residuals_at(v);
        v[i] = -1;
        minus[i] = residuals_at(v);
    }
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>> mixed;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            std::vector<Rational> v(d);
            v[i] = 1;
            v[j] = 1;
            mixed[{i, j}] = residuals_at(v);
        }

    std::vector<MultiPoly> eqs;
    for (std::size_t r = 0; r < m; ++r) {
        MultiPoly p(d);
        const Rational& c = p0[r];
        p.add_term(std::vector<int>(d, 0), c);
        std::vector<Rational> lin(d), sq(d);
        for (std::size_t i = 0; i < d; ++i) {
            lin[i] = (plus[i][r] - minus[i][r]) / 2;
            sq[i] = (plus[i][r] + minus[i][r]) / 2 - c;
            std::vector<int> e(d, 0);
            e[i] = 1;
            p.add_term(e, lin[i]);
            e[i] = 2;
            p.add_term(e, sq[i]);
        }
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) {
                Rational q = mixed[{i, j}][r] - c - lin[i] - lin[j] - sq[i] - sq[j];
                std::vector<int> e(d, 0);
                e[i] = 1;
                e[j] = 1;
                p.add_term(e, q);
            }
        if (!p.is_zero()) eqs.push_back(std::move(p));
    }

    PolySystemSolution sol = solve_poly_system(eqs, d);
    switch (sol.status) {
        case PolySystemSolution::Status::Points:
            rs.status = RegularSearch::Status::Points;
            rs.params = sol.points;
            for (const auto& pt : sol.points) rs.points.push_back(moduli.point(pt));
            break;
        case PolySystemSolution::Status::EveryPoint:
            rs.status = RegularSearch::Status::EveryPoint;
            break;
        case PolySystemSolution::Status::PositiveDimensional:
            rs.status = RegularSearch::Status::PositiveDimensional;
            break;
        case PolySystemSolution::Status::Empty:
            rs.status = RegularSearch::Status::Empty;
            break;
        case PolySystemSolution::Status::Unresolved:
            rs.status = RegularSearch::Status::Unresolved;
            break;
    }
    rs.note = sol.note;
    return rs;
}

Curvature curvature(const TwoFormSpace& space, const Connection& conn) {
    const GroupTable& G = *space.group;
    std::size_t n = space.csize();
    Curvature cur;
    for (std::size_t ia = 0; ia < n; ++ia) {
        int a = space.C.element(ia);
        TwoForm F = d_one_form(space, conn.form(space, ia));
        for (std::size_t ic = 0; ic < n; ++ic)
            for (std::size_t id = 0; id < n; ++id) {
                if (G.mul(space.C.element(ic), space.C.element(id)) != a) continue;
                F = F + wedge(space, conn.form(space, ic), conn.form(space, id));
            }
        for (std::size_t ib = 0; ib < n; ++ib) {
            F = F - wedge(space, conn.form(space, ib), conn.form(space, ia));
            F = F - wedge(space, conn.form(space, ia), conn.form(space, ib));
        }
        cur.F.push_back(std::move(F));
    }
    cur.residuals = regularity_residuals(space, conn);
    cur.regular = std::all_of(cur.residuals.begin(), cur.residuals.end(),
                              [](const auto& r) { return r.second.is_zero(); });
    return cur;
}

void require_regular(const TwoFormSpace& space, const Curvature& curv) {
    if (curv.regular) return;
    std::string msg = "connection is not regular; nonzero quadratic sums at";
    for (const auto& [q, tf] : curv.residuals)
        if (!tf.is_zero()) msg += " " + space.group->label(q);
    throw NotRegular(msg);
}

bool OneOneTensor::is_zero() const {
    for (const auto& row : comp)
        for (const auto& f : row)
            if (!f.is_zero()) return false;
    return true;
}

OneOneTensor OneOneTensor::operator-(const OneOneTensor& o) const {
    OneOneTensor r = *this;
    for (std::size_t i = 0; i < comp.size(); ++i)
        for (std::size_t j = 0; j < comp[i].size(); ++j) r.comp[i][j] = comp[i][j] - o.comp[i][j];
    return r;
}

OneOneTensor OneOneTensor::operator*(const Rational& c) const {
    OneOneTensor r = *this;
    for (auto& row : r.comp)
        for (auto& f : row) f = f * c;
    return r;
}

bool TwoOneTensor::is_zero() const {
    for (const auto& row : comp)
        for (const auto& f : row)
            if (!f.is_zero()) return false;
    return true;
}

TwoOneTensor TwoOneTensor::operator-(const TwoOneTensor& o) const {
    TwoOneTensor r = *this;
    for (std::size_t i = 0; i < comp.size(); ++i)
        for (std::size_t j = 0; j < comp[i].size(); ++j) r.comp[i][j] = comp[i][j] - o.comp[i][j];
    return r;
}

bool OneOneOneTensor::is_zero() const {
    for (const auto& plane : comp)
        for (const auto& row : plane)
            for (const auto& f : row)
                if (!f.is_zero()) return false;
    return true;
}

OneOneOneTensor OneOneOneTensor::operator-(const OneOneOneTensor& o) const {
    OneOneOneTensor r = *this;
    for (std::size_t i = 0; i < comp.size(); ++i)
        for (std::size_t j = 0; j < comp[i].size(); ++j)
            for (std::size_t k = 0; k < comp[i][j].size(); ++k)
                r.comp[i][j][k] = comp[i][j][k] - o.comp[i][j][k];
    return r;
}

OneOneTensor covariant_derivative(const TwoFormSpace& space, const Connection& conn,
                                  const OneForm& alpha) {
    const GroupTable& G = *space.group;
    std::size_t n = space.csize();
    OneOneTensor out(n, space.order());
    for (std::size_t ia = 0; ia < n; ++ia)
        for (std::size_t ip = 0; ip < n; ++ip)
            out.comp[ip][ia] =
                out.comp[ip][ia] + partial(space.C, space.C.element(ip), alpha.comp[ia]);
    for (std::size_t ia = 0; ia < n; ++ia) {
        int a = space.C.element(ia);
        for (std::size_t ib = 0; ib < n; ++ib) {
            int b = space.C.element(ib);
            std::size_t im = static_cast<std::size_t>(space.C.index_of(G.conj(G.inv(b), a)));
            if (im == ia) continue;
            for (std::size_t ic = 0; ic < n; ++ic) {
                GroupFunction t = alpha.comp[ia] * conn.comps[ib][ic];
                out.comp[ic][im] = out.comp[ic][im] - t;
                out.comp[ic][ia] = out.comp[ic][ia] + t;
            }
        }
    }
    return out;
}

TwoOneTensor riemann_on_basis(const TwoFormSpace& space, const Curvature& curv,
                              std::size_t ia) {
    const GroupTable& G = *space.group;
    std::size_t n = space.csize();
    int a = space.C.element(ia);
    TwoOneTensor out(space.dim2, n, space.order());
    for (std::size_t ib = 0; ib < n; ++ib) {
        int b = space.C.element(ib);
        std::size_t im = static_cast<std::size_t>(space.C.index_of(G.conj(G.inv(b), a)));
        if (im == ia) continue;
        for (std::size_t k = 0; k < space.dim2; ++k) {
            out.comp[k][im] = out.comp[k][im] + curv.F[ib].comp[k];
            out.comp[k][ia] = out.comp[k][ia] - curv.F[ib].comp[k];
        }
    }
    return out;
}

Lift lift_woronowicz(const TwoFormSpace& space) {
    std::size_t n = space.csize();
    Lift L;
    L.flavor = "woronowicz";
    L.mat = Matrix(n * n, space.dim2);
    for (std::size_t k = 0; k < space.dim2; ++k) {
        auto [a, b] = space.basis_pairs[k];
        std::size_t ia = static_cast<std::size_t>(space.C.index_of(a));
        std::size_t ib = static_cast<std::size_t>(space.C.index_of(b));
        L.mat.at(space.pair_index(ia, ib), k) += 1;
        auto [c, a2] = braiding(space.C, {a, b});
        std::size_t ic = static_cast<std::size_t>(space.C.index_of(c));
        std::size_t ia2 = static_cast<std::size_t>(space.C.index_of(a2));
        L.mat.at(space.pair_index(ic, ia2), k) -= 1;
    }
    return L;
}

Lift lift_projection(const TwoFormSpace& space) {
    const GroupTable& G = *space.group;
    std::size_t n = space.csize();
    std::size_t npairs = n * n;
    Lift L;
    L.flavor = "projection";
    L.mat = Matrix(npairs, space.dim2);
    for (std::size_t k = 0; k < space.dim2; ++k) {
        auto [a, b] = space.basis_pairs[k];
        std::size_t ia = static_cast<std::size_t>(space.C.index_of(a));
        std::size_t ib = static_cast<std::size_t>(space.C.index_of(b));
        std::vector<Rational> v(npairs);
        v[space.pair_index(ia, ib)] = 1;
        int g = G.mul(a, b);
        for (const auto& pb : space.pg) {
            if (pb.g != g) continue;
            auto it = std::lower_bound(pb.domain.begin(), pb.domain.end(), a);
            std::size_t da = static_cast<std::size_t>(it - pb.domain.begin());
            for (const auto& lambda : pb.vectors) {
                if (lambda[da] == 0) continue;
                Rational orbit_size = 0;
                for (const auto& e : lambda) orbit_size += e;
                Rational mu = lambda[da] / orbit_size;
                std::vector<Rational> rel = relation_vector(space.C, pb, lambda);
                for (std::size_t p = 0; p < npairs; ++p) v[p] -= mu * rel[p];
            }
        }
        for (std::size_t p = 0; p < npairs; ++p) L.mat.at(p, k) = v[p];
    }
    return L;
}

OneOneTensor ricci(const TwoFormSpace& space, const Curvature& curv, const Lift& lift) {
    const GroupTable& G = *space.group;
    std::size_t n = space.csize();
    OneOneTensor out(n, space.order());
    for (std::size_t ic = 0; ic < n; ++ic) {
        int c = space.C.element(ic);
        for (std::size_t ia = 0; ia < n; ++ia) {
            int a = space.C.element(ia);
            std::size_t im = static_cast<std::size_t>(space.C.index_of(G.conj(G.inv(c), a)));
            if (im == ia) continue;
            for (std::size_t ib = 0; ib < n; ++ib) {
                GroupFunction K(space.order());
                for (std::size_t k = 0; k < space.dim2; ++k) {
                    const Rational& w = lift.mat.at(space.pair_index(ia, ib), k);
                    if (w != 0) K = K + curv.F[ic].comp[k] * w;
                }
                if (K.is_zero()) continue;
                out.comp[ib][im] = out.comp[ib][im] + K;
                out.comp[ib][ia] = out.comp[ib][ia] - K;
            }
        }
    }
    return out;
}

GroupFunction scalar_curvature(const TwoFormSpace& space, const Coframing& cf,
                               const OneOneTensor& ric) {
    std::size_t n = space.csize();
    GroupFunction s(space.order());
    for (std::size_t ia = 0; ia < n; ++ia)
        for (std::size_t ib = 0; ib < n; ++ib)
            s = s + cf.gmat[ib][ia] * ric.comp[ia][ib];
    return s;
}

namespace {

// coefficients of nabla E_a = C_a^{pq} E_p x E_q
std::vector<std::vector<std::vector<GroupFunction>>> christoffel(const TwoFormSpace& space,
                                                                 const Connection& conn) {
    const GroupTable& G = *space.group;
    std::size_t n = space.csize();
    std::vector<std::vector<std::vector<GroupFunction>>> Cc(
        n, std::vector<std::vector<GroupFunction>>(
               n, std::vector<GroupFunction>(n, GroupFunction(space.order()))));
    for (std::size_t ia = 0; ia < n; ++ia) {
        int a = space.C.element(ia);
        for (std::size_t ibp = 0; ibp < n; ++ibp) {
            int bp = space.C.element(ibp);
            std::size_t im = static_cast<std::size_t>(space.C.index_of(G.conj(G.inv(bp), a)));
            if (im == ia) continue;
            for (std::size_t ip = 0; ip < n; ++ip) {
                Cc[ia][ip][im] = Cc[ia][ip][im] - conn.comps[ibp][ip];
                Cc[ia][ip][ia] = Cc[ia][ip][ia] + conn.comps[ibp][ip];
            }
        }
    }
    return Cc;
}

}  // namespace

OneOneOneTensor nabla_on_metric(const TwoFormSpace& space, const Connection& conn,
                                const OneOneTensor& h) {
    const GroupTable& G = *space.group;
    std::size_t n = space.csize();
    auto Cc = christoffel(space, conn);
    OneOneOneTensor out(n, space.order());
    for (std::size_t ip = 0; ip < n; ++ip)
        for (std::size_t ia = 0; ia < n; ++ia)
            for (std::size_t ib = 0; ib < n; ++ib)
                out.comp[ip][ia][ib] = out.comp[ip][ia][ib] +
                                       partial(space.C, space.C.element(ip), h.comp[ia][ib]);
    for (std::size_t ia = 0; ia < n; ++ia) {
        int a = space.C.element(ia);
        for (std::size_t ib = 0; ib < n; ++ib) {
            const GroupFunction& hab = h.comp[ia][ib];
            if (hab.is_zero()) continue;
            for (std::size_t ip = 0; ip < n; ++ip)
                for (std::size_t iq = 0; iq < n; ++iq) {
                    out.comp[ip][iq][ib] = out.comp[ip][iq][ib] + hab * Cc[ia][ip][iq];
                    out.comp[ip][ia][iq] =
                        out.comp[ip][ia][iq] + hab * shift_right(G, a, Cc[ib][ip][iq]);
                }
        }
    }
    return out;
}

TwoForm wedge_contract(const TwoFormSpace& space, const OneOneTensor& t) {
    std::size_t n = space.csize();
    TwoForm out(space.dim2, space.order());
    for (std::size_t k = 0; k < space.dim2; ++k)
        for (std::size_t ip = 0; ip < n; ++ip)
            for (std::size_t iq = 0; iq < n; ++iq) {
                const Rational& w = space.wedge_matrix.at(k, space.pair_index(ip, iq));
                if (w != 0) out.comp[k] = out.comp[k] + t.comp[ip][iq] * w;
            }
    return out;
}

TwoOneTensor metric_compat_defect(const TwoFormSpace& space, const Connection& conn,
                                  const OneOneTensor& h) {
    const GroupTable& G = *space.group;
    std::size_t n = space.csize();
    auto Cc = christoffel(space, conn);
    TwoOneTensor Wt(space.dim2, n, space.order());
    for (std::size_t ib = 0; ib < n; ++ib) {
        OneForm beta(n, space.order());
        for (std::size_t ia = 0; ia < n; ++ia) beta.comp[ia] = h.comp[ia][ib];
        TwoForm col = wedge_contract(space, covariant_derivative(space, conn, beta));
        for (std::size_t k = 0; k < space.dim2; ++k) Wt.comp[k][ib] = col.comp[k];
    }
    TwoOneTensor Vt(space.dim2, n, space.order());
    for (std::size_t ia = 0; ia < n; ++ia) {
        int a = space.C.element(ia);
        for (std::size_t ib = 0; ib < n; ++ib) {
            const GroupFunction& hab = h.comp[ia][ib];
            if (hab.is_zero()) continue;
            for (std::size_t ip = 0; ip < n; ++ip)
                for (std::size_t iq = 0; iq < n; ++iq) {
                    GroupFunction t = hab * shift_right(G, a, Cc[ib][ip][iq]);
                    if (t.is_zero()) continue;
                    for (std::size_t k = 0; k < space.dim2; ++k) {
                        const Rational& w = space.wedge_matrix.at(k, space.pair_index(ia, ip));
                        if (w != 0) Vt.comp[k][iq] = Vt.comp[k][iq] + t * w;
                    }
                }
        }
    }
    return Wt - Vt;
}

OneOneTensor metric_cotensor(const TwoFormSpace& space, const Coframing& cf) {
    std::size_t n = space.csize();
    OneOneTensor out(n, space.order());
    for (std::size_t ia = 0; ia < n; ++ia)
        for (std::size_t ib = 0; ib < n; ++ib) out.comp[ia][ib] = cf.gmat_inv[ia][ib];
    return out;
}

}  // namespace ncgeo
