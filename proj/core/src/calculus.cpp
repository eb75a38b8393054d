#include "ncgeo/calculus.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ncgeo {

GroupFunction GroupFunction::constant(std::size_t order, const Rational& c) {
    GroupFunction f(order);
    for (auto& v : f.values) v = c;
    return f;
}

GroupFunction GroupFunction::delta(std::size_t order, int x) {
    GroupFunction f(order);
    f.values.at(static_cast<std::size_t>(x)) = 1;
    return f;
}

bool GroupFunction::is_zero() const {
    return std::all_of(values.begin(), values.end(),
                       [](const Rational& v) { return v == 0; });
}

bool GroupFunction::is_constant() const {
    for (const auto& v : values)
        if (v != values.front()) return false;
    return true;
}

GroupFunction GroupFunction::operator+(const GroupFunction& o) const {
    GroupFunction r(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) r.values[i] = values[i] + o.values[i];
    return r;
}

GroupFunction GroupFunction::operator-(const GroupFunction& o) const {
    GroupFunction r(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) r.values[i] = values[i] - o.values[i];
    return r;
}

GroupFunction GroupFunction::operator-() const {
    GroupFunction r(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) r.values[i] = -values[i];
    return r;
}

GroupFunction GroupFunction::operator*(const GroupFunction& o) const {
    GroupFunction r(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) r.values[i] = values[i] * o.values[i];
    return r;
}

GroupFunction GroupFunction::operator*(const Rational& c) const {
    GroupFunction r(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) r.values[i] = values[i] * c;
    return r;
}

GroupFunction shift_right(const GroupTable& G, int a, const GroupFunction& f) {
    GroupFunction r(f.values.size());
    for (std::size_t x = 0; x < f.values.size(); ++x)
        r.values[x] = f.values[static_cast<std::size_t>(G.mul(static_cast<int>(x), a))];
    return r;
}

bool OneForm::is_zero() const {
    return std::all_of(comp.begin(), comp.end(),
                       [](const GroupFunction& f) { return f.is_zero(); });
}

OneForm OneForm::operator+(const OneForm& o) const {
    OneForm r = *this;
    for (std::size_t i = 0; i < comp.size(); ++i) r.comp[i] = comp[i] + o.comp[i];
    return r;
}

OneForm OneForm::operator-(const OneForm& o) const {
    OneForm r = *this;
    for (std::size_t i = 0; i < comp.size(); ++i) r.comp[i] = comp[i] - o.comp[i];
    return r;
}

OneForm OneForm::operator*(const Rational& c) const {
    OneForm r = *this;
    for (auto& f : r.comp) f = f * c;
    return r;
}

bool TwoForm::is_zero() const {
    return std::all_of(comp.begin(), comp.end(),
                       [](const GroupFunction& f) { return f.is_zero(); });
}

TwoForm TwoForm::operator+(const TwoForm& o) const {
    TwoForm r = *this;
    for (std::size_t i = 0; i < comp.size(); ++i) r.comp[i] = comp[i] + o.comp[i];
    return r;
}

TwoForm TwoForm::operator-(const TwoForm& o) const {
    TwoForm r = *this;
    for (std::size_t i = 0; i < comp.size(); ++i) r.comp[i] = comp[i] - o.comp[i];
    return r;
}

TwoForm TwoForm::operator*(const Rational& c) const {
    TwoForm r = *this;
    for (auto& f : r.comp) f = f * c;
    return r;
}

GroupFunction partial(const AdSet& C, int a, const GroupFunction& f) {
    return shift_right(*C.group, a, f) - f;
}

OneForm differential(const AdSet& C, const GroupFunction& f) {
    OneForm alpha(C.size(), f.values.size());
    for (std::size_t ia = 0; ia < C.size(); ++ia)
        alpha.comp[ia] = partial(C, C.element(ia), f);
    return alpha;
}

GroupFunction push_right(const AdSet& C, int a, const GroupFunction& f) {
    return shift_right(*C.group, a, f);
}

std::pair<int, int> braiding(const AdSet& C, std::pair<int, int> ab) {
    const GroupTable& G = *C.group;
    return {G.conj(ab.first, ab.second), ab.first};
}

Matrix psi_matrix(const AdSet& C) {
    std::size_t n = C.size();
    Matrix P(n * n, n * n);
    for (std::size_t ia = 0; ia < n; ++ia)
        for (std::size_t ib = 0; ib < n; ++ib) {
            auto [c, a] = braiding(C, {C.element(ia), C.element(ib)});
            std::size_t row = C.index_of(c) * n + C.index_of(a);
            P.at(row, ia * n + ib) = 1;
        }
    return P;
}

std::vector<PgBasis> invariant_subspaces(const AdSet& C) {
    const GroupTable& G = *C.group;
    std::vector<int> products;
    for (std::size_t ia = 0; ia < C.size(); ++ia)
        for (std::size_t ib = 0; ib < C.size(); ++ib)
            products.push_back(G.mul(C.element(ia), C.element(ib)));
    std::sort(products.begin(), products.end());
    products.erase(std::unique(products.begin(), products.end()), products.end());

    std::vector<PgBasis> out;
    for (int g : products) {
        PgBasis pb;
        pb.g = g;
        for (std::size_t ia = 0; ia < C.size(); ++ia) {
            int a = C.element(ia);
            if (C.contains(G.mul(G.inv(a), g))) pb.domain.push_back(a);
        }
        // sigma(a) = a^-1 g permutes the domain; basis vectors are orbit sums
        std::vector<bool> seen(pb.domain.size(), false);
        for (std::size_t i = 0; i < pb.domain.size(); ++i) {
            if (seen[i]) continue;
            std::vector<Rational> vec(pb.domain.size());
            std::size_t j = i;
            while (!seen[j]) {
                seen[j] = true;
                vec[j] = 1;
                int next = G.mul(G.inv(pb.domain[j]), g);
                auto it = std::lower_bound(pb.domain.begin(), pb.domain.end(), next);
                if (it == pb.domain.end() || *it != next)
                    throw std::logic_error("sigma does not preserve its domain");
                j = static_cast<std::size_t>(it - pb.domain.begin());
            }
            pb.vectors.push_back(std::move(vec));
        }
        out.push_back(std::move(pb));
    }
    return out;
}

namespace {

// incremental Gaussian elimination: rows keyed by pivot column, pivot entry 1
struct EchelonSet {
    std::map<std::size_t, std::vector<Rational>> rows;

    // reduces v in place; returns true (and absorbs v) if independent
    bool insert(std::vector<Rational> v) {
        reduce(v);
        std::size_t piv = v.size();
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) { piv = j; break; }
        if (piv == v.size()) return false;
        Rational lead = v[piv];
        for (auto& x : v) x /= lead;
        rows.emplace(piv, std::move(v));
        return true;
    }

    bool independent(std::vector<Rational> v) const {
        reduce(v);
        return std::any_of(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    }

    void reduce(std::vector<Rational>& v) const {
        for (const auto& [piv, row] : rows) {
            if (v[piv] == 0) continue;
            Rational c = v[piv];
            for (std::size_t j = piv; j < v.size(); ++j) v[j] -= c * row[j];
        }
    }
};

}  // namespace

std::vector<Rational> relation_vector(const AdSet& C, const PgBasis& pb,
                                      const std::vector<Rational>& lambda) {
    const GroupTable& G = *C.group;
    std::vector<Rational> row(C.size() * C.size());
    for (std::size_t i = 0; i < pb.domain.size(); ++i) {
        if (lambda[i] == 0) continue;
        int a = pb.domain[i];
        int b = G.mul(G.inv(a), pb.g);
        row[C.index_of(a) * C.size() + C.index_of(b)] += lambda[i];
    }
    return row;
}

TwoFormSpace build_omega2(const AdSet& C) {
    const GroupTable& G = *C.group;
    TwoFormSpace space;
    space.group = &G;
    space.C = C;
    space.pg = invariant_subspaces(C);

    std::size_t n = C.size();
    std::size_t npairs = n * n;

    std::vector<std::vector<Rational>> rel_rows;
    for (const auto& pb : space.pg)
        for (const auto& lambda : pb.vectors)
            rel_rows.push_back(relation_vector(C, pb, lambda));
    space.relation_rows = Matrix::from_rows(rel_rows, npairs);

    EchelonSet rel;
    for (const auto& r : rel_rows) rel.insert(r);
    std::size_t rel_rank = rel.rows.size();
    space.dim2 = npairs - rel_rank;

    auto unit = [npairs](std::size_t p) {
        std::vector<Rational> v(npairs);
        v[p] = 1;
        return v;
    };

    auto try_pairs = [&](const std::vector<std::pair<std::size_t, std::size_t>>& cand)
        -> std::vector<std::pair<int, int>> {
        EchelonSet work = rel;
        std::vector<std::pair<int, int>> chosen;
        for (auto [ia, ib] : cand) {
            if (work.insert(unit(ia * n + ib)))
                chosen.push_back({C.element(ia), C.element(ib)});
        }
        return chosen;
    };

    std::vector<std::pair<int, int>> basis;
    if (n == 3 && space.dim2 == 4) {
        auto chosen = try_pairs({{0, 1}, {1, 0}, {0, 2}, {2, 0}});
        if (chosen.size() == 4) basis = chosen;
    }
    if (basis.size() != space.dim2) {
        std::vector<std::pair<std::size_t, std::size_t>> all;
        for (std::size_t ia = 0; ia < n; ++ia)
            for (std::size_t ib = 0; ib < n; ++ib) all.push_back({ia, ib});
        basis = try_pairs(all);
    }
    if (basis.size() != space.dim2)
        throw std::logic_error("could not complete a basis of the 2-form quotient");
    space.basis_pairs = basis;

    // columns: relation row space basis, then the chosen unit vectors; the
    // bottom block of the inverse reads off quotient coordinates
    Matrix rel_basis = space.relation_rows.row_space();
    Matrix M(npairs, npairs);
    for (std::size_t r = 0; r < rel_rank; ++r)
        for (std::size_t p = 0; p < npairs; ++p) M.at(p, r) = rel_basis.at(r, p);
    for (std::size_t k = 0; k < space.dim2; ++k) {
        std::size_t ia = C.index_of(basis[k].first);
        std::size_t ib = C.index_of(basis[k].second);
        M.at(ia * n + ib, rel_rank + k) = 1;
    }
    auto Minv = M.inverse();
    if (!Minv) throw std::logic_error("quotient change of basis is singular");
    space.wedge_matrix = Matrix(space.dim2, npairs);
    for (std::size_t k = 0; k < space.dim2; ++k)
        for (std::size_t p = 0; p < npairs; ++p)
            space.wedge_matrix.at(k, p) = Minv->at(rel_rank + k, p);

    space.dE.assign(n, TwoForm(space.dim2, G.order()));
    for (std::size_t ia = 0; ia < n; ++ia) {
        for (std::size_t k = 0; k < space.dim2; ++k) {
            Rational c = 0;
            for (std::size_t ib = 0; ib < n; ++ib) {
                c += space.wedge_matrix.at(k, ia * n + ib);
                c += space.wedge_matrix.at(k, ib * n + ia);
            }
            space.dE[ia].comp[k] = GroupFunction::constant(G.order(), c);
        }
    }
    return space;
}

TwoForm wedge(const TwoFormSpace& space, const OneForm& alpha, const OneForm& beta) {
    std::size_t n = space.csize();
    TwoForm out(space.dim2, space.order());
    for (std::size_t ia = 0; ia < n; ++ia) {
        if (alpha.comp[ia].is_zero()) continue;
        for (std::size_t ib = 0; ib < n; ++ib) {
            GroupFunction c =
                alpha.comp[ia] * shift_right(*space.group, space.C.element(ia), beta.comp[ib]);
            if (c.is_zero()) continue;
            for (std::size_t k = 0; k < space.dim2; ++k) {
                const Rational& w = space.wedge_matrix.at(k, space.pair_index(ia, ib));
                if (w != 0) out.comp[k] = out.comp[k] + c * w;
            }
        }
    }
    return out;
}

TwoForm d_one_form(const TwoFormSpace& space, const OneForm& alpha) {
    std::size_t n = space.csize();
    TwoForm out(space.dim2, space.order());
    for (std::size_t ia = 0; ia < n; ++ia) {
        // d(f E_a) = df ^ E_a + f dE_a
        for (std::size_t ib = 0; ib < n; ++ib) {
            GroupFunction pb = partial(space.C, space.C.element(ib), alpha.comp[ia]);
            if (pb.is_zero()) continue;
            for (std::size_t k = 0; k < space.dim2; ++k) {
                const Rational& w = space.wedge_matrix.at(k, space.pair_index(ib, ia));
                if (w != 0) out.comp[k] = out.comp[k] + pb * w;
            }
        }
        for (std::size_t k = 0; k < space.dim2; ++k)
            out.comp[k] = out.comp[k] + alpha.comp[ia] * space.dE[ia].comp[k];
    }
    return out;
}

OneForm unit_one_form(const TwoFormSpace& space, std::size_t ia) {
    OneForm alpha(space.csize(), space.order());
    alpha.comp[ia] = GroupFunction::constant(space.order(), 1);
    return alpha;
}

OneForm theta_form(const TwoFormSpace& space) {
    OneForm alpha(space.csize(), space.order());
    for (auto& f : alpha.comp) f = GroupFunction::constant(space.order(), 1);
    return alpha;
}

}  // namespace ncgeo
