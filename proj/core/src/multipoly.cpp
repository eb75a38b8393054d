#include "ncgeo/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ncgeo {

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Key(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::var(std::size_t nvars, std::size_t i) {
    MultiPoly p(nvars);
    Key k(nvars, 0);
    k[i] = 1;
    p.add_term(k, Rational(1));
    return p;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, std::accumulate(k.begin(), k.end(), 0));
    return d;
}

std::optional<Rational> MultiPoly::as_constant() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && total_degree() == 0) return terms_.begin()->second;
    return std::nullopt;
}

void MultiPoly::add_term(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(nvars_);
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) {
            Key k(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) k[i] = k1[i] + k2[i];
            r.add_term(k, c1 * c2);
        }
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& s) const {
    MultiPoly r(nvars_);
    if (s == 0) return r;
    for (const auto& [k, c] : terms_) r.add_term(k, c * s);
    return r;
}

MultiPoly MultiPoly::substitute(std::size_t i, const MultiPoly& value) const {
    MultiPoly r(nvars_);
    for (const auto& [k, c] : terms_) {
        MultiPoly term(nvars_);
        Key rest = k;
        int e = rest[i];
        rest[i] = 0;
        term.add_term(rest, c);
        for (int p = 0; p < e; ++p) term = term * value;
        r = r + term;
    }
    return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    Rational acc(0);
    for (const auto& [k, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (int p = 0; p < k[i]; ++p) t *= point[i];
        acc += t;
    }
    return acc;
}

bool MultiPoly::mentions(std::size_t i) const {
    for (const auto& [k, c] : terms_)
        if (k[i] > 0) return true;
    return false;
}

bool MultiPoly::linear_parts(Rational& c0, std::vector<Rational>& grad) const {
    if (total_degree() > 1) return false;
    c0 = 0;
    grad.assign(nvars_, Rational(0));
    for (const auto& [k, c] : terms_) {
        int deg = std::accumulate(k.begin(), k.end(), 0);
        if (deg == 0) {
            c0 = c;
        } else {
            for (std::size_t i = 0; i < nvars_; ++i)
                if (k[i] == 1) grad[i] = c;
        }
    }
    return true;
}

std::optional<std::pair<std::size_t, Poly>> MultiPoly::as_univariate() const {
    std::optional<std::size_t> the_var;
    int maxdeg = 0;
    for (const auto& [k, c] : terms_)
        for (std::size_t i = 0; i < nvars_; ++i)
            if (k[i] > 0) {
                if (the_var && *the_var != i) return std::nullopt;
                the_var = i;
                maxdeg = std::max(maxdeg, k[i]);
            }
    if (!the_var) return std::nullopt;
    std::vector<Rational> coeffs(maxdeg + 1);
    for (const auto& [k, c] : terms_) coeffs[k[*the_var]] = c;
    return std::make_pair(*the_var, Poly(std::move(coeffs)));
}

namespace {

using Status = PolySystemSolution::Status;

struct SearchState {
    std::size_t nvars;
    std::vector<std::vector<Rational>> points;
    bool positive_dim = false;
    bool unresolved = false;
    std::string note;
};

std::vector<MultiPoly> cleanup(const std::vector<MultiPoly>& eqs, bool& inconsistent) {
    std::vector<MultiPoly> out;
    inconsistent = false;
    for (const auto& e : eqs) {
        auto c = e.as_constant();
        if (c) {
            if (*c != 0) inconsistent = true;
            continue;
        }
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    }
    return out;
}

void search(std::vector<MultiPoly> eqs,
            std::vector<std::pair<std::size_t, MultiPoly>> elim,
            std::vector<bool> active, SearchState& st) {
    bool inconsistent = false;
    eqs = cleanup(eqs, inconsistent);
    if (inconsistent) return;

    if (eqs.empty()) {
        if (std::find(active.begin(), active.end(), true) != active.end()) {
            st.positive_dim = true;
            return;
        }
        // back-substitute newest eliminations first
        std::vector<Rational> point(st.nvars, Rational(0));
        for (auto it = elim.rbegin(); it != elim.rend(); ++it)
            point[it->first] = it->second.eval(point);
        if (std::find(st.points.begin(), st.points.end(), point) == st.points.end())
            st.points.push_back(point);
        return;
    }

    // 1. linear equation: eliminate its lowest-index variable
    for (const auto& e : eqs) {
        Rational c0;
        std::vector<Rational> grad;
        if (!e.linear_parts(c0, grad)) continue;
        std::size_t v = 0;
        while (v < st.nvars && grad[v] == 0) ++v;
        if (v == st.nvars) continue;
        MultiPoly expr = MultiPoly::constant(st.nvars, -c0 / grad[v]);
        for (std::size_t j = 0; j < st.nvars; ++j)
            if (j != v && grad[j] != 0)
                expr = expr + MultiPoly::var(st.nvars, j) * (-grad[j] / grad[v]);
        std::vector<MultiPoly> next;
        next.reserve(eqs.size());
        for (const auto& q : eqs) next.push_back(q.substitute(v, expr));
        elim.emplace_back(v, expr);
        active[v] = false;
        search(std::move(next), std::move(elim), std::move(active), st);
        return;
    }

    // 2. univariate equation: branch over its rational roots
    for (const auto& e : eqs) {
        auto uni = e.as_univariate();
        if (!uni) continue;
        auto [v, p] = *uni;
        std::vector<std::pair<Rational, int>> roots;
        try {
            roots = p.rational_roots();
        } catch (const std::runtime_error&) {
            st.unresolved = true;
            st.note = "rational root search exceeded its budget";
            return;
        }
        for (const auto& [root, mult] : roots) {
            (void)mult;
            MultiPoly expr = MultiPoly::constant(st.nvars, root);
            std::vector<MultiPoly> next;
            next.reserve(eqs.size());
            for (const auto& q : eqs) next.push_back(q.substitute(v, expr));
            auto elim2 = elim;
            elim2.emplace_back(v, expr);
            auto active2 = active;
            active2[v] = false;
            search(std::move(next), std::move(elim2), std::move(active2), st);
        }
        return;  // branch set is exhaustive over Q
    }

    st.unresolved = true;
    st.note = "system not reducible by linear elimination or univariate branching";
}

}  // namespace

PolySystemSolution solve_poly_system(const std::vector<MultiPoly>& eqs, std::size_t nvars) {
    PolySystemSolution sol;
    bool inconsistent = false;
    auto reduced = cleanup(eqs, inconsistent);
    if (inconsistent) {
        sol.status = Status::Empty;
        sol.note = "a residual is a nonzero constant";
        return sol;
    }
    if (reduced.empty()) {
        sol.status = Status::EveryPoint;
        return sol;
    }
    SearchState st;
    st.nvars = nvars;
    search(reduced, {}, std::vector<bool>(nvars, true), st);
    if (st.unresolved) {
        sol.status = Status::Unresolved;
        sol.note = st.note;
        sol.points = st.points;
        return sol;
    }
    if (st.positive_dim) {
        sol.status = Status::PositiveDimensional;
        sol.points = st.points;
        return sol;
    }
    if (st.points.empty()) {
        sol.status = Status::Empty;
        sol.note = "no rational solutions";
        return sol;
    }
    sol.status = Status::Points;
    sol.points = st.points;
    std::sort(sol.points.begin(), sol.points.end());
    return sol;
}

}  // namespace ncgeo
