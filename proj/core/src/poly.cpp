#include "ncgeo/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncgeo {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::x() { return Poly({Rational(0), Rational(1)}); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Rational Poly::leading() const {
    if (c_.empty()) return Rational(0);
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return Poly(std::move(r));
}

Poly Poly::operator-() const {
    std::vector<Rational> r(c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = -c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(r));
}

Poly Poly::operator*(const Rational& s) const {
    std::vector<Rational> r(c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = c_[i] * s;
    return Poly(std::move(r));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(r));
}

Rational Poly::eval(const Rational& x) const {
    Rational v(0);
    for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
}

void Poly::divmod(const Poly& num, const Poly& den, Poly& quot, Poly& rem) {
    if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Rational> r = num.c_;
    std::vector<Rational> q(num.c_.size() > den.c_.size() ? num.c_.size() - den.c_.size() + 1 : 1);
    Rational lead_inv = 1 / den.leading();
    for (std::size_t k = r.size(); k-- > 0 && k + 1 >= den.c_.size();) {
        if (r[k] == 0) continue;
        std::size_t shift = k + 1 - den.c_.size();
        Rational f = r[k] * lead_inv;
        q[shift] = f;
        for (std::size_t j = 0; j < den.c_.size(); ++j) r[shift + j] -= f * den.c_[j];
    }
    quot = Poly(std::move(q));
    rem = Poly(std::move(r));
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    return *this * (1 / leading());
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<Poly> Poly::squarefree_factors() const {
    if (degree() < 1) return {};
    Poly f = monic();
    std::vector<Poly> out;
    Poly g = gcd(f, f.derivative());
    Poly c, d, q, r;
    divmod(f, g, c, r);
    divmod(f.derivative(), g, d, r);
    d = d - c.derivative();
    while (c.degree() > 0) {
        Poly p = gcd(c, d);
        out.push_back(p);
        divmod(c, p, q, r);
        c = q;
        divmod(d, p, q, r);
        d = q - c.derivative();
    }
    return out;
}

std::vector<Integer> Poly::integer_normalized() const {
    if (is_zero()) return {};
    Integer den_lcm(1);
    for (const auto& c : c_) {
        Integer d = c.get_den();
        Integer g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    std::vector<Integer> v(c_.size());
    Integer content(0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        v[i] = c_[i].get_num() * (den_lcm / c_[i].get_den());
        Integer g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), v[i].get_mpz_t());
        content = g;
    }
    if (content != 0)
        for (auto& x : v) x /= content;
    if (v.back() < 0)
        for (auto& x : v) x = -x;
    return v;
}

namespace {

// all positive divisors; throws when trial division exceeds its budget
std::vector<Integer> divisors(Integer n) {
    if (n < 0) n = -n;
    if (n == 0) throw std::invalid_argument("divisors of zero");
    std::vector<Integer> out;
    Integer d(1);
    long budget = 2000000;
    while (d * d <= n) {
        if (n % d == 0) {
            out.push_back(d);
            Integer q = n / d;
            if (q != d) out.push_back(q);
        }
        ++d;
        if (--budget == 0) throw std::runtime_error("rational root search out of bounds");
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<std::pair<Rational, int>> Poly::rational_roots() const {
    std::vector<std::pair<Rational, int>> roots;
    if (degree() < 1) return roots;
    auto factors = squarefree_factors();
    for (std::size_t k = 0; k < factors.size(); ++k) {
        Poly f = factors[k];
        if (f.degree() < 1) continue;
        int mult = static_cast<int>(k) + 1;
        if (f.coeff(0) == 0) {
            roots.emplace_back(Rational(0), mult);
            Poly q, r;
            divmod(f, Poly::x(), q, r);
            f = q;
        }
        if (f.degree() < 1) continue;
        auto ic = f.integer_normalized();
        for (const auto& p : divisors(ic.front()))
            for (const auto& q : divisors(ic.back()))
                for (int sgn : {1, -1}) {
                    Rational cand(p * sgn, q);
                    cand.canonicalize();
                    if (f.eval(cand) == 0) {
                        bool dup = false;
                        for (auto& [rv, rm] : roots)
                            if (rv == cand && rm == mult) dup = true;
                        if (!dup) roots.emplace_back(cand, mult);
                    }
                }
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

Poly char_poly(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly of nonsquare matrix");
    std::size_t n = m.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    Matrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += c[n - k + 1];
        mk = m * mk;
        Rational tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += mk.at(i, i);
        c[n - k] = -tr / Rational(static_cast<long>(k));
    }
    return Poly(std::move(c));
}

Poly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& pts) {
    Poly acc;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Poly term = Poly::constant(pts[i].second);
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            Rational dx = pts[i].first - pts[j].first;
            if (dx == 0) throw std::invalid_argument("repeated interpolation abscissa");
            term = term * (Poly::x() - Poly::constant(pts[j].first)) * (1 / dx);
        }
        acc = acc + term;
    }
    return acc;
}

}  // namespace ncgeo
