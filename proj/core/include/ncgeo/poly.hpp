#pragma once

#include <utility>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"

namespace ncgeo {

// Univariate polynomial over Q, coefficients ascending.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);

    static Poly x();
    static Poly constant(const Rational& c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational leading() const;

    bool operator==(const Poly& o) const = default;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& s) const;

    Poly derivative() const;
    Rational eval(const Rational& x) const;

    static void divmod(const Poly& num, const Poly& den, Poly& quot, Poly& rem);
    Poly monic() const;
    static Poly gcd(Poly a, Poly b);  // monic

    // Yun decomposition: result[k] is the (monic) product of the irreducible
    // factors of multiplicity k+1; trailing entries may be 1.
    std::vector<Poly> squarefree_factors() const;

    // Integer coefficients with content 1 and positive leading coefficient.
    std::vector<Integer> integer_normalized() const;

    // All rational roots with multiplicities (complete search).
    std::vector<std::pair<Rational, int>> rational_roots() const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Monic characteristic polynomial det(xI - M) via the Faddeev-LeVerrier recursion.
Poly char_poly(const Matrix& m);

// Unique interpolating polynomial through distinct-abscissa points.
Poly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& pts);

}  // namespace ncgeo
