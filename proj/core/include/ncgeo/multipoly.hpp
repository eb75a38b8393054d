#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"
#include "rational.hpp"

namespace ncgeo {

// Sparse polynomial in a small number of variables over Q. Used to expand
// quadratic residuals over the parameters of an affine moduli family.
class MultiPoly {
public:
    using Key = std::vector<int>;  // exponent vector of length nvars

    MultiPoly() = default;
    explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

    static MultiPoly constant(std::size_t nvars, const Rational& c);
    static MultiPoly var(std::size_t nvars, std::size_t i);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    std::optional<Rational> as_constant() const;
    const std::map<Key, Rational>& terms() const { return terms_; }

    void add_term(const Key& k, const Rational& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& s) const;
    bool operator==(const MultiPoly& o) const = default;

    // var i := value (a polynomial in the remaining variables)
    MultiPoly substitute(std::size_t i, const MultiPoly& value) const;
    Rational eval(const std::vector<Rational>& point) const;
    bool mentions(std::size_t i) const;

    // decomposes as c0 + grad.x when total degree <= 1
    bool linear_parts(Rational& c0, std::vector<Rational>& grad) const;
    // when exactly one variable occurs: its index and the univariate image
    std::optional<std::pair<std::size_t, Poly>> as_univariate() const;

private:
    std::size_t nvars_ = 0;
    std::map<Key, Rational> terms_;
};

struct PolySystemSolution {
    enum class Status { Points, EveryPoint, PositiveDimensional, Empty, Unresolved };
    Status status = Status::Empty;
    std::vector<std::vector<Rational>> points;  // rational solutions when Status::Points
    std::string note;
};

// Exact solution set over Q of a small system (linear elimination plus
// univariate rational-root branching; anything past that reports Unresolved).
PolySystemSolution solve_poly_system(const std::vector<MultiPoly>& eqs, std::size_t nvars);

}  // namespace ncgeo
