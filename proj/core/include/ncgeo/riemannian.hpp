#ifndef NCGEO_RIEMANNIAN_HPP
#define NCGEO_RIEMANNIAN_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "calculus.hpp"
#include "multipoly.hpp"

namespace ncgeo {

struct DegenerateKilling : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotRegular : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// braided-Killing form eta^{ab} = #{c in C : c(ab) = (ab)c}; the offset
// variant subtracts the one-sided counts, n(ab) - n(a) - n(b) + n(e)
struct KillingForm {
    Matrix eta;
    std::optional<Matrix> eta_inv;
    bool semisimple = false;
};

KillingForm killing_form(const AdSet& C, bool offset = false);

// coframing E*^a = sum_b E_b . gmat[b][a] with right coefficients; gmat_inv
// holds the cotensor components g^{ab} of the induced metric
struct Coframing {
    std::vector<std::vector<GroupFunction>> gmat;
    std::vector<std::vector<GroupFunction>> gmat_inv;

    // left-normalized 1-form of E*^a, coefficient of E_b is R_b(gmat[b][a])
    OneForm dual_form(const TwoFormSpace& space, std::size_t ia) const;
};

// gmat entries constant, equal to the matrix inverse of g_upper
Coframing coframing_from_cotensor(const TwoFormSpace& space, const Matrix& g_upper);
// pointwise inversion of function-valued coefficients
Coframing coframing_from_functions(const TwoFormSpace& space,
                                   const std::vector<std::vector<GroupFunction>>& gmat);
Coframing killing_coframing(const TwoFormSpace& space);

// cotensor family eta - lambda * (all ones); singular members rejected by
// coframing_from_cotensor
Matrix metric_family(const KillingForm& kf, const Rational& lambda);

struct Connection {
    // comps[which][coeff]: the 1-form indexed by C position `which` has
    // E-coefficient GroupFunction comps[which][coeff]
    std::vector<std::vector<GroupFunction>> comps;

    OneForm form(const TwoFormSpace& space, std::size_t which) const;
};

std::size_t connection_ambient_dim(const TwoFormSpace& space);
Connection connection_from_vector(const TwoFormSpace& space, const std::vector<Rational>& v);
std::vector<Rational> connection_to_vector(const TwoFormSpace& space, const Connection& conn);

// torsion T^a = dE_a + sum_b A_b ^ (E_{b^-1 a b} - E_a), one 2-form per a
std::vector<TwoForm> torsion_of(const TwoFormSpace& space, const Connection& conn);

// cotorsion D_A E*^a = dE*^a + sum_c (E*^{c a c^-1} - E*^a) ^ A_c
std::vector<TwoForm> cotorsion_of(const TwoFormSpace& space, const Coframing& cf,
                                  const Connection& conn);

// sum_{ab=q} A_a ^ A_b for every product q outside C and the identity
std::vector<std::pair<int, TwoForm>> regularity_residuals(const TwoFormSpace& space,
                                                          const Connection& conn);

// affine solution set base + span(basis columns) inside the connection
// coefficient space
struct AffineModuli {
    std::size_t ambient_dim = 0;
    std::vector<Rational> base;
    Matrix basis;  // ambient_dim x dim, columns are directions
    bool consistent = true;
    std::string description;

    std::size_t dim() const { return consistent ? basis.cols() : 0; }
    std::vector<Rational> point(const std::vector<Rational>& coeffs) const;
};

AffineModuli solve_torsion_free(const TwoFormSpace& space);
AffineModuli solve_cotorsion_free(const TwoFormSpace& space, const Coframing& cf);
AffineModuli intersect_moduli(const AffineModuli& m1, const AffineModuli& m2);
bool same_affine_span(const AffineModuli& m1, const AffineModuli& m2);
bool moduli_contains(const AffineModuli& m, const std::vector<Rational>& v);

struct RegularSearch {
    enum class Status { Points, EveryPoint, PositiveDimensional, Empty, Unresolved };
    Status status = Status::Unresolved;
    std::vector<std::vector<Rational>> params;  // moduli coordinates
    std::vector<std::vector<Rational>> points;  // ambient connection vectors
    std::string note;
};

// exact search for regular points of the family; throws DimensionTooLarge
// past the solvable bound
RegularSearch find_regular(const TwoFormSpace& space, const AffineModuli& moduli,
                           std::size_t bound = 4);

struct Curvature {
    std::vector<TwoForm> F;  // per position of C
    bool regular = true;
    std::vector<std::pair<int, TwoForm>> residuals;
};

// F_a = dA_a + sum_{cd=a} A_c ^ A_d - sum_b (A_b ^ A_a + A_a ^ A_b)
Curvature curvature(const TwoFormSpace& space, const Connection& conn);
void require_regular(const TwoFormSpace& space, const Curvature& curv);

struct OneOneTensor {
    std::vector<std::vector<GroupFunction>> comp;  // comp[p][q] . E_p x E_q
    OneOneTensor() = default;
    OneOneTensor(std::size_t n, std::size_t order)
        : comp(n, std::vector<GroupFunction>(n, GroupFunction(order))) {}
    bool is_zero() const;
    bool operator==(const OneOneTensor& o) const = default;
    OneOneTensor operator-(const OneOneTensor& o) const;
    OneOneTensor operator*(const Rational& c) const;
};

struct TwoOneTensor {
    std::vector<std::vector<GroupFunction>> comp;  // comp[k][q], 2-form index k
    TwoOneTensor() = default;
    TwoOneTensor(std::size_t dim2, std::size_t n, std::size_t order)
        : comp(dim2, std::vector<GroupFunction>(n, GroupFunction(order))) {}
    bool is_zero() const;
    bool operator==(const TwoOneTensor& o) const = default;
    TwoOneTensor operator-(const TwoOneTensor& o) const;
};

struct OneOneOneTensor {
    std::vector<std::vector<std::vector<GroupFunction>>> comp;  // comp[p][q][r]
    OneOneOneTensor() = default;
    OneOneOneTensor(std::size_t n, std::size_t order)
        : comp(n, std::vector<std::vector<GroupFunction>>(
                      n, std::vector<GroupFunction>(n, GroupFunction(order)))) {}
    bool is_zero() const;
    bool operator==(const OneOneOneTensor& o) const = default;
    OneOneOneTensor operator-(const OneOneOneTensor& o) const;
};

// nabla alpha = d(alpha^a) x E_a - alpha^a sum_b A_b x (E_{b^-1 a b} - E_a)
OneOneTensor covariant_derivative(const TwoFormSpace& space, const Connection& conn,
                                  const OneForm& alpha);

// R alpha = alpha^a sum_b F_b x (E_{b^-1 a b} - E_a), on the basis form at ia
TwoOneTensor riemann_on_basis(const TwoFormSpace& space, const Curvature& curv,
                              std::size_t ia);

struct Lift {
    Matrix mat;  // |C|^2 x dim2, columns lift the quotient basis
    std::string flavor;
};

Lift lift_woronowicz(const TwoFormSpace& space);
Lift lift_projection(const TwoFormSpace& space);

// Ricci = sum_{a,b,c} i(F)^{ab}_c E_b x (E_{c^-1 a c} - E_a)
OneOneTensor ricci(const TwoFormSpace& space, const Curvature& curv, const Lift& lift);

// s = sum_{a,b} g_{ba} Ricci^{ab} pointwise
GroupFunction scalar_curvature(const TwoFormSpace& space, const Coframing& cf,
                               const OneOneTensor& ric);

// collapse a (1,1) tensor through the quotient wedge, leg by leg
TwoForm wedge_contract(const TwoFormSpace& space, const OneOneTensor& t);

// one-sided derivative of the cotensor h = h^{ab} E_a x E_b along the
// connection, with the left output leg written first
OneOneOneTensor nabla_on_metric(const TwoFormSpace& space, const Connection& conn,
                                const OneOneTensor& h);

// (wedge on the first two legs of nabla_on_metric) minus (wedge of the first
// leg against the derivative of the second); zero at metric compatibility
TwoOneTensor metric_compat_defect(const TwoFormSpace& space, const Connection& conn,
                                  const OneOneTensor& h);

OneOneTensor metric_cotensor(const TwoFormSpace& space, const Coframing& cf);

}  // namespace ncgeo

#endif
