#ifndef NCGEO_FINSET_HPP
#define NCGEO_FINSET_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "riemannian.hpp"

namespace ncgeo {

struct MissingLift : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotBijective : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Directed graph on points 0..npoints-1 without loops. Forms live on edges,
// 2-tensors on composable pairs of edges; pair_keys lists the endpoints (x, z)
// reachable by such a pair, with the middle points as the fiber.
struct EdgeCalculus {
    std::size_t npoints = 0;
    std::vector<std::pair<int, int>> edges;            // lex sorted, unique
    std::vector<std::vector<int>> out_nbrs;            // per point, ascending
    std::vector<std::tuple<int, int, int>> triples;    // composable (x, y, z)
    std::vector<std::pair<int, int>> pair_keys;        // lex sorted (x, z)
    std::vector<std::vector<int>> fibers;              // per pair_key, ascending y

    static EdgeCalculus make(std::size_t npoints, std::vector<std::pair<int, int>> edges);

    int edge_index(int x, int y) const;      // -1 when absent
    bool has_edge(int x, int y) const { return edge_index(x, y) >= 0; }
    int pair_index(int x, int z) const;      // -1 when absent
    int triple_index(int x, int y, int z) const;
};

// every point has exactly want out-neighbors
bool validate_fibration(const EdgeCalculus& ec, std::size_t want);

struct Fin1Form {
    std::vector<Rational> edge;  // aligned to ec.edges

    bool is_zero() const;
    bool operator==(const Fin1Form& o) const = default;
    Fin1Form operator+(const Fin1Form& o) const;
    Fin1Form operator-(const Fin1Form& o) const;
};

struct Fin2Form {
    std::vector<std::vector<Rational>> comp;  // per pair_key, per projection row

    bool is_zero() const;
    bool operator==(const Fin2Form& o) const = default;
    Fin2Form operator+(const Fin2Form& o) const;
    Fin2Form operator-(const Fin2Form& o) const;
};

struct Fin3Form {
    std::vector<Rational> tri;  // aligned to ec.triples

    bool is_zero() const;
    bool operator==(const Fin3Form& o) const = default;
    Fin3Form operator+(const Fin3Form& o) const;
    Fin3Form operator-(const Fin3Form& o) const;
};

using Fin1Family = std::vector<Fin1Form>;

// V-bein: per point the coefficient matrix (row a, column = out-neighbor
// position) must be invertible
struct VBein {
    std::size_t nlabels = 0;
    std::vector<Matrix> E;     // per point
    std::vector<Matrix> Einv;  // per point, (neighbor position, a)

    static VBein make(const EdgeCalculus& ec, const Fin1Family& family);

    // E_{a,x,y} and E_a^{-1,x,y}
    Rational coeff(const EdgeCalculus& ec, std::size_t a, int x, int y) const;
    Rational inv_coeff(const EdgeCalculus& ec, std::size_t a, int x, int y) const;
};

Matrix local_vbein(const EdgeCalculus& ec, const Fin1Family& family, int x);

// projections p_{x,z}: paths through the fiber onto 2-form coordinates, with
// optional lifts i satisfying p . i = id
struct WedgeFamily {
    std::vector<Matrix> p;                    // per pair_key, rows x fiber
    std::vector<std::optional<Matrix>> lift;  // per pair_key, fiber x rows

    static WedgeFamily make(const EdgeCalculus& ec, std::vector<Matrix> p,
                            std::vector<std::optional<Matrix>> lift = {});
    bool has_lifts() const;
    Matrix pi(std::size_t pk) const;  // lift . p, throws MissingLift
};

// whether p . lift = id at every pair, so the lift is a section
bool lifts_section(const WedgeFamily& wf);

// abstract product on the index labels; outside ids group the products that
// leave the label set and the identity
struct IndexProduct {
    struct Entry {
        int inside = -1;    // position in the label set, -1 when not a label
        bool identity = false;
        int outside = -1;   // class id when neither a label nor the identity
    };
    std::size_t nlabels = 0;
    std::vector<std::vector<Entry>> table;
    std::vector<std::string> outside_names;
};

// structure constants tau[i][p][q]
using StructureConstants = std::vector<std::vector<std::vector<Rational>>>;

Fin1Form d_function(const EdgeCalculus& ec, const std::vector<Rational>& f);

// (d alpha) at (x, z): rows of p applied to alpha_{x,y} + alpha_{y,z} - alpha_{x,z}
Fin2Form d_one_form_fin(const EdgeCalculus& ec, const WedgeFamily& wf, const Fin1Form& alpha);

// projected product alpha_{x,y} beta_{y,z}
Fin2Form wedge_fin(const EdgeCalculus& ec, const WedgeFamily& wf, const Fin1Form& alpha,
                   const Fin1Form& beta);

// unprojected path product
Fin3Form path_product(const EdgeCalculus& ec, const Fin1Form& alpha, const Fin1Form& beta);

// alpha^a_x = sum_y E_a^{-1,x,y} alpha_{x,y}
std::vector<std::vector<Rational>> component_functions(const EdgeCalculus& ec, const VBein& vb,
                                                       const Fin1Form& alpha);

// (nabla alpha)_{x,y,z} = (alpha^a_y - alpha^a_x) E_{a,y,z}
//                         - alpha^a_x A_{i,x,y} E_{b,y,z} tau[i][b][a]
Fin3Form nabla_tensor(const EdgeCalculus& ec, const VBein& vb, const StructureConstants& tau,
                      const Fin1Family& A, const Fin1Form& alpha);

// per a: (d E_a) + p(A_{i,x,y} E_{b,y,z}) tau[i][b][a]
std::vector<Fin2Form> torsion_tensor(const EdgeCalculus& ec, const WedgeFamily& wf,
                                     const VBein& vb, const StructureConstants& tau,
                                     const Fin1Family& A);

// per a: (d Estar^a) + p(Estar^b_{x,y} A_{i,y,z}) tau[i][a][b]
std::vector<Fin2Form> cotorsion_tensor(const EdgeCalculus& ec, const WedgeFamily& wf,
                                       const VBein& vb, const StructureConstants& tau,
                                       const Fin1Family& A, const Fin1Family& Estar);

struct FinCurvature {
    std::vector<Fin2Form> F;  // per label i
    bool regular = true;
    std::vector<std::pair<std::string, Fin2Form>> residuals;  // per outside class
};

// F_i = dA_i + sum_{jk=i} p(A_j A_k) - sum_j p(A_j A_i + A_i A_j)
FinCurvature curvature_tensor(const EdgeCalculus& ec, const WedgeFamily& wf,
                              const IndexProduct& prod, const Fin1Family& A);

// R^a_b = F_i tau[i][a][b] as path tensors through the lift
std::vector<std::vector<Fin3Form>> riemann_tensor(const EdgeCalculus& ec,
                                                  const WedgeFamily& wf,
                                                  const StructureConstants& tau,
                                                  const IndexProduct& prod,
                                                  const Fin1Family& A);

// curvature recomputed with pi in place of p everywhere, so values live on paths
std::vector<Fin3Form> lifted_curvature(const EdgeCalculus& ec, const WedgeFamily& wf,
                                       const IndexProduct& prod, const Fin1Family& A);

// Ricci_{x,y,z} = i(F_i)_x^{ab} E_{b,x,y} E_{c,y,z} tau[i][c][a]
Fin3Form ricci_tensor(const EdgeCalculus& ec, const WedgeFamily& wf, const VBein& vb,
                      const StructureConstants& tau, const IndexProduct& prod,
                      const Fin1Family& A);

// g_{x,y,z} = Estar^a_{x,y} E_{a,y,z}
Fin3Form metric_tensor_fin(const EdgeCalculus& ec, const VBein& vb, const Fin1Family& Estar);

// (partial^a f)(x) = sum_y E_a^{-1,x,y} (f_y - f_x)
std::vector<Rational> partial_fin(const EdgeCalculus& ec, const VBein& vb, std::size_t a,
                                  const std::vector<Rational>& f);

// Dirac operator partial^a gamma_a - A_i^a gamma_a tauW[i] on functions
// tensor spinors, point index outer
Matrix dirac_tensor(const EdgeCalculus& ec, const VBein& vb, const Fin1Family& A,
                    const std::vector<Matrix>& tauW, const std::vector<Matrix>& gammas);

// rho_a^b(f)(x) = sum_y E_b^{-1,x,y} f(y) E_{a,x,y}; theta^a(x) = sum_y E_a^{-1,x,y}
std::vector<Rational> cartan_rho(const EdgeCalculus& ec, const VBein& vb, std::size_t a,
                                 std::size_t b, const std::vector<Rational>& f);
std::vector<Rational> cartan_theta(const EdgeCalculus& ec, const VBein& vb, std::size_t a);

// group model assembled for the finite-set engine
struct GroupFinsetModel {
    EdgeCalculus ec;
    Fin1Family vbein_forms;
    VBein vb;
    WedgeFamily wf;
    StructureConstants tau;
    IndexProduct prod;
    std::vector<std::size_t> block_rows;  // per pair_key, global 2-form indices
};

// lift, when given, populates the wedge family lifts blockwise
GroupFinsetModel finset_from_group(const TwoFormSpace& space, const Lift* lift = nullptr);

Fin1Form to_fin_one_form(const GroupFinsetModel& m, const TwoFormSpace& space,
                         const OneForm& alpha);
Fin2Form to_fin_two_form(const GroupFinsetModel& m, const TwoFormSpace& space,
                         const TwoForm& omega);
Fin3Form to_fin_path_tensor(const GroupFinsetModel& m, const TwoFormSpace& space,
                            const OneOneTensor& T);
Fin1Family to_fin_family(const GroupFinsetModel& m, const TwoFormSpace& space,
                         const std::vector<OneForm>& forms);

}  // namespace ncgeo

#endif
