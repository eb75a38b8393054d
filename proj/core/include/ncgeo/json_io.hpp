#ifndef NCGEO_JSON_IO_HPP
#define NCGEO_JSON_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "dirac.hpp"
#include "finset.hpp"
#include "group.hpp"
#include "representation.hpp"
#include "riemannian.hpp"

namespace ncgeo {

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Loaders parse JSON text and throw BadInput with a location hint on
// malformed data. The *_file variants read the path first.

// {"permutation_generators": [[...]], "degree": n} or
// {"multiplication_table": [[...]]}; optional "generator_labels", "labels"
GroupTable load_group_json(const std::string& text);
GroupTable load_group_file(const std::string& path);

// {"dim": d, "generators": {"<element label>": [[entry]]}}; entries are
// integers, [num, den] pairs, or "p/q" strings
Representation load_rep_json(const GroupTable& G, const std::string& text);
Representation load_rep_file(const GroupTable& G, const std::string& path);

// {"basis": ["A[u]^v", ...], "coefficients": [[entry per group element]]}
Connection load_connection_json(const TwoFormSpace& space, const std::string& text);
Connection load_connection_file(const TwoFormSpace& space, const std::string& path);

// {"cotensor": [[entry]]}, an n x n constant matrix g^{ab}
Matrix load_metric_json(std::size_t n, const std::string& text);
Matrix load_metric_file(std::size_t n, const std::string& path);

// {"points": n, "edges": [[x, y], ...]}
EdgeCalculus load_edges_json(const std::string& text);
EdgeCalculus load_edges_file(const std::string& path);

// {"dim": d, "matrices": [[[entry]] ...]}, one matrix per member of C in
// ascending element order
std::vector<Matrix> load_gammas_json(std::size_t count, const std::string& text);
std::vector<Matrix> load_gammas_file(std::size_t count, const std::string& path);

// Writers return the full JSON document. Output is deterministic; rationals
// are emitted as [num, den] pairs, decimals appear only in spectra.

std::string group_json(const GroupTable& G);
std::string calculus_json(const TwoFormSpace& space);
std::string killing_json(const AdSet& C, const KillingForm& kf);
std::string moduli_json(const TwoFormSpace& space, const AffineModuli& m);
std::string connection_json(const TwoFormSpace& space, const Connection& conn);
std::string metric_json(const TwoFormSpace& space, const Coframing& cf);
std::string geometry_json(const TwoFormSpace& space, const Curvature& curv,
                          const std::string& lift_flavor, const OneOneTensor* ric,
                          const GroupFunction* scalar);
std::string dirac_json(const Matrix& D, const Rational& trace_sq);
std::string spectrum_json(const Spectrum& s);

}  // namespace ncgeo

#endif
