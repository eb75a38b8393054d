#pragma once

#include <map>
#include <vector>

#include "group.hpp"
#include "matrix.hpp"

namespace ncgeo {

struct NotHomomorphism : GroupError {
    using GroupError::GroupError;
};
struct NotInvertible : GroupError {
    using GroupError::GroupError;
};

// Exact-rational matrix representation of a finite group.
struct Representation {
    const GroupTable* group = nullptr;
    std::size_t dim = 0;
    std::vector<Matrix> mats;  // per element index

    const Matrix& of(int g) const { return mats[g]; }
    // rho(g) - rho(e), the `Lie algebra' direction of g
    Matrix of_minus_id(int g) const { return mats[g] - Matrix::identity(dim); }
};

// Extends `given` (element index -> matrix) multiplicatively when it only
// covers a generating set, then verifies the homomorphism property and
// invertibility exhaustively.
Representation check_representation(const GroupTable& G, std::size_t dim,
                                    const std::map<int, Matrix>& given);

// The 2-dimensional representation of the order-6 symmetric group used in
// all worked examples: u -> [[0,1],[1,0]], v -> [[1,0],[-1,-1]].
Representation s3_two_dim_rep(const GroupTable& s3);

// One-dimensional trivial representation of any group.
Representation trivial_rep(const GroupTable& G, std::size_t dim = 1);

// Left regular representation, rho(g) e_y = e_{gy}, dim = |G|.
Representation regular_rep(const GroupTable& G);

}  // namespace ncgeo
