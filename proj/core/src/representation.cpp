#include "ncgeo/representation.hpp"

namespace ncgeo {

Representation check_representation(const GroupTable& G, std::size_t dim,
                                    const std::map<int, Matrix>& given) {
    const int n = static_cast<int>(G.order());
    std::vector<Matrix> mats(n);
    std::vector<bool> known(n, false);

    mats[G.id()] = Matrix::identity(dim);
    known[G.id()] = true;
    for (const auto& [g, m] : given) {
        if (g < 0 || g >= n) throw GroupError("representation matrix for unknown element");
        if (m.rows() != dim || m.cols() != dim)
            throw GroupError("representation matrix has wrong shape");
        if (known[g] && !(mats[g] == m))
            throw NotHomomorphism("conflicting matrix for element " + G.label(g));
        mats[g] = m;
        known[g] = true;
    }

    // close multiplicatively over the supplied generators
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x = 0; x < n; ++x) {
            if (!known[x]) continue;
            for (const auto& [g, m] : given) {
                int y = G.mul(x, g);
                if (known[y]) continue;
                mats[y] = mats[x] * m;
                known[y] = true;
                grew = true;
            }
        }
    }
    for (int x = 0; x < n; ++x)
        if (!known[x])
            throw GroupError("supplied matrices do not generate the group (missing " +
                             G.label(x) + ")");

    for (int x = 0; x < n; ++x)
        if (!mats[x].inverse()) throw NotInvertible("singular matrix at " + G.label(x));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (!(mats[x] * mats[y] == mats[G.mul(x, y)]))
                throw NotHomomorphism("rho(" + G.label(x) + ")rho(" + G.label(y) +
                                      ") != rho(" + G.label(G.mul(x, y)) + ")");

    Representation r;
    r.group = &G;
    r.dim = dim;
    r.mats = std::move(mats);
    return r;
}

Representation s3_two_dim_rep(const GroupTable& s3) {
    Matrix u(2, 2), v(2, 2);
    u(0, 1) = 1;
    u(1, 0) = 1;
    v(0, 0) = 1;
    v(1, 0) = -1;
    v(1, 1) = -1;
    return check_representation(s3, 2, {{1, u}, {2, v}});
}

Representation trivial_rep(const GroupTable& G, std::size_t dim) {
    std::map<int, Matrix> gen;
    for (int g = 1; g < static_cast<int>(G.order()); ++g) gen.emplace(g, Matrix::identity(dim));
    return check_representation(G, dim, gen);
}

Representation regular_rep(const GroupTable& G) {
    const int n = static_cast<int>(G.order());
    std::map<int, Matrix> gen;
    for (int g = 0; g < n; ++g) {
        Matrix m(G.order(), G.order());
        for (int y = 0; y < n; ++y) m(G.mul(g, y), y) = 1;
        gen.emplace(g, m);
    }
    return check_representation(G, G.order(), gen);
}

}  // namespace ncgeo
