#include "ncgeo/finset.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ncgeo {

EdgeCalculus EdgeCalculus::make(std::size_t npoints, std::vector<std::pair<int, int>> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    EdgeCalculus ec;
    ec.npoints = npoints;
    for (auto [x, y] : edges) {
        if (x < 0 || y < 0 || x >= static_cast<int>(npoints) || y >= static_cast<int>(npoints))
            throw std::runtime_error("edge endpoint out of range");
        if (x == y) throw std::runtime_error("loop edges are not allowed");
    }
    ec.edges = std::move(edges);
    ec.out_nbrs.assign(npoints, {});
    for (auto [x, y] : ec.edges) ec.out_nbrs[static_cast<std::size_t>(x)].push_back(y);
    for (int x = 0; x < static_cast<int>(npoints); ++x)
        for (int y : ec.out_nbrs[static_cast<std::size_t>(x)])
            for (int z : ec.out_nbrs[static_cast<std::size_t>(y)])
                ec.triples.emplace_back(x, y, z);
    std::sort(ec.triples.begin(), ec.triples.end(),
              [](const auto& s, const auto& t) {
                  return std::tie(std::get<0>(s), std::get<2>(s), std::get<1>(s)) <
                         std::tie(std::get<0>(t), std::get<2>(t), std::get<1>(t));
              });
    for (auto [x, y, z] : ec.triples) {
        if (ec.pair_keys.empty() || ec.pair_keys.back() != std::make_pair(x, z)) {
            ec.pair_keys.emplace_back(x, z);
            ec.fibers.emplace_back();
        }
        ec.fibers.back().push_back(y);
    }
    std::sort(ec.triples.begin(), ec.triples.end());
    return ec;
}

int EdgeCalculus::edge_index(int x, int y) const {
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(x, y));
    if (it == edges.end() || *it != std::make_pair(x, y)) return -1;
    return static_cast<int>(it - edges.begin());
}

int EdgeCalculus::pair_index(int x, int z) const {
    auto it = std::lower_bound(pair_keys.begin(), pair_keys.end(), std::make_pair(x, z));
    if (it == pair_keys.end() || *it != std::make_pair(x, z)) return -1;
    return static_cast<int>(it - pair_keys.begin());
}

int EdgeCalculus::triple_index(int x, int y, int z) const {
    auto key = std::make_tuple(x, y, z);
    auto it = std::lower_bound(triples.begin(), triples.end(), key);
    if (it == triples.end() || *it != key) return -1;
    return static_cast<int>(it - triples.begin());
}

bool validate_fibration(const EdgeCalculus& ec, std::size_t want) {
    for (std::size_t x = 0; x < ec.npoints; ++x)
        if (ec.out_nbrs[x].size() != want) return false;
    return true;
}

bool Fin1Form::is_zero() const {
    return std::all_of(edge.begin(), edge.end(), [](const Rational& v) { return v == 0; });
}

Fin1Form Fin1Form::operator+(const Fin1Form& o) const {
    Fin1Form r = *this;
    for (std::size_t i = 0; i < edge.size(); ++i) r.edge[i] = edge[i] + o.edge[i];
    return r;
}

Fin1Form Fin1Form::operator-(const Fin1Form& o) const {
    Fin1Form r = *this;
    for (std::size_t i = 0; i < edge.size(); ++i) r.edge[i] = edge[i] - o.edge[i];
    return r;
}

bool Fin2Form::is_zero() const {
    for (const auto& block : comp)
        for (const auto& v : block)
            if (v != 0) return false;
    return true;
}

Fin2Form Fin2Form::operator+(const Fin2Form& o) const {
    Fin2Form r = *this;
    for (std::size_t i = 0; i < comp.size(); ++i)
        for (std::size_t j = 0; j < comp[i].size(); ++j) r.comp[i][j] = comp[i][j] + o.comp[i][j];
    return r;
}

Fin2Form Fin2Form::operator-(const Fin2Form& o) const {
    Fin2Form r = *this;
    for (std::size_t i = 0; i < comp.size(); ++i)
        for (std::size_t j = 0; j < comp[i].size(); ++j) r.comp[i][j] = comp[i][j] - o.comp[i][j];
    return r;
}

bool Fin3Form::is_zero() const {
    return std::all_of(tri.begin(), tri.end(), [](const Rational& v) { return v == 0; });
}

Fin3Form Fin3Form::operator+(const Fin3Form& o) const {
    Fin3Form r = *this;
    for (std::size_t i = 0; i < tri.size(); ++i) r.tri[i] = tri[i] + o.tri[i];
    return r;
}

Fin3Form Fin3Form::operator-(const Fin3Form& o) const {
    Fin3Form r = *this;
    for (std::size_t i = 0; i < tri.size(); ++i) r.tri[i] = tri[i] - o.tri[i];
    return r;
}

Matrix local_vbein(const EdgeCalculus& ec, const Fin1Family& family, int x) {
    const auto& nbrs = ec.out_nbrs[static_cast<std::size_t>(x)];
    Matrix m(family.size(), nbrs.size());
    for (std::size_t a = 0; a < family.size(); ++a)
        for (std::size_t j = 0; j < nbrs.size(); ++j)
            m.at(a, j) = family[a].edge[static_cast<std::size_t>(ec.edge_index(x, nbrs[j]))];
    return m;
}

VBein VBein::make(const EdgeCalculus& ec, const Fin1Family& family) {
    VBein vb;
    vb.nlabels = family.size();
    for (int x = 0; x < static_cast<int>(ec.npoints); ++x) {
        Matrix m = local_vbein(ec, family, x);
        if (m.rows() != m.cols())
            throw NotBijective("point " + std::to_string(x) + " has " +
                               std::to_string(m.cols()) + " out-neighbors for " +
                               std::to_string(m.rows()) + " co-frame labels");
        auto inv = m.inverse();
        if (!inv)
            throw NotBijective("co-frame is not invertible at point " + std::to_string(x));
        vb.E.push_back(std::move(m));
        vb.Einv.push_back(std::move(*inv));
    }
    return vb;
}

namespace {

std::size_t nbr_pos(const EdgeCalculus& ec, int x, int y) {
    const auto& nbrs = ec.out_nbrs[static_cast<std::size_t>(x)];
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), y);
    return static_cast<std::size_t>(it - nbrs.begin());
}

}  // namespace

Rational VBein::coeff(const EdgeCalculus& ec, std::size_t a, int x, int y) const {
    return E[static_cast<std::size_t>(x)].at(a, nbr_pos(ec, x, y));
}

Rational VBein::inv_coeff(const EdgeCalculus& ec, std::size_t a, int x, int y) const {
    return Einv[static_cast<std::size_t>(x)].at(nbr_pos(ec, x, y), a);
}

WedgeFamily WedgeFamily::make(const EdgeCalculus& ec, std::vector<Matrix> p,
                              std::vector<std::optional<Matrix>> lift) {
    if (p.size() != ec.pair_keys.size())
        throw std::runtime_error("projection family size does not match the pair keys");
    for (std::size_t pk = 0; pk < p.size(); ++pk)
        if (p[pk].cols() != ec.fibers[pk].size())
            throw std::runtime_error("projection width does not match the fiber");
    // away from edges and the diagonal the rows must kill constants
    for (std::size_t pk = 0; pk < p.size(); ++pk) {
        auto [x, z] = ec.pair_keys[pk];
        if (x == z || ec.has_edge(x, z)) continue;
        for (std::size_t r = 0; r < p[pk].rows(); ++r) {
            Rational s = 0;
            for (std::size_t j = 0; j < p[pk].cols(); ++j) s += p[pk].at(r, j);
            if (s != 0)
                throw std::runtime_error("projection row has nonzero sum over the fiber of (" +
                                         std::to_string(x) + ", " + std::to_string(z) + ")");
        }
    }
    WedgeFamily wf;
    wf.p = std::move(p);
    if (!lift.empty()) {
        if (lift.size() != wf.p.size())
            throw std::runtime_error("lift family size does not match the pair keys");
        for (std::size_t pk = 0; pk < lift.size(); ++pk) {
            if (!lift[pk]) continue;
            if (lift[pk]->rows() != wf.p[pk].cols() || lift[pk]->cols() != wf.p[pk].rows())
                throw std::runtime_error("lift shape does not match its projection");
        }
        wf.lift = std::move(lift);
    } else {
        wf.lift.assign(wf.p.size(), std::nullopt);
    }
    return wf;
}

bool WedgeFamily::has_lifts() const {
    for (std::size_t pk = 0; pk < p.size(); ++pk)
        if (p[pk].rows() > 0 && !lift[pk]) return false;
    return true;
}

Matrix WedgeFamily::pi(std::size_t pk) const {
    if (p[pk].rows() == 0) return Matrix(p[pk].cols(), p[pk].cols());
    if (!lift[pk]) throw MissingLift("no lift at pair key " + std::to_string(pk));
    return *lift[pk] * p[pk];
}

bool lifts_section(const WedgeFamily& wf) {
    for (std::size_t pk = 0; pk < wf.p.size(); ++pk) {
        if (wf.p[pk].rows() == 0) continue;
        if (!wf.lift[pk]) return false;
        if (wf.p[pk] * *wf.lift[pk] != Matrix::identity(wf.p[pk].rows())) return false;
    }
    return true;
}

Fin1Form d_function(const EdgeCalculus& ec, const std::vector<Rational>& f) {
    Fin1Form df;
    df.edge.resize(ec.edges.size());
    for (std::size_t e = 0; e < ec.edges.size(); ++e)
        df.edge[e] = f[static_cast<std::size_t>(ec.edges[e].second)] -
                     f[static_cast<std::size_t>(ec.edges[e].first)];
    return df;
}

namespace {

Rational edge_value(const EdgeCalculus& ec, const Fin1Form& alpha, int x, int y) {
    int e = ec.edge_index(x, y);
    return e < 0 ? Rational(0) : alpha.edge[static_cast<std::size_t>(e)];
}

Fin2Form zero_two_form(const WedgeFamily& wf) {
    Fin2Form out;
    out.comp.resize(wf.p.size());
    for (std::size_t pk = 0; pk < wf.p.size(); ++pk)
        out.comp[pk].assign(wf.p[pk].rows(), Rational(0));
    return out;
}

Fin2Form project_fibers(
    const EdgeCalculus& ec, const WedgeFamily& wf,
    const std::function<Rational(int, int, int)>& val) {
    Fin2Form out = zero_two_form(wf);
    for (std::size_t pk = 0; pk < wf.p.size(); ++pk) {
        if (wf.p[pk].rows() == 0) continue;
        auto [x, z] = ec.pair_keys[pk];
        std::vector<Rational> v(ec.fibers[pk].size());
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = val(x, ec.fibers[pk][j], z);
        for (std::size_t r = 0; r < wf.p[pk].rows(); ++r) {
            Rational s = 0;
            for (std::size_t j = 0; j < v.size(); ++j) s += wf.p[pk].at(r, j) * v[j];
            out.comp[pk][r] = s;
        }
    }
    return out;
}

}  // namespace

Fin2Form d_one_form_fin(const EdgeCalculus& ec, const WedgeFamily& wf, const Fin1Form& alpha) {
    // -> Rational forces evaluation before the edge_value temporaries die;
    // a deduced return type would hand back a lazy gmp expression instead
    return project_fibers(ec, wf, [&](int x, int y, int z) -> Rational {
        return edge_value(ec, alpha, x, y) + edge_value(ec, alpha, y, z) -
               edge_value(ec, alpha, x, z);
    });
}

Fin2Form wedge_fin(const EdgeCalculus& ec, const WedgeFamily& wf, const Fin1Form& alpha,
                   const Fin1Form& beta) {
    return project_fibers(ec, wf, [&](int x, int y, int z) -> Rational {
        return edge_value(ec, alpha, x, y) * edge_value(ec, beta, y, z);
    });
}

Fin3Form path_product(const EdgeCalculus& ec, const Fin1Form& alpha, const Fin1Form& beta) {
    Fin3Form out;
    out.tri.resize(ec.triples.size());
    for (std::size_t t = 0; t < ec.triples.size(); ++t) {
        auto [x, y, z] = ec.triples[t];
        out.tri[t] = edge_value(ec, alpha, x, y) * edge_value(ec, beta, y, z);
    }
    return out;
}

std::vector<std::vector<Rational>> component_functions(const EdgeCalculus& ec, const VBein& vb,
                                                       const Fin1Form& alpha) {
    std::vector<std::vector<Rational>> comp(vb.nlabels, std::vector<Rational>(ec.npoints));
    for (std::size_t x = 0; x < ec.npoints; ++x) {
        const auto& nbrs = ec.out_nbrs[x];
        for (std::size_t a = 0; a < vb.nlabels; ++a) {
            Rational s = 0;
            for (std::size_t j = 0; j < nbrs.size(); ++j)
                s += vb.Einv[x].at(j, a) * edge_value(ec, alpha, static_cast<int>(x), nbrs[j]);
            comp[a][x] = s;
        }
    }
    return comp;
}

Fin3Form nabla_tensor(const EdgeCalculus& ec, const VBein& vb, const StructureConstants& tau,
                      const Fin1Family& A, const Fin1Form& alpha) {
    std::size_t n = vb.nlabels;
    auto ac = component_functions(ec, vb, alpha);
    Fin3Form out;
    out.tri.resize(ec.triples.size());
    for (std::size_t t = 0; t < ec.triples.size(); ++t) {
        auto [x, y, z] = ec.triples[t];
        Rational s = 0;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                const Rational& eb = vb.coeff(ec, b, y, z);
                if (eb == 0) continue;
                if (b == a)
                    s += (ac[a][static_cast<std::size_t>(y)] -
                          ac[a][static_cast<std::size_t>(x)]) *
                         eb;
                for (std::size_t i = 0; i < n; ++i) {
                    const Rational& tv = tau[i][b][a];
                    if (tv == 0) continue;
                    s -= ac[a][static_cast<std::size_t>(x)] * edge_value(ec, A[i], x, y) * eb *
                         tv;
                }
            }
        }
        out.tri[t] = s;
    }
    return out;
}

std::vector<Fin2Form> torsion_tensor(const EdgeCalculus& ec, const WedgeFamily& wf,
                                     const VBein& vb, const StructureConstants& tau,
                                     const Fin1Family& A) {
    std::size_t n = vb.nlabels;
    std::vector<Fin2Form> out;
    for (std::size_t a = 0; a < n; ++a) {
        Fin1Form ea;
        ea.edge.resize(ec.edges.size());
        for (std::size_t e = 0; e < ec.edges.size(); ++e)
            ea.edge[e] = vb.coeff(ec, a, ec.edges[e].first, ec.edges[e].second);
        Fin2Form T = d_one_form_fin(ec, wf, ea);
        T = T + project_fibers(ec, wf, [&](int x, int y, int z) {
                Rational s = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    const Rational& av = edge_value(ec, A[i], x, y);
                    if (av == 0) continue;
                    for (std::size_t b = 0; b < n; ++b) {
                        const Rational& tv = tau[i][b][a];
                        if (tv == 0) continue;
                        s += av * vb.coeff(ec, b, y, z) * tv;
                    }
                }
                return s;
            });
        out.push_back(std::move(T));
    }
    return out;
}

std::vector<Fin2Form> cotorsion_tensor(const EdgeCalculus& ec, const WedgeFamily& wf,
                                       const VBein& vb, const StructureConstants& tau,
                                       const Fin1Family& A, const Fin1Family& Estar) {
    std::size_t n = vb.nlabels;
    std::vector<Fin2Form> out;
    for (std::size_t a = 0; a < n; ++a) {
        Fin2Form T = d_one_form_fin(ec, wf, Estar[a]);
        T = T + project_fibers(ec, wf, [&](int x, int y, int z) {
                Rational s = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    const Rational& av = edge_value(ec, A[i], y, z);
                    if (av == 0) continue;
                    for (std::size_t b = 0; b < n; ++b) {
                        const Rational& tv = tau[i][a][b];
                        if (tv == 0) continue;
                        s += edge_value(ec, Estar[b], x, y) * av * tv;
                    }
                }
                return s;
            });
        out.push_back(std::move(T));
    }
    return out;
}

FinCurvature curvature_tensor(const EdgeCalculus& ec, const WedgeFamily& wf,
                              const IndexProduct& prod, const Fin1Family& A) {
    std::size_t n = prod.nlabels;
    FinCurvature cur;
    for (std::size_t i = 0; i < n; ++i) {
        Fin2Form F = d_one_form_fin(ec, wf, A[i]);
        F = F + project_fibers(ec, wf, [&](int x, int y, int z) {
                Rational s = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    for (std::size_t k = 0; k < n; ++k)
                        if (prod.table[j][k].inside == static_cast<int>(i))
                            s += edge_value(ec, A[j], x, y) * edge_value(ec, A[k], y, z);
                    s -= edge_value(ec, A[j], x, y) * edge_value(ec, A[i], y, z);
                    s -= edge_value(ec, A[i], x, y) * edge_value(ec, A[j], y, z);
                }
                return s;
            });
        cur.F.push_back(std::move(F));
    }
    for (std::size_t q = 0; q < prod.outside_names.size(); ++q) {
        Fin2Form R = project_fibers(ec, wf, [&](int x, int y, int z) {
            Rational s = 0;
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (prod.table[j][k].outside == static_cast<int>(q))
                        s += edge_value(ec, A[j], x, y) * edge_value(ec, A[k], y, z);
            return s;
        });
        cur.residuals.emplace_back(prod.outside_names[q], std::move(R));
    }
    cur.regular = std::all_of(cur.residuals.begin(), cur.residuals.end(),
                              [](const auto& r) { return r.second.is_zero(); });
    return cur;
}

std::vector<Fin3Form> lifted_curvature(const EdgeCalculus& ec, const WedgeFamily& wf,
                                       const IndexProduct& prod, const Fin1Family& A) {
    if (!wf.has_lifts())
        throw MissingLift("lifted curvature needs a lift of every 2-form projection");
    std::size_t n = prod.nlabels;
    std::vector<Fin3Form> out(n);
    for (auto& f : out) f.tri.assign(ec.triples.size(), Rational(0));
    for (std::size_t pk = 0; pk < wf.p.size(); ++pk) {
        if (wf.p[pk].rows() == 0) continue;
        auto [x, z] = ec.pair_keys[pk];
        Matrix Pi = wf.pi(pk);
        const auto& fiber = ec.fibers[pk];
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Rational> v(fiber.size());
            for (std::size_t j = 0; j < fiber.size(); ++j) {
                int y = fiber[j];
                Rational s = edge_value(ec, A[i], x, y) + edge_value(ec, A[i], y, z) -
                             edge_value(ec, A[i], x, z);
                for (std::size_t ja = 0; ja < n; ++ja) {
                    for (std::size_t k = 0; k < n; ++k)
                        if (prod.table[ja][k].inside == static_cast<int>(i))
                            s += edge_value(ec, A[ja], x, y) * edge_value(ec, A[k], y, z);
                    s -= edge_value(ec, A[ja], x, y) * edge_value(ec, A[i], y, z);
                    s -= edge_value(ec, A[i], x, y) * edge_value(ec, A[ja], y, z);
                }
                v[j] = s;
            }
            for (std::size_t r = 0; r < fiber.size(); ++r) {
                Rational s = 0;
                for (std::size_t j = 0; j < fiber.size(); ++j) s += Pi.at(r, j) * v[j];
                if (s != 0)
                    out[i].tri[static_cast<std::size_t>(
                        ec.triple_index(x, fiber[r], z))] = s;
            }
        }
    }
    return out;
}

std::vector<std::vector<Fin3Form>> riemann_tensor(const EdgeCalculus& ec,
                                                  const WedgeFamily& wf,
                                                  const StructureConstants& tau,
                                                  const IndexProduct& prod,
                                                  const Fin1Family& A) {
    std::size_t n = prod.nlabels;
    auto liftF = lifted_curvature(ec, wf, prod, A);
    std::vector<std::vector<Fin3Form>> R(n, std::vector<Fin3Form>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Fin3Form acc;
            acc.tri.assign(ec.triples.size(), Rational(0));
            for (std::size_t i = 0; i < n; ++i) {
                const Rational& tv = tau[i][a][b];
                if (tv == 0) continue;
                for (std::size_t t = 0; t < ec.triples.size(); ++t)
                    acc.tri[t] += liftF[i].tri[t] * tv;
            }
            R[a][b] = std::move(acc);
        }
    return R;
}

Fin3Form ricci_tensor(const EdgeCalculus& ec, const WedgeFamily& wf, const VBein& vb,
                      const StructureConstants& tau, const IndexProduct& prod,
                      const Fin1Family& A) {
    std::size_t n = prod.nlabels;
    auto liftF = lifted_curvature(ec, wf, prod, A);
    Fin3Form out;
    out.tri.assign(ec.triples.size(), Rational(0));
    for (std::size_t x = 0; x < ec.npoints; ++x) {
        const auto& nbrs = ec.out_nbrs[x];
        // K[i](a, b) recovers i(F_i)_x^{ab} through the co-frame inverses
        std::vector<Matrix> K(n, Matrix(n, n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t jy = 0; jy < nbrs.size(); ++jy) {
                int y = nbrs[jy];
                const auto& nbrs2 = ec.out_nbrs[static_cast<std::size_t>(y)];
                for (std::size_t jz = 0; jz < nbrs2.size(); ++jz) {
                    int t = ec.triple_index(static_cast<int>(x), y, nbrs2[jz]);
                    const Rational& fv = liftF[i].tri[static_cast<std::size_t>(t)];
                    if (fv == 0) continue;
                    for (std::size_t a = 0; a < n; ++a) {
                        const Rational& ia = vb.Einv[x].at(jy, a);
                        if (ia == 0) continue;
                        for (std::size_t b = 0; b < n; ++b)
                            K[i].at(a, b) +=
                                ia * vb.Einv[static_cast<std::size_t>(y)].at(jz, b) * fv;
                    }
                }
            }
        for (std::size_t jy = 0; jy < nbrs.size(); ++jy) {
            int y = nbrs[jy];
            const auto& nbrs2 = ec.out_nbrs[static_cast<std::size_t>(y)];
            for (std::size_t jz = 0; jz < nbrs2.size(); ++jz) {
                int z = nbrs2[jz];
                Rational s = 0;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t a = 0; a < n; ++a)
                        for (std::size_t b = 0; b < n; ++b) {
                            const Rational& kv = K[i].at(a, b);
                            if (kv == 0) continue;
                            for (std::size_t c = 0; c < n; ++c) {
                                const Rational& tv = tau[i][c][a];
                                if (tv == 0) continue;
                                s += kv * vb.coeff(ec, b, static_cast<int>(x), y) *
                                     vb.coeff(ec, c, y, z) * tv;
                            }
                        }
                out.tri[static_cast<std::size_t>(
                    ec.triple_index(static_cast<int>(x), y, z))] = s;
            }
        }
    }
    return out;
}

Fin3Form metric_tensor_fin(const EdgeCalculus& ec, const VBein& vb, const Fin1Family& Estar) {
    Fin3Form out;
    out.tri.resize(ec.triples.size());
    for (std::size_t t = 0; t < ec.triples.size(); ++t) {
        auto [x, y, z] = ec.triples[t];
        Rational s = 0;
        for (std::size_t a = 0; a < vb.nlabels; ++a)
            s += edge_value(ec, Estar[a], x, y) * vb.coeff(ec, a, y, z);
        out.tri[t] = s;
    }
    return out;
}

std::vector<Rational> partial_fin(const EdgeCalculus& ec, const VBein& vb, std::size_t a,
                                  const std::vector<Rational>& f) {
    std::vector<Rational> out(ec.npoints);
    for (std::size_t x = 0; x < ec.npoints; ++x) {
        const auto& nbrs = ec.out_nbrs[x];
        Rational s = 0;
        for (std::size_t j = 0; j < nbrs.size(); ++j)
            s += vb.Einv[x].at(j, a) *
                 (f[static_cast<std::size_t>(nbrs[j])] - f[x]);
        out[x] = s;
    }
    return out;
}

Matrix dirac_tensor(const EdgeCalculus& ec, const VBein& vb, const Fin1Family& A,
                    const std::vector<Matrix>& tauW, const std::vector<Matrix>& gammas) {
    std::size_t n = vb.nlabels;
    std::size_t dw = gammas.empty() ? 0 : gammas[0].rows();
    Matrix D(ec.npoints * dw, ec.npoints * dw);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t x = 0; x < ec.npoints; ++x) {
            const auto& nbrs = ec.out_nbrs[x];
            for (std::size_t j = 0; j < nbrs.size(); ++j) {
                const Rational& c = vb.Einv[x].at(j, a);
                if (c == 0) continue;
                std::size_t y = static_cast<std::size_t>(nbrs[j]);
                for (std::size_t s = 0; s < dw; ++s)
                    for (std::size_t t = 0; t < dw; ++t) {
                        const Rational& gv = gammas[a].at(s, t);
                        if (gv == 0) continue;
                        D.at(x * dw + s, y * dw + t) += c * gv;
                        D.at(x * dw + s, x * dw + t) -= c * gv;
                    }
            }
        }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::vector<Rational>> ac = component_functions(ec, vb, A[i]);
        for (std::size_t a = 0; a < n; ++a) {
            Matrix M = gammas[a] * tauW[i];
            for (std::size_t x = 0; x < ec.npoints; ++x) {
                const Rational& c = ac[a][x];
                if (c == 0) continue;
                for (std::size_t s = 0; s < dw; ++s)
                    for (std::size_t t = 0; t < dw; ++t)
                        D.at(x * dw + s, x * dw + t) -= c * M.at(s, t);
            }
        }
    }
    return D;
}

std::vector<Rational> cartan_rho(const EdgeCalculus& ec, const VBein& vb, std::size_t a,
                                 std::size_t b, const std::vector<Rational>& f) {
    std::vector<Rational> out(ec.npoints);
    for (std::size_t x = 0; x < ec.npoints; ++x) {
        const auto& nbrs = ec.out_nbrs[x];
        Rational s = 0;
        for (std::size_t j = 0; j < nbrs.size(); ++j)
            s += vb.Einv[x].at(j, b) * f[static_cast<std::size_t>(nbrs[j])] *
                 vb.E[x].at(a, j);
        out[x] = s;
    }
    return out;
}

std::vector<Rational> cartan_theta(const EdgeCalculus& ec, const VBein& vb, std::size_t a) {
    std::vector<Rational> out(ec.npoints);
    for (std::size_t x = 0; x < ec.npoints; ++x) {
        const auto& nbrs = ec.out_nbrs[x];
        Rational s = 0;
        for (std::size_t j = 0; j < nbrs.size(); ++j) s += vb.Einv[x].at(j, a);
        out[x] = s;
    }
    return out;
}

GroupFinsetModel finset_from_group(const TwoFormSpace& space, const Lift* lift) {
    const GroupTable& G = *space.group;
    std::size_t n = space.csize();
    std::size_t N = space.order();
    GroupFinsetModel m;

    std::vector<std::pair<int, int>> edges;
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t ia = 0; ia < n; ++ia)
            edges.emplace_back(static_cast<int>(x),
                               G.mul(static_cast<int>(x), space.C.element(ia)));
    m.ec = EdgeCalculus::make(N, std::move(edges));

    for (std::size_t ia = 0; ia < n; ++ia) {
        Fin1Form ea;
        ea.edge.resize(m.ec.edges.size());
        for (std::size_t e = 0; e < m.ec.edges.size(); ++e) {
            auto [x, y] = m.ec.edges[e];
            ea.edge[e] = (G.mul(x, space.C.element(ia)) == y) ? 1 : 0;
        }
        m.vbein_forms.push_back(std::move(ea));
    }
    m.vb = VBein::make(m.ec, m.vbein_forms);

    m.tau.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t ip = 0; ip < n; ++ip)
            for (std::size_t iq = 0; iq < n; ++iq) {
                int conj = G.conj(G.inv(space.C.element(i)), space.C.element(iq));
                Rational v = 0;
                if (space.C.element(ip) == conj) v += 1;
                if (ip == iq) v -= 1;
                m.tau[i][ip][iq] = v;
            }

    m.prod.nlabels = n;
    m.prod.table.assign(n, std::vector<IndexProduct::Entry>(n));
    std::map<int, int> outside_ids;
    for (std::size_t ja = 0; ja < n; ++ja)
        for (std::size_t jb = 0; jb < n; ++jb) {
            int q = G.mul(space.C.element(ja), space.C.element(jb));
            IndexProduct::Entry& e = m.prod.table[ja][jb];
            if (q == G.id())
                e.identity = true;
            else if (int pos = space.C.index_of(q); pos >= 0)
                e.inside = pos;
            else
                e.outside = outside_ids.emplace(q, static_cast<int>(outside_ids.size()))
                                .first->second;
        }
    m.prod.outside_names.resize(outside_ids.size());
    for (auto [q, id] : outside_ids) m.prod.outside_names[static_cast<std::size_t>(id)] = G.label(q);

    std::vector<Matrix> p(m.ec.pair_keys.size());
    std::vector<std::optional<Matrix>> lifts(m.ec.pair_keys.size());
    m.block_rows.clear();
    std::vector<std::vector<std::size_t>> rows_per_pk(m.ec.pair_keys.size());
    for (std::size_t pk = 0; pk < m.ec.pair_keys.size(); ++pk) {
        auto [x, z] = m.ec.pair_keys[pk];
        int g = G.mul(G.inv(x), z);
        std::vector<std::size_t> rows;
        for (std::size_t k = 0; k < space.dim2; ++k) {
            auto [a, b] = space.basis_pairs[k];
            if (G.mul(a, b) == g) rows.push_back(k);
        }
        const auto& fiber = m.ec.fibers[pk];
        Matrix P(rows.size(), fiber.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t j = 0; j < fiber.size(); ++j) {
                int a = G.mul(G.inv(x), fiber[j]);
                int b = G.mul(G.inv(fiber[j]), z);
                P.at(r, j) = space.wedge_matrix.at(
                    rows[r], space.pair_index(static_cast<std::size_t>(space.C.index_of(a)),
                                              static_cast<std::size_t>(space.C.index_of(b))));
            }
        p[pk] = std::move(P);
        if (lift) {
            Matrix L(fiber.size(), rows.size());
            for (std::size_t j = 0; j < fiber.size(); ++j) {
                int a = G.mul(G.inv(x), fiber[j]);
                int b = G.mul(G.inv(fiber[j]), z);
                for (std::size_t r = 0; r < rows.size(); ++r)
                    L.at(j, r) = lift->mat.at(
                        space.pair_index(static_cast<std::size_t>(space.C.index_of(a)),
                                         static_cast<std::size_t>(space.C.index_of(b))),
                        rows[r]);
            }
            lifts[pk] = std::move(L);
        }
        rows_per_pk[pk] = std::move(rows);
    }
    m.wf = WedgeFamily::make(m.ec, std::move(p),
                             lift ? std::move(lifts) : std::vector<std::optional<Matrix>>{});
    // flattened per pair key; offsets recoverable from the projection heights
    for (auto& rows : rows_per_pk)
        for (auto r : rows) m.block_rows.push_back(r);
    return m;
}

Fin1Form to_fin_one_form(const GroupFinsetModel& m, const TwoFormSpace& space,
                         const OneForm& alpha) {
    const GroupTable& G = *space.group;
    Fin1Form out;
    out.edge.resize(m.ec.edges.size());
    for (std::size_t e = 0; e < m.ec.edges.size(); ++e) {
        auto [x, y] = m.ec.edges[e];
        int a = G.mul(G.inv(x), y);
        out.edge[e] =
            alpha.comp[static_cast<std::size_t>(space.C.index_of(a))].values[static_cast<std::size_t>(x)];
    }
    return out;
}

Fin2Form to_fin_two_form(const GroupFinsetModel& m, const TwoFormSpace&,
                         const TwoForm& omega) {
    Fin2Form out;
    out.comp.resize(m.ec.pair_keys.size());
    std::size_t offset = 0;
    for (std::size_t pk = 0; pk < m.ec.pair_keys.size(); ++pk) {
        std::size_t x = static_cast<std::size_t>(m.ec.pair_keys[pk].first);
        std::size_t nrows = m.wf.p[pk].rows();
        out.comp[pk].resize(nrows);
        for (std::size_t r = 0; r < nrows; ++r)
            out.comp[pk][r] = omega.comp[m.block_rows[offset + r]].values[x];
        offset += nrows;
    }
    return out;
}

Fin3Form to_fin_path_tensor(const GroupFinsetModel& m, const TwoFormSpace& space,
                            const OneOneTensor& T) {
    const GroupTable& G = *space.group;
    Fin3Form out;
    out.tri.resize(m.ec.triples.size());
    for (std::size_t t = 0; t < m.ec.triples.size(); ++t) {
        auto [x, y, z] = m.ec.triples[t];
        int p = G.mul(G.inv(x), y);
        int q = G.mul(G.inv(y), z);
        out.tri[t] = T.comp[static_cast<std::size_t>(space.C.index_of(p))]
                         [static_cast<std::size_t>(space.C.index_of(q))]
                             .values[static_cast<std::size_t>(x)];
    }
    return out;
}

Fin1Family to_fin_family(const GroupFinsetModel& m, const TwoFormSpace& space,
                         const std::vector<OneForm>& forms) {
    Fin1Family out;
    for (const auto& f : forms) out.push_back(to_fin_one_form(m, space, f));
    return out;
}

}  // namespace ncgeo
