#include "ncgeo/json_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace ncgeo {

using json = nlohmann::ordered_json;

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw BadInput("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw BadInput("cannot write " + path);
    out << text;
}

namespace {

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw BadInput("not valid JSON");
    return j;
}

// rationals in input files: integer, [num, den], or "p/q"
Rational entry_rat(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        try {
            return rat_parse(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw BadInput(where + ": " + e.what());
        }
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number_integer() &&
        j[1].is_number_integer()) {
        long den = static_cast<long>(j[1].get<long long>());
        if (den == 0) throw BadInput(where + ": zero denominator");
        Rational r(static_cast<long>(j[0].get<long long>()), den);
        r.canonicalize();
        return r;
    }
    throw BadInput(where + ": expected integer, [num, den], or \"p/q\"");
}

Matrix entry_matrix(const json& j, std::size_t rows, std::size_t cols,
                    const std::string& where) {
    if (!j.is_array() || j.size() != rows)
        throw BadInput(where + ": expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw BadInput(where + ": row " + std::to_string(i) + " needs " +
                           std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k)
            m.at(i, k) = entry_rat(j[i][k], where);
    }
    return m;
}

// rationals in artifacts: always the [num, den] pair
json rat_out(const Rational& r) {
    json p = json::array();
    Integer num = r.get_num();
    Integer den = r.get_den();
    if (num.fits_slong_p())
        p.push_back(num.get_si());
    else
        p.push_back(num.get_str());
    if (den.fits_slong_p())
        p.push_back(den.get_si());
    else
        p.push_back(den.get_str());
    return p;
}

json function_out(const GroupFunction& f) {
    json a = json::array();
    for (const auto& v : f.values) a.push_back(rat_out(v));
    return a;
}

json int_out(const Integer& z) {
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

json row_out(const std::vector<Rational>& row) {
    json a = json::array();
    for (const auto& v : row) a.push_back(rat_out(v));
    return a;
}

json matrix_out(const Matrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(rat_out(m.at(i, k)));
        a.push_back(row);
    }
    return a;
}

json two_form_out(const TwoForm& w) {
    json a = json::array();
    for (const auto& c : w.comp) a.push_back(function_out(c));
    return a;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// "A[u]^v" -> (position of u in C, position of v in C)
std::pair<std::size_t, std::size_t> parse_coeff_label(const TwoFormSpace& space,
                                                      const std::string& s) {
    const GroupTable& G = *space.group;
    auto bad = [&](const std::string& why) {
        return BadInput("coefficient label '" + s + "': " + why);
    };
    if (s.rfind("A[", 0) != 0) throw bad("expected the form A[a]^b");
    auto close = s.find("]^");
    if (close == std::string::npos) throw bad("expected the form A[a]^b");
    std::string la = s.substr(2, close - 2);
    std::string lb = s.substr(close + 2);
    int a = G.element_by_label(la);
    int b = G.element_by_label(lb);
    if (a < 0 || !space.C.contains(a)) throw bad("'" + la + "' is not a member of C");
    if (b < 0 || !space.C.contains(b)) throw bad("'" + lb + "' is not a member of C");
    return {static_cast<std::size_t>(space.C.index_of(a)),
            static_cast<std::size_t>(space.C.index_of(b))};
}

}  // namespace

GroupTable load_group_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object()) throw BadInput("group file: expected an object");
    GroupTable G = [&] {
        if (j.contains("multiplication_table")) {
            const json& t = j["multiplication_table"];
            if (!t.is_array() || t.empty())
                throw BadInput("multiplication_table: expected a nonempty array");
            std::vector<std::vector<int>> mul;
            for (const auto& row : t) {
                if (!row.is_array() || row.size() != t.size())
                    throw BadInput("multiplication_table: not square");
                mul.push_back(row.get<std::vector<int>>());
            }
            return GroupTable::from_table(mul);
        }
        if (!j.contains("permutation_generators") || !j.contains("degree"))
            throw BadInput(
                "group file: need multiplication_table, or "
                "permutation_generators with degree");
        int degree = j["degree"].get<int>();
        std::vector<std::vector<int>> gens;
        for (const auto& g : j["permutation_generators"]) {
            if (!g.is_array()) throw BadInput("permutation_generators: expected arrays");
            gens.push_back(g.get<std::vector<int>>());
        }
        std::vector<std::string> glabels;
        if (j.contains("generator_labels"))
            glabels = j["generator_labels"].get<std::vector<std::string>>();
        return GroupTable::from_permutations(degree, gens, glabels);
    }();
    if (j.contains("labels")) {
        auto labels = j["labels"].get<std::vector<std::string>>();
        if (labels.size() != G.order())
            throw BadInput("labels: expected " + std::to_string(G.order()) + " entries");
        G.set_labels(std::move(labels));
    }
    return G;
}

GroupTable load_group_file(const std::string& path) {
    return load_group_json(read_text_file(path));
}

Representation load_rep_json(const GroupTable& G, const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("dim") || !j.contains("generators"))
        throw BadInput("representation file: need dim and generators");
    std::size_t dim = j["dim"].get<std::size_t>();
    if (dim == 0) throw BadInput("representation file: dim must be positive");
    std::map<int, Matrix> given;
    for (const auto& [label, mat] : j["generators"].items()) {
        int g = G.element_by_label(label);
        if (g < 0) throw BadInput("generators: '" + label + "' is not an element label");
        given[g] = entry_matrix(mat, dim, dim, "generator '" + label + "'");
    }
    if (given.empty()) throw BadInput("generators: empty");
    return check_representation(G, dim, given);
}

Representation load_rep_file(const GroupTable& G, const std::string& path) {
    return load_rep_json(G, read_text_file(path));
}

Connection load_connection_json(const TwoFormSpace& space, const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("basis") || !j.contains("coefficients"))
        throw BadInput("connection file: need basis and coefficients");
    const json& basis = j["basis"];
    const json& coeffs = j["coefficients"];
    if (!basis.is_array() || !coeffs.is_array() || basis.size() != coeffs.size())
        throw BadInput("connection file: basis and coefficients must align");
    std::size_t n = space.csize();
    Connection conn;
    conn.comps.assign(n, std::vector<GroupFunction>(n, GroupFunction(space.order())));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!basis[i].is_string())
            throw BadInput("connection file: basis entries must be strings");
        auto [iw, ic] = parse_coeff_label(space, basis[i].get<std::string>());
        const json& row = coeffs[i];
        if (!row.is_array() || row.size() != space.order())
            throw BadInput("coefficients for " + basis[i].get<std::string>() +
                           ": expected one entry per group element");
        for (std::size_t x = 0; x < space.order(); ++x)
            conn.comps[iw][ic].values[x] =
                entry_rat(row[x], basis[i].get<std::string>());
    }
    return conn;
}

Connection load_connection_file(const TwoFormSpace& space, const std::string& path) {
    return load_connection_json(space, read_text_file(path));
}

Matrix load_metric_json(std::size_t n, const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("cotensor"))
        throw BadInput("metric file: need cotensor");
    return entry_matrix(j["cotensor"], n, n, "cotensor");
}

Matrix load_metric_file(std::size_t n, const std::string& path) {
    return load_metric_json(n, read_text_file(path));
}

EdgeCalculus load_edges_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("points") || !j.contains("edges"))
        throw BadInput("edges file: need points and edges");
    std::size_t npoints = j["points"].get<std::size_t>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw BadInput("edges file: each edge is a pair [x, y]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return EdgeCalculus::make(npoints, std::move(edges));
    } catch (const std::exception& e) {
        throw BadInput(std::string("edges file: ") + e.what());
    }
}

EdgeCalculus load_edges_file(const std::string& path) {
    return load_edges_json(read_text_file(path));
}

std::vector<Matrix> load_gammas_json(std::size_t count, const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("dim") || !j.contains("matrices"))
        throw BadInput("gamma file: need dim and matrices");
    std::size_t dim = j["dim"].get<std::size_t>();
    if (dim == 0) throw BadInput("gamma file: dim must be positive");
    const json& mats = j["matrices"];
    if (!mats.is_array() || mats.size() != count)
        throw BadInput("gamma file: expected " + std::to_string(count) + " matrices");
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(entry_matrix(mats[i], dim, dim,
                                   "matrix " + std::to_string(i)));
    return out;
}

std::vector<Matrix> load_gammas_file(std::size_t count, const std::string& path) {
    return load_gammas_json(count, read_text_file(path));
}

std::string group_json(const GroupTable& G) {
    json j;
    j["kind"] = "group";
    j["order"] = G.order();
    j["labels"] = G.labels();
    json mul = json::array();
    for (std::size_t g = 0; g < G.order(); ++g) {
        json row = json::array();
        for (std::size_t h = 0; h < G.order(); ++h)
            row.push_back(G.mul(static_cast<int>(g), static_cast<int>(h)));
        mul.push_back(row);
    }
    j["multiplication_table"] = mul;
    json inv = json::array();
    for (std::size_t g = 0; g < G.order(); ++g) inv.push_back(G.inv(static_cast<int>(g)));
    j["inverses"] = inv;
    json classes = json::array();
    for (const auto& cls : G.conjugacy_classes()) {
        json c = json::array();
        for (int g : cls) c.push_back(G.label(g));
        classes.push_back(c);
    }
    j["conjugacy_classes"] = classes;
    return dump(j);
}

std::string calculus_json(const TwoFormSpace& space) {
    const GroupTable& G = *space.group;
    json j;
    j["kind"] = "calculus";
    json cls = json::array();
    for (std::size_t i = 0; i < space.csize(); ++i)
        cls.push_back(G.label(space.C.element(i)));
    j["class"] = cls;
    j["dim_one"] = space.csize();
    j["dim_two"] = space.dim2;
    json pairs = json::array();
    for (const auto& [a, b] : space.basis_pairs)
        pairs.push_back(json::array({G.label(a), G.label(b)}));
    j["basis_pairs"] = pairs;
    json inv = json::array();
    for (const auto& pb : space.pg) {
        json e;
        e["product"] = G.label(pb.g);
        json dom = json::array();
        for (int a : pb.domain) dom.push_back(G.label(a));
        e["domain"] = dom;
        json vecs = json::array();
        for (const auto& v : pb.vectors) vecs.push_back(row_out(v));
        e["basis"] = vecs;
        inv.push_back(e);
    }
    j["invariant_subspaces"] = inv;
    json rel = json::array();
    for (std::size_t r = 0; r < space.relation_rows.rows(); ++r)
        rel.push_back(row_out(space.relation_rows.row(r)));
    j["relations"] = rel;
    j["wedge_matrix"] = matrix_out(space.wedge_matrix);
    json dE = json::array();
    for (std::size_t ia = 0; ia < space.csize(); ++ia) {
        json e;
        e["of"] = G.label(space.C.element(ia));
        e["coords"] = two_form_out(space.dE[ia]);
        dE.push_back(e);
    }
    j["maurer_cartan"] = dE;
    return dump(j);
}

std::string killing_json(const AdSet& C, const KillingForm& kf) {
    const GroupTable& G = *C.group;
    json j;
    j["kind"] = "killing";
    json cls = json::array();
    for (std::size_t i = 0; i < C.size(); ++i) cls.push_back(G.label(C.element(i)));
    j["class"] = cls;
    j["eta"] = matrix_out(kf.eta);
    j["semisimple"] = kf.semisimple;
    if (kf.eta_inv)
        j["eta_inverse"] = matrix_out(*kf.eta_inv);
    else
        j["eta_inverse"] = nullptr;
    return dump(j);
}

std::string moduli_json(const TwoFormSpace& space, const AffineModuli& m) {
    const GroupTable& G = *space.group;
    json j;
    j["kind"] = "moduli";
    j["description"] = m.description;
    j["consistent"] = m.consistent;
    j["ambient_dim"] = m.ambient_dim;
    j["dim"] = m.dim();
    json unknowns = json::array();
    for (std::size_t iw = 0; iw < space.csize(); ++iw)
        for (std::size_t ic = 0; ic < space.csize(); ++ic)
            for (std::size_t x = 0; x < space.order(); ++x)
                unknowns.push_back("A[" + G.label(space.C.element(iw)) + "]^" +
                                   G.label(space.C.element(ic)) + "(" +
                                   G.label(static_cast<int>(x)) + ")");
    j["unknowns"] = unknowns;
    if (m.consistent) {
        j["base"] = row_out(m.base);
        json dirs = json::array();
        for (std::size_t c = 0; c < m.basis.cols(); ++c) {
            json col = json::array();
            for (std::size_t r = 0; r < m.basis.rows(); ++r)
                col.push_back(rat_out(m.basis.at(r, c)));
            dirs.push_back(col);
        }
        j["directions"] = dirs;
    } else {
        j["base"] = nullptr;
        j["directions"] = json::array();
    }
    return dump(j);
}

std::string connection_json(const TwoFormSpace& space, const Connection& conn) {
    const GroupTable& G = *space.group;
    json j;
    j["kind"] = "connection";
    json grp = json::array();
    for (std::size_t x = 0; x < space.order(); ++x)
        grp.push_back(G.label(static_cast<int>(x)));
    j["group"] = grp;
    json basis = json::array();
    json coeffs = json::array();
    for (std::size_t iw = 0; iw < space.csize(); ++iw)
        for (std::size_t ic = 0; ic < space.csize(); ++ic) {
            basis.push_back("A[" + G.label(space.C.element(iw)) + "]^" +
                            G.label(space.C.element(ic)));
            coeffs.push_back(function_out(conn.comps[iw][ic]));
        }
    j["basis"] = basis;
    j["coefficients"] = coeffs;
    return dump(j);
}

std::string metric_json(const TwoFormSpace& space, const Coframing& cf) {
    const GroupTable& G = *space.group;
    json j;
    j["kind"] = "metric";
    json cls = json::array();
    for (std::size_t i = 0; i < space.csize(); ++i)
        cls.push_back(G.label(space.C.element(i)));
    j["class"] = cls;
    json gm = json::array();
    json gi = json::array();
    for (std::size_t ia = 0; ia < space.csize(); ++ia) {
        json r1 = json::array();
        json r2 = json::array();
        for (std::size_t ib = 0; ib < space.csize(); ++ib) {
            r1.push_back(function_out(cf.gmat[ia][ib]));
            r2.push_back(function_out(cf.gmat_inv[ia][ib]));
        }
        gm.push_back(r1);
        gi.push_back(r2);
    }
    j["coframing"] = gm;
    j["cotensor"] = gi;
    return dump(j);
}

std::string geometry_json(const TwoFormSpace& space, const Curvature& curv,
                          const std::string& lift_flavor, const OneOneTensor* ric,
                          const GroupFunction* scalar) {
    const GroupTable& G = *space.group;
    json j;
    j["kind"] = "geometry";
    json F = json::array();
    for (std::size_t ia = 0; ia < space.csize(); ++ia) {
        json e;
        e["of"] = G.label(space.C.element(ia));
        e["coords"] = two_form_out(curv.F[ia]);
        F.push_back(e);
    }
    j["curvature"] = F;
    j["regular"] = curv.regular;
    json res = json::array();
    for (const auto& [q, w] : curv.residuals) {
        json e;
        e["product"] = G.label(q);
        e["coords"] = two_form_out(w);
        res.push_back(e);
    }
    j["residuals"] = res;
    if (ric) {
        j["lift"] = lift_flavor;
        json r = json::array();
        for (std::size_t ia = 0; ia < space.csize(); ++ia) {
            json row = json::array();
            for (std::size_t ib = 0; ib < space.csize(); ++ib)
                row.push_back(function_out(ric->comp[ia][ib]));
            r.push_back(row);
        }
        j["ricci"] = r;
    }
    if (scalar) j["scalar_curvature"] = function_out(*scalar);
    return dump(j);
}

std::string dirac_json(const Matrix& D, const Rational& trace_sq) {
    json j;
    j["kind"] = "dirac";
    j["size"] = D.rows();
    j["matrix"] = matrix_out(D);
    j["trace_d_squared"] = rat_out(trace_sq);
    return dump(j);
}

std::string spectrum_json(const Spectrum& s) {
    json j;
    j["kind"] = "spectrum";
    json cp = json::array();
    for (const auto& z : s.char_poly.integer_normalized()) cp.push_back(int_out(z));
    j["char_poly"] = cp;
    json roots = json::array();
    for (const auto& r : s.roots) {
        json e;
        e["value"] = r.value;
        e["multiplicity"] = r.multiplicity;
        e["residual"] = r.residual_str;
        roots.push_back(e);
    }
    j["roots"] = roots;
    return dump(j);
}

}  // namespace ncgeo
