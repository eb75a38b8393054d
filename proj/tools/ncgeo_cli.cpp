// ncgeo: exact Riemannian geometry on finite groups from the command line.

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ncgeo/json_io.hpp"

using namespace ncgeo;

namespace {

struct JobOptions {
    std::string group = "s3";
    std::string klass;                        // index or comma-separated labels
    std::string rep;                          // builtin name or file
    std::string connection = "levi-civita";   // levi-civita | maurer-cartan | zero | file
    std::string lift = "projection";
    std::string metric = "killing";           // killing | file
    std::string gammas;                       // file
    std::string out;                          // artifact directory
    unsigned precision = 30;
    std::size_t bound = 4;
};

struct Ctx {
    std::unique_ptr<GroupTable> G;
    AdSet C;
    TwoFormSpace space;
    std::string class_desc;
};

GroupTable resolve_group(const std::string& name) {
    if (name == "s3") return builtin_s3();
    if (name == "s4") return builtin_s4();
    if (name.rfind("z_", 0) == 0) return builtin_zn(std::stoi(name.substr(2)));
    if (name.rfind("dihedral_", 0) == 0)
        return builtin_dihedral(std::stoi(name.substr(9)));
    if (std::filesystem::exists(name)) return load_group_file(name);
    throw BadInput("unknown group '" + name +
                   "': expected s3, s4, z_<n>, dihedral_<n>, or a JSON file path");
}

std::string class_list(const GroupTable& G) {
    std::ostringstream ss;
    auto classes = G.conjugacy_classes();
    int idx = 0;
    for (const auto& cls : classes) {
        if (cls.size() == 1 && cls[0] == G.id()) continue;
        ss << "  [" << idx++ << "] {";
        for (std::size_t i = 0; i < cls.size(); ++i)
            ss << (i ? ", " : "") << G.label(cls[i]);
        ss << "}\n";
    }
    return ss.str();
}

AdSet resolve_class(const GroupTable& G, const std::string& sel, std::string& desc) {
    auto classes = G.conjugacy_classes();
    std::vector<std::vector<int>> avail;
    for (const auto& cls : classes)
        if (!(cls.size() == 1 && cls[0] == G.id())) avail.push_back(cls);
    if (avail.empty()) throw BadInput("the group has no nonidentity conjugacy class");

    if (sel.empty()) {
        desc = "class 0 (default)";
        return validate_ad_set(G, avail[0]);
    }
    bool numeric = !sel.empty() && std::all_of(sel.begin(), sel.end(), [](unsigned char c) {
        return std::isdigit(c);
    });
    if (numeric) {
        std::size_t k = std::stoul(sel);
        if (k >= avail.size())
            throw BadInput("class index " + sel + " out of range; available classes:\n" +
                           class_list(G));
        desc = "class " + sel;
        return validate_ad_set(G, avail[k]);
    }
    std::vector<int> members;
    std::stringstream ss(sel);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
        while (!tok.empty() && tok.back() == ' ') tok.pop_back();
        int g = G.element_by_label(tok);
        if (g < 0)
            throw BadInput("'" + tok + "' is not an element label; available classes:\n" +
                           class_list(G));
        members.push_back(g);
    }
    desc = "elements {" + sel + "}";
    return validate_ad_set(G, members);
}

Ctx make_ctx(const JobOptions& o) {
    Ctx c;
    c.G = std::make_unique<GroupTable>(resolve_group(o.group));
    c.C = resolve_class(*c.G, o.klass, c.class_desc);
    c.space = build_omega2(c.C);
    return c;
}

Representation resolve_rep(const GroupTable& G, const std::string& spec,
                           std::string& desc) {
    if (spec.empty()) {
        if (G.order() == 6 && G.element_by_label("uvu") >= 0) {
            desc = "builtin 2-dim (default)";
            return s3_two_dim_rep(G);
        }
        desc = "left regular (default)";
        return regular_rep(G);
    }
    if (spec == "s3-2d") {
        desc = "builtin 2-dim";
        return s3_two_dim_rep(G);
    }
    if (spec == "regular") {
        desc = "left regular";
        return regular_rep(G);
    }
    if (spec == "trivial") {
        desc = "trivial 1-dim";
        return trivial_rep(G);
    }
    desc = "file " + spec;
    return load_rep_file(G, spec);
}

Coframing resolve_metric(const TwoFormSpace& space, const JobOptions& o,
                         std::string& desc) {
    if (o.metric == "killing") {
        desc = "braided-Killing (default)";
        return killing_coframing(space);
    }
    desc = "cotensor file " + o.metric;
    Matrix g_upper = load_metric_file(space.csize(), o.metric);
    return coframing_from_cotensor(space, g_upper);
}

Connection maurer_cartan_connection(const TwoFormSpace& space) {
    Connection conn;
    std::size_t n = space.csize();
    conn.comps.assign(n, std::vector<GroupFunction>(n, GroupFunction(space.order())));
    for (std::size_t i = 0; i < n; ++i)
        conn.comps[i][i] = GroupFunction::constant(space.order(), 1);
    return conn;
}

Connection zero_connection(const TwoFormSpace& space) {
    Connection conn;
    std::size_t n = space.csize();
    conn.comps.assign(n, std::vector<GroupFunction>(n, GroupFunction(space.order())));
    return conn;
}

Connection levi_civita_connection(const TwoFormSpace& space, const Coframing& cf,
                                  std::size_t bound) {
    AffineModuli mt = solve_torsion_free(space);
    AffineModuli mc = solve_cotorsion_free(space, cf);
    AffineModuli mi = intersect_moduli(mt, mc);
    if (!mi.consistent)
        throw BadInput("no connection is both torsion-free and cotorsion-free here");
    RegularSearch rs = find_regular(space, mi, bound);
    if (rs.status == RegularSearch::Status::Points && rs.points.size() == 1)
        return connection_from_vector(space, rs.points[0]);
    if (rs.status == RegularSearch::Status::EveryPoint && mi.dim() == 0)
        return connection_from_vector(space, mi.base);
    std::ostringstream why;
    switch (rs.status) {
        case RegularSearch::Status::Points:
            why << rs.points.size() << " regular points";
            break;
        case RegularSearch::Status::EveryPoint:
            why << "every point of a " << mi.dim() << "-dim family is regular";
            break;
        case RegularSearch::Status::PositiveDimensional:
            why << "the regular set is positive-dimensional";
            break;
        case RegularSearch::Status::Empty:
            why << "no regular point exists";
            break;
        case RegularSearch::Status::Unresolved:
            why << "search unresolved: " << rs.note;
            break;
    }
    throw BadInput("levi-civita connection is not determined (" + why.str() +
                   "); pass an explicit --connection file");
}

Connection resolve_connection(const TwoFormSpace& space, const Coframing& cf,
                              const JobOptions& o, std::string& desc) {
    if (o.connection == "levi-civita") {
        desc = "levi-civita (unique torsion-free cotorsion-free regular point)";
        return levi_civita_connection(space, cf, o.bound);
    }
    if (o.connection == "maurer-cartan") {
        desc = "maurer-cartan (A_a = E_a)";
        return maurer_cartan_connection(space);
    }
    if (o.connection == "zero") {
        desc = "zero";
        return zero_connection(space);
    }
    desc = "file " + o.connection;
    return load_connection_file(space, o.connection);
}

Lift resolve_lift(const TwoFormSpace& space, const std::string& flavor) {
    if (flavor == "woronowicz") return lift_woronowicz(space);
    return lift_projection(space);
}

// formatting

std::string fmt_fun(const GroupTable& G, const GroupFunction& f) {
    if (f.is_constant()) return rat_str(f.values.empty() ? Rational(0) : f.values[0]);
    std::string s = "{";
    for (std::size_t x = 0; x < f.values.size(); ++x) {
        if (x) s += ", ";
        s += G.label(static_cast<int>(x)) + ": " + rat_str(f.values[x]);
    }
    return s + "}";
}

std::string fmt_one_form(const TwoFormSpace& space, const OneForm& a) {
    const GroupTable& G = *space.group;
    std::string s;
    for (std::size_t ia = 0; ia < space.csize(); ++ia) {
        if (a.comp[ia].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + fmt_fun(G, a.comp[ia]) + ") E[" + G.label(space.C.element(ia)) + "]";
    }
    return s.empty() ? "0" : s;
}

std::string pair_label(const TwoFormSpace& space, std::size_t k) {
    const GroupTable& G = *space.group;
    return "E[" + G.label(space.basis_pairs[k].first) + "]^E[" +
           G.label(space.basis_pairs[k].second) + "]";
}

std::string fmt_two_form(const TwoFormSpace& space, const TwoForm& w) {
    const GroupTable& G = *space.group;
    std::string s;
    for (std::size_t k = 0; k < space.dim2; ++k) {
        if (w.comp[k].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + fmt_fun(G, w.comp[k]) + ") " + pair_label(space, k);
    }
    return s.empty() ? "0" : s;
}

std::string fmt_matrix(const Matrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) s += ", ";
        s += "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) s += ", ";
            s += rat_str(m.at(i, j));
        }
        s += "]";
    }
    return s + "]";
}

struct Outdir {
    std::filesystem::path dir;
    bool active = false;

    explicit Outdir(const std::string& path) {
        if (path.empty()) return;
        dir = path;
        std::filesystem::create_directories(dir);
        active = true;
    }
    void put(const std::string& name, const std::string& text) const {
        if (!active) return;
        auto p = dir / name;
        write_text_file(p.string(), text);
        std::cout << "wrote " << p.string() << "\n";
    }
};

// subcommands

int cmd_info(const JobOptions& o) {
    Ctx c = make_ctx(o);
    const GroupTable& G = *c.G;
    std::cout << "group: " << o.group << " (order " << G.order() << ")\n";
    std::cout << "elements:";
    for (std::size_t g = 0; g < G.order(); ++g)
        std::cout << " " << G.label(static_cast<int>(g));
    std::cout << "\n";
    std::cout << "conjugacy classes (excluding identity):\n" << class_list(G);
    std::cout << "C = {";
    for (std::size_t i = 0; i < c.C.size(); ++i)
        std::cout << (i ? ", " : "") << G.label(c.C.element(i));
    std::cout << "}  (" << c.class_desc << ")\n";
    std::cout << "dim Omega^1 = " << c.space.csize() << "\n";
    std::cout << "dim Omega^2 = " << c.space.dim2 << "\n";
    if (c.space.dim2 > 0) {
        std::cout << "Omega^2 basis:";
        for (std::size_t k = 0; k < c.space.dim2; ++k)
            std::cout << (k ? ", " : " ") << pair_label(c.space, k);
        std::cout << "\n";
    }
    std::cout << "invariant subspaces P_g:\n";
    for (const auto& pb : c.space.pg) {
        std::cout << "  P[" << G.label(pb.g) << "]: dim " << pb.vectors.size()
                  << ", domain {";
        for (std::size_t i = 0; i < pb.domain.size(); ++i)
            std::cout << (i ? ", " : "") << G.label(pb.domain[i]);
        std::cout << "}\n";
    }
    KillingForm kf = killing_form(c.C);
    std::cout << "braided-Killing form eta = " << fmt_matrix(kf.eta) << "\n";
    std::cout << "semisimple: " << (kf.semisimple ? "yes" : "no") << "\n";

    Outdir od(o.out);
    od.put("group.json", group_json(G));
    od.put("calculus.json", calculus_json(c.space));
    od.put("killing.json", killing_json(c.C, kf));
    return 0;
}

void print_regular_search(const TwoFormSpace& space, const RegularSearch& rs) {
    switch (rs.status) {
        case RegularSearch::Status::Points: {
            std::cout << "regular points: " << rs.points.size() << "\n";
            for (const auto& pt : rs.points) {
                Connection conn = connection_from_vector(space, pt);
                for (std::size_t iw = 0; iw < space.csize(); ++iw)
                    std::cout << "  A[" << space.group->label(space.C.element(iw))
                              << "] = " << fmt_one_form(space, conn.form(space, iw))
                              << "\n";
            }
            break;
        }
        case RegularSearch::Status::EveryPoint:
            std::cout << "regular points: the whole family (" << rs.note << ")\n";
            break;
        case RegularSearch::Status::PositiveDimensional:
            std::cout << "regular set: positive-dimensional (" << rs.note << ")\n";
            break;
        case RegularSearch::Status::Empty:
            std::cout << "regular points: none\n";
            break;
        case RegularSearch::Status::Unresolved:
            std::cout << "regular point search unresolved: " << rs.note << "\n";
            break;
    }
}

int cmd_solve(const JobOptions& o) {
    Ctx c = make_ctx(o);
    std::string mdesc;
    Coframing cf = resolve_metric(c.space, o, mdesc);
    std::cout << "coframing: " << mdesc << "\n";
    AffineModuli mt = solve_torsion_free(c.space);
    AffineModuli mc = solve_cotorsion_free(c.space, cf);
    AffineModuli mi = intersect_moduli(mt, mc);
    std::cout << "torsion-free: " << (mt.consistent ? mt.dim() : 0)
              << (mt.consistent ? "" : " (inconsistent)") << "\n";
    std::cout << "cotorsion-free: " << (mc.consistent ? mc.dim() : 0)
              << (mc.consistent ? "" : " (inconsistent)") << "\n";
    std::cout << "both: " << (mi.consistent ? mi.dim() : 0)
              << (mi.consistent ? "" : " (empty)") << "\n";
    Outdir od(o.out);
    od.put("moduli_torsion_free.json", moduli_json(c.space, mt));
    od.put("moduli_cotorsion_free.json", moduli_json(c.space, mc));
    od.put("moduli_both.json", moduli_json(c.space, mi));
    if (mi.consistent) {
        try {
            RegularSearch rs = find_regular(c.space, mi, o.bound);
            print_regular_search(c.space, rs);
            if (rs.status == RegularSearch::Status::Points && rs.points.size() == 1)
                od.put("connection_levi_civita.json",
                       connection_json(c.space,
                                       connection_from_vector(c.space, rs.points[0])));
        } catch (const DimensionTooLarge& e) {
            std::cout << "regular point search skipped: " << e.what() << "\n";
        }
    }
    return 0;
}

int cmd_geometry(const JobOptions& o) {
    Ctx c = make_ctx(o);
    const GroupTable& G = *c.G;
    std::string mdesc, cdesc;
    Coframing cf = resolve_metric(c.space, o, mdesc);
    Connection conn = resolve_connection(c.space, cf, o, cdesc);
    std::cout << "coframing: " << mdesc << "\n";
    std::cout << "connection: " << cdesc << "\n";
    for (std::size_t iw = 0; iw < c.space.csize(); ++iw)
        std::cout << "A[" << G.label(c.C.element(iw))
                  << "] = " << fmt_one_form(c.space, conn.form(c.space, iw)) << "\n";

    Curvature curv = curvature(c.space, conn);
    bool flat = true;
    for (std::size_t ia = 0; ia < c.space.csize(); ++ia) {
        std::cout << "F[" << G.label(c.C.element(ia))
                  << "] = " << fmt_two_form(c.space, curv.F[ia]) << "\n";
        if (!curv.F[ia].is_zero()) flat = false;
    }
    if (flat) std::cout << "flat: all F_a = 0\n";
    if (!curv.regular) {
        std::cerr << "warning: connection is not regular; offending products:";
        for (const auto& [q, w] : curv.residuals)
            if (!w.is_zero()) std::cerr << " " << G.label(q);
        std::cerr << "\n";
        std::cout << "regular: no (Ricci below uses the chosen lift on representatives)\n";
    } else {
        std::cout << "regular: yes\n";
    }

    Lift lift = resolve_lift(c.space, o.lift);
    OneOneTensor ric = ricci(c.space, curv, lift);
    std::cout << "lift: " << lift.flavor << "\n";
    std::cout << "Ricci components (E_a x E_b):\n";
    for (std::size_t ia = 0; ia < c.space.csize(); ++ia) {
        std::cout << "  [";
        for (std::size_t ib = 0; ib < c.space.csize(); ++ib)
            std::cout << (ib ? ", " : "") << fmt_fun(G, ric.comp[ia][ib]);
        std::cout << "]\n";
    }

    // recognize Ricci = mu (-g + theta x theta) when it holds
    OneOneTensor h = metric_cotensor(c.space, cf);
    OneOneTensor target(c.space.csize(), c.space.order());
    for (std::size_t ia = 0; ia < c.space.csize(); ++ia)
        for (std::size_t ib = 0; ib < c.space.csize(); ++ib)
            target.comp[ia][ib] =
                GroupFunction::constant(c.space.order(), 1) - h.comp[ia][ib];
    bool found = false;
    Rational mu;
    for (std::size_t ia = 0; ia < c.space.csize() && !found; ++ia)
        for (std::size_t ib = 0; ib < c.space.csize() && !found; ++ib)
            for (std::size_t x = 0; x < c.space.order() && !found; ++x)
                if (target.comp[ia][ib].values[x] != 0) {
                    mu = ric.comp[ia][ib].values[x] / target.comp[ia][ib].values[x];
                    found = true;
                }
    if (found && ric == target * mu)
        std::cout << "Ricci = (" << rat_str(mu) << ") (-g + theta x theta)\n";

    GroupFunction s = scalar_curvature(c.space, cf, ric);
    std::cout << "scalar curvature = " << fmt_fun(G, s) << "\n";

    OneOneOneTensor ng = nabla_on_metric(c.space, conn, h);
    std::cout << "nabla g: " << (ng.is_zero() ? "0" : "nonzero (see geometry.json)")
              << "\n";
    TwoOneTensor defect = metric_compat_defect(c.space, conn, h);
    std::cout << "skew metric compatibility defect: "
              << (defect.is_zero() ? "0" : "nonzero") << "\n";

    Outdir od(o.out);
    od.put("connection.json", connection_json(c.space, conn));
    od.put("metric.json", metric_json(c.space, cf));
    od.put("geometry.json", geometry_json(c.space, curv, lift.flavor, &ric, &s));
    return 0;
}

int cmd_dirac(const JobOptions& o) {
    Ctx c = make_ctx(o);
    const GroupTable& G = *c.G;
    std::string mdesc, cdesc, rdesc;
    Coframing cf = resolve_metric(c.space, o, mdesc);
    Connection conn = resolve_connection(c.space, cf, o, cdesc);
    Representation W = resolve_rep(G, o.rep, rdesc);
    std::cout << "connection: " << cdesc << "\n";
    std::cout << "representation: " << rdesc << " (dim " << W.dim << ")\n";

    BraidedGammas bg;
    if (o.gammas.empty()) {
        bg = tautological_gammas(c.C, W);
        std::cout << "gamma matrices: tautological\n";
    } else {
        auto mats = load_gammas_file(c.C.size(), o.gammas);
        bg.dimw = mats.empty() ? 0 : mats[0].rows();
        if (bg.dimw != W.dim)
            throw BadInput("gamma dimension " + std::to_string(bg.dimw) +
                           " does not match the representation (dim " +
                           std::to_string(W.dim) + ")");
        bg.gamma = std::move(mats);
        std::cout << "gamma matrices: file " << o.gammas << "\n";
    }
    for (std::size_t ia = 0; ia < c.C.size(); ++ia)
        std::cout << "gamma[" << G.label(c.C.element(ia))
                  << "] = " << fmt_matrix(bg.gamma[ia]) << "\n";
    std::cout << "equivariant: " << (gammas_equivariant(c.C, W, bg) ? "yes" : "no")
              << "\n";

    KillingForm kf = killing_form(c.C);
    Matrix lhs(bg.dimw, bg.dimw);
    for (std::size_t ia = 0; ia < c.C.size(); ++ia)
        for (std::size_t ib = 0; ib < c.C.size(); ++ib)
            lhs = lhs + bg.gamma[ia] * bg.gamma[ib] * kf.eta.at(ia, ib);
    Matrix rc = casimir_action(c.C, W);
    std::cout << "eta^{ab} gamma_a gamma_b = " << fmt_matrix(lhs) << "\n";
    std::cout << "rho_W(Casimir) = " << fmt_matrix(rc) << "\n";
    std::cout << "normalization matches: " << (lhs == rc ? "yes" : "no") << "\n";

    Matrix D = dirac_matrix(c.space, conn, W, bg);
    std::cout << "Dirac operator: " << D.rows() << " x " << D.cols() << "\n";
    Rational tr2 = trace_d_squared(D);
    std::cout << "trace D^2 = " << rat_str(tr2) << "\n";

    Spectrum sp = spectrum(D, static_cast<int>(o.precision));
    std::cout << "char poly (integer coefficients, ascending):";
    for (const auto& z : sp.char_poly.integer_normalized()) std::cout << " " << z.get_str();
    std::cout << "\n";
    std::cout << "spectrum (" << o.precision << " digits):\n";
    for (const auto& r : sp.roots)
        std::cout << "  " << r.value << "  (multiplicity " << r.multiplicity
                  << ", residual " << r.residual_str << ")\n";

    ConnesReport cr = connes_necessary_check(c.C, bg);
    std::cout << "nilpotency check: " << (cr.passed ? "PASS" : "FAIL") << "\n";
    for (const auto& f : cr.failures)
        std::cout << "  fails " << f.condition << " at " << f.where << ": "
                  << fmt_matrix(f.value) << "\n";

    Outdir od(o.out);
    od.put("dirac.json", dirac_json(D, tr2));
    od.put("spectrum.json", spectrum_json(sp));
    return 0;
}

int cmd_export(const JobOptions& o) {
    if (o.out.empty()) throw BadInput("export needs --out DIR");
    Ctx c = make_ctx(o);
    const GroupTable& G = *c.G;
    Outdir od(o.out);
    od.put("group.json", group_json(G));
    od.put("calculus.json", calculus_json(c.space));
    od.put("killing.json", killing_json(c.C, killing_form(c.C)));
    std::string mdesc;
    Coframing cf = resolve_metric(c.space, o, mdesc);
    od.put("metric.json", metric_json(c.space, cf));
    AffineModuli mt = solve_torsion_free(c.space);
    AffineModuli mc = solve_cotorsion_free(c.space, cf);
    od.put("moduli_torsion_free.json", moduli_json(c.space, mt));
    od.put("moduli_cotorsion_free.json", moduli_json(c.space, mc));
    od.put("moduli_both.json", moduli_json(c.space, intersect_moduli(mt, mc)));
    try {
        std::string cdesc;
        Connection conn = resolve_connection(c.space, cf, o, cdesc);
        od.put("connection.json", connection_json(c.space, conn));
    } catch (const std::exception& e) {
        std::cout << "connection not exported: " << e.what() << "\n";
    }
    return 0;
}

int cmd_finset_check(const JobOptions& o) {
    Ctx c = make_ctx(o);
    const GroupTable& G = *c.G;
    const TwoFormSpace& space = c.space;
    std::size_t n = space.csize();
    std::size_t order = space.order();

    std::string mdesc, cdesc, rdesc;
    Coframing cf = resolve_metric(space, o, mdesc);
    Connection conn = resolve_connection(space, cf, o, cdesc);
    Representation W = resolve_rep(G, o.rep, rdesc);
    Lift lift = resolve_lift(space, o.lift);
    GroupFinsetModel m = finset_from_group(space, &lift);

    std::cout << "engine equivalence on " << o.group << " (order " << order
              << "), C size " << n << ", connection " << cdesc << ", lift "
              << lift.flavor << "\n";
    std::cout << "points " << m.ec.npoints << ", edges " << m.ec.edges.size()
              << ", composable pairs " << m.ec.pair_keys.size() << ", triples "
              << m.ec.triples.size() << "\n";
    std::cout << "fibration valid: " << (validate_fibration(m.ec, n) ? "yes" : "no")
              << "\n";
    std::cout << "lift is a section: " << (lifts_section(m.wf) ? "yes" : "no") << "\n";

    bool all_ok = true;
    auto report = [&](const std::string& what, bool ok) {
        std::cout << "  " << what << ": " << (ok ? "ok" : "MISMATCH") << "\n";
        if (!ok) all_ok = false;
    };

    // deterministic test data
    std::vector<OneForm> units;
    for (std::size_t ia = 0; ia < n; ++ia) units.push_back(unit_one_form(space, ia));
    OneForm mix(n, order), mix2(n, order);
    for (std::size_t ia = 0; ia < n; ++ia)
        for (std::size_t x = 0; x < order; ++x) {
            mix.comp[ia].values[x] = rat(static_cast<long>((ia + 2) * (x + 1) % 7) - 3);
            mix2.comp[ia].values[x] = rat(static_cast<long>((2 * ia + 1) * (x + 3) % 5) - 2);
        }
    std::vector<OneForm> probes = units;
    probes.push_back(mix);
    probes.push_back(mix2);

    {
        bool ok = true;
        for (std::size_t x = 0; x < order; ++x) {
            GroupFunction f = GroupFunction::delta(order, static_cast<int>(x));
            Fin1Form lhs = d_function(m.ec, f.values);
            Fin1Form rhs = to_fin_one_form(m, space, differential(c.C, f));
            if (!(lhs == rhs)) ok = false;
        }
        report("exterior derivative of functions", ok);
    }
    {
        bool ok = true;
        for (const auto& a : probes) {
            Fin2Form lhs = d_one_form_fin(m.ec, m.wf, to_fin_one_form(m, space, a));
            Fin2Form rhs = to_fin_two_form(m, space, d_one_form(space, a));
            if (!(lhs == rhs)) ok = false;
        }
        report("exterior derivative of 1-forms", ok);
    }
    {
        Fin2Form lhs = wedge_fin(m.ec, m.wf, to_fin_one_form(m, space, mix),
                                 to_fin_one_form(m, space, mix2));
        Fin2Form rhs = to_fin_two_form(m, space, wedge(space, mix, mix2));
        report("wedge product", lhs == rhs);
    }

    Fin1Family A_fin;
    {
        std::vector<OneForm> A_forms;
        for (std::size_t iw = 0; iw < n; ++iw) A_forms.push_back(conn.form(space, iw));
        A_fin = to_fin_family(m, space, A_forms);
    }
    {
        bool ok = true;
        for (const auto& a : probes) {
            Fin3Form lhs = nabla_tensor(m.ec, m.vb, m.tau, A_fin,
                                        to_fin_one_form(m, space, a));
            Fin3Form rhs = to_fin_path_tensor(m, space,
                                              covariant_derivative(space, conn, a));
            if (!(lhs == rhs)) ok = false;
        }
        report("covariant derivative", ok);
    }
    {
        auto fin = torsion_tensor(m.ec, m.wf, m.vb, m.tau, A_fin);
        auto grp = torsion_of(space, conn);
        bool ok = fin.size() == grp.size();
        for (std::size_t ia = 0; ok && ia < n; ++ia)
            if (!(fin[ia] == to_fin_two_form(m, space, grp[ia]))) ok = false;
        report("torsion", ok);
    }
    Fin1Family estar_fin;
    {
        std::vector<OneForm> duals;
        for (std::size_t ia = 0; ia < n; ++ia) duals.push_back(cf.dual_form(space, ia));
        estar_fin = to_fin_family(m, space, duals);
        auto fin = cotorsion_tensor(m.ec, m.wf, m.vb, m.tau, A_fin, estar_fin);
        auto grp = cotorsion_of(space, cf, conn);
        bool ok = fin.size() == grp.size();
        for (std::size_t ia = 0; ok && ia < n; ++ia)
            if (!(fin[ia] == to_fin_two_form(m, space, grp[ia]))) ok = false;
        report("cotorsion", ok);

        OneOneTensor gt(n, order);
        for (std::size_t ia = 0; ia < n; ++ia) {
            OneForm d = cf.dual_form(space, ia);
            for (std::size_t ib = 0; ib < n; ++ib) gt.comp[ib][ia] = d.comp[ib];
        }
        report("metric tensor",
               metric_tensor_fin(m.ec, m.vb, estar_fin) ==
                   to_fin_path_tensor(m, space, gt));
    }
    Curvature curv = curvature(space, conn);
    {
        FinCurvature fc = curvature_tensor(m.ec, m.wf, m.prod, A_fin);
        bool ok = fc.F.size() == curv.F.size() && fc.regular == curv.regular;
        for (std::size_t ia = 0; ok && ia < n; ++ia)
            if (!(fc.F[ia] == to_fin_two_form(m, space, curv.F[ia]))) ok = false;
        report("curvature", ok);
        if (!curv.regular)
            std::cout << "  (connection not regular; residual classes: "
                      << fc.residuals.size() << ")\n";
    }
    {
        Fin3Form lhs = ricci_tensor(m.ec, m.wf, m.vb, m.tau, m.prod, A_fin);
        Fin3Form rhs = to_fin_path_tensor(m, space, ricci(space, curv, lift));
        report("ricci", lhs == rhs);
    }
    {
        std::vector<Matrix> tauW;
        std::vector<Matrix> gam;
        for (std::size_t ib = 0; ib < n; ++ib)
            tauW.push_back(W.of_minus_id(G.inv(c.C.element(ib))));
        bool have_taut = false;
        if (o.gammas.empty()) {
            KillingForm kf = killing_form(c.C);
            if (kf.semisimple) {
                gam = tautological_gammas(c.C, W).gamma;
                have_taut = true;
            }
        } else {
            gam = load_gammas_file(n, o.gammas);
        }
        if (gam.empty()) {
            // synthetic deterministic spinor data, shape only
            for (std::size_t ia = 0; ia < n; ++ia) {
                Matrix g(W.dim, W.dim);
                for (std::size_t s = 0; s < W.dim; ++s)
                    for (std::size_t t = 0; t < W.dim; ++t)
                        g(s, t) = rat(1, static_cast<long>(1 + ia + s + 2 * t));
                gam.push_back(g);
            }
            std::cout << "  (degenerate Killing form; synthetic gamma data)\n";
        } else if (have_taut) {
            std::cout << "  (tautological gamma matrices)\n";
        }
        BraidedGammas bg{W.dim, gam};
        Matrix lhs = dirac_tensor(m.ec, m.vb, A_fin, tauW, gam);
        Matrix rhs = dirac_matrix(space, conn, W, bg);
        report("dirac", lhs == rhs);
    }

    std::cout << (all_ok ? "all tensors agree\n" : "engine mismatch detected\n");
    return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact noncommutative Riemannian geometry on finite groups"};
    app.require_subcommand(1);

    JobOptions o;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--group", o.group,
                        "builtin (s3, s4, z_<n>, dihedral_<n>) or group JSON file");
        sub->add_option("--class", o.klass,
                        "conjugacy class index or comma-separated element labels");
        sub->add_option("--out", o.out, "directory for JSON artifacts");
    };
    auto add_metric = [&](CLI::App* sub) {
        sub->add_option("--metric", o.metric, "killing, or a cotensor JSON file");
    };
    auto add_connection = [&](CLI::App* sub) {
        sub->add_option("--connection", o.connection,
                        "levi-civita, maurer-cartan, zero, or a connection JSON file");
        sub->add_option("--bound", o.bound,
                        "parameter bound for the regular point search");
    };
    auto add_lift = [&](CLI::App* sub) {
        sub->add_option("--lift", o.lift, "lift flavor")
            ->check(CLI::IsMember({"woronowicz", "projection"}));
    };
    auto add_spinor = [&](CLI::App* sub) {
        sub->add_option("--rep", o.rep,
                        "representation: s3-2d, regular, trivial, or a JSON file");
        sub->add_option("--gammas", o.gammas, "gamma matrices JSON file");
    };

    CLI::App* s_info = app.add_subcommand("info", "calculus and Killing form summary");
    add_common(s_info);

    CLI::App* s_solve = app.add_subcommand("solve", "spin connection moduli");
    add_common(s_solve);
    add_metric(s_solve);
    s_solve->add_option("--bound", o.bound,
                        "parameter bound for the regular point search");

    CLI::App* s_geom = app.add_subcommand("geometry", "curvature, Ricci, diagnostics");
    add_common(s_geom);
    add_metric(s_geom);
    add_connection(s_geom);
    add_lift(s_geom);

    CLI::App* s_dirac = app.add_subcommand("dirac", "Dirac operator and spectrum");
    add_common(s_dirac);
    add_metric(s_dirac);
    add_connection(s_dirac);
    add_spinor(s_dirac);
    s_dirac->add_option("--precision", o.precision, "spectrum digits");

    CLI::App* s_fin = app.add_subcommand("finset-check",
                                         "finite-set engine equivalence run");
    add_common(s_fin);
    add_metric(s_fin);
    add_connection(s_fin);
    add_lift(s_fin);
    add_spinor(s_fin);

    CLI::App* s_export = app.add_subcommand("export", "write all JSON artifacts");
    add_common(s_export);
    add_metric(s_export);
    add_connection(s_export);

    CLI11_PARSE(app, argc, argv);

    try {
        if (s_info->parsed()) return cmd_info(o);
        if (s_solve->parsed()) return cmd_solve(o);
        if (s_geom->parsed()) return cmd_geometry(o);
        if (s_dirac->parsed()) return cmd_dirac(o);
        if (s_fin->parsed()) return cmd_finset_check(o);
        if (s_export->parsed()) return cmd_export(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
