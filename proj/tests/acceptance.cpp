// Acceptance gate: eleven exact criteria over the whole engine, one verdict
// line each. Exits with the number of failed criteria.

#include <exception>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "oracles.hpp"

using namespace ncgeo;

namespace {

int g_failed = 0;

void verdict(int k, bool ok, const std::string& name) {
    std::cout << "criterion " << (k < 10 ? " " : "") << k << ": "
              << (ok ? "PASS" : "FAIL") << " - " << name << "\n";
    if (!ok) ++g_failed;
}

void note(const std::string& s) { std::cout << "    " << s << "\n"; }

void run(int k, const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::cout << "    exception: " << e.what() << "\n";
        ok = false;
    }
    verdict(k, ok, name);
}

std::vector<Rational> pair_vec(const AdSet& C,
                               std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<Rational> v(C.size() * C.size(), 0);
    for (auto [a, b] : pairs)
        v[static_cast<std::size_t>(C.index_of(a)) * C.size() +
          static_cast<std::size_t>(C.index_of(b))] = 1;
    return v;
}

AdSet class_of_label(const GroupTable& G, const std::string& label) {
    int g = G.element_by_label(label);
    for (const auto& cls : G.conjugacy_classes())
        for (int x : cls)
            if (x == g) return validate_ad_set(G, cls);
    throw GroupError("no class for " + label);
}

AdSet transposition_class(const GroupTable& s4) {
    for (const auto& cls : s4.conjugacy_classes())
        if (cls.size() == 6) return validate_ad_set(s4, cls);
    throw GroupError("no size-6 class");
}

bool criterion_killing() {
    oracle::S3Fixture fx;
    KillingForm kf = killing_form(fx.C);
    bool ok = kf.semisimple && kf.eta == Matrix::identity(3) * Rational(3);
    KillingForm k2 = killing_form(validate_ad_set(fx.G, {3, 4}));
    ok = ok && !k2.semisimple;
    return ok;
}

bool criterion_omega2() {
    oracle::S3Fixture fx;
    const TwoFormSpace& sp = fx.space;
    bool ok = sp.dim2 == 4;

    std::vector<std::vector<Rational>> rel = {
        pair_vec(fx.C, {{1, 1}}),
        pair_vec(fx.C, {{2, 2}}),
        pair_vec(fx.C, {{5, 5}}),
        pair_vec(fx.C, {{1, 2}, {2, 5}, {5, 1}}),
        pair_vec(fx.C, {{2, 1}, {5, 2}, {1, 5}}),
    };
    ok = ok && sp.relation_rows.rows() == 5 &&
         same_row_space(sp.relation_rows, Matrix::from_rows(rel, 9));

    auto E = [&](std::size_t a) { return unit_one_form(sp, a); };
    ok = ok && (sp.dE[0] + wedge(sp, E(2), E(1)) + wedge(sp, E(1), E(2))).is_zero();
    ok = ok && (sp.dE[1] + wedge(sp, E(0), E(2)) + wedge(sp, E(2), E(0))).is_zero();
    ok = ok && (sp.dE[2] + wedge(sp, E(1), E(0)) + wedge(sp, E(0), E(1))).is_zero();
    ok = ok && (sp.dE[0] + sp.dE[1] + sp.dE[2]).is_zero();
    return ok;
}

bool criterion_relation_spans() {
    std::vector<std::pair<GroupTable, std::vector<int>>> zoo;
    zoo.emplace_back(builtin_zn(2), std::vector<int>{1});
    zoo.emplace_back(builtin_zn(3), std::vector<int>{1, 2});
    zoo.emplace_back(builtin_zn(4), std::vector<int>{1, 2, 3});
    zoo.emplace_back(builtin_s3(), std::vector<int>{1, 2, 5});
    bool ok = true;
    auto check = [&](const GroupTable&, const AdSet& C) {
        TwoFormSpace sp = build_omega2(C);
        Matrix ker = oracle::ker_id_minus_psi_rows(C);
        if (sp.relation_rows.rows() == 0 || ker.rows() == 0) {
            if (sp.relation_rows.rows() != ker.rows()) ok = false;
            return;
        }
        if (!same_row_space(sp.relation_rows, ker)) ok = false;
    };
    for (const auto& [G, members] : zoo) check(G, validate_ad_set(G, members));
    GroupTable d4 = builtin_dihedral(4);
    check(d4, class_of_label(d4, "s"));
    GroupTable s4 = builtin_s4();
    check(s4, transposition_class(s4));
    return ok;
}

bool criterion_moduli() {
    oracle::S3Fixture fx;
    AffineModuli mt = solve_torsion_free(fx.space);
    AffineModuli mcf = solve_cotorsion_free(fx.space, fx.cf);
    AffineModuli mi = intersect_moduli(mt, mcf);

    AffineModuli tref = oracle::family_from_pattern(
        fx.space, [&](const GroupFunction& a, const GroupFunction& b) {
            return oracle::prop_family_vector(fx.space, a, b);
        });
    AffineModuli cref = oracle::family_from_pattern(
        fx.space, [&](const GroupFunction& a, const GroupFunction& b) {
            return oracle::mirror_family_vector(fx.space, a, b);
        });

    bool tsum = true;
    auto check_sum = [&](const std::vector<Rational>& v) {
        Connection c = connection_from_vector(fx.space, v);
        OneForm s(3, 6);
        for (std::size_t iw = 0; iw < 3; ++iw) s = s + c.form(fx.space, iw);
        if (!s.is_zero()) tsum = false;
    };
    check_sum(mt.base);
    for (std::size_t j = 0; j < mt.basis.cols(); ++j) {
        std::vector<Rational> v(mt.ambient_dim);
        for (std::size_t i = 0; i < mt.ambient_dim; ++i)
            v[i] = mt.base[i] + mt.basis.at(i, j);
        check_sum(v);
    }

    bool t_ok = mt.consistent && mt.dim() == 12 && same_affine_span(mt, tref) && tsum;
    bool c_ok = mcf.consistent && mcf.dim() == 12 && same_affine_span(mcf, cref);
    bool i_ok = mi.consistent && mi.dim() == 2;

    RegularSearch rs = find_regular(fx.space, mi);
    bool r_ok = rs.status == RegularSearch::Status::Points && rs.points.size() == 1 &&
                rs.points[0] ==
                    connection_to_vector(fx.space, oracle::levi_civita_s3(fx.space));

    note(std::string("torsion-free space: dimension ") + std::to_string(mt.dim()) +
         ", parametric family and the sum rule sum_a A_a = 0 " +
         (t_ok ? "confirmed" : "NOT confirmed"));
    note(std::string("cotorsion-free space: dimension ") + std::to_string(mcf.dim()) +
         ", mirror family " + (c_ok ? "confirmed" : "NOT confirmed"));
    note("intersection: expected dimension 2, computed dimension " +
         std::to_string(mi.dim()));
    if (!i_ok && mi.dim() == 4) {
        GroupFunction z(6);
        GroupFunction chi = oracle::alternating_character(fx.G);
        bool extra =
            moduli_contains(mi, oracle::mirror_family_vector(fx.space, chi, z)) &&
            moduli_contains(mi, oracle::mirror_family_vector(fx.space, z, chi));
        note("the joint equations only force each coefficient function to be "
             "constant on the two cosets of the even subgroup, not on the whole "
             "group; scaling the sign character gives two extra exact solutions");
        note(std::string("sign-character directions solve both equation sets: ") +
             (extra ? "verified" : "NOT verified"));
    }
    note(std::string("regular points in the computed intersection: ") +
         std::to_string(rs.points.size()) +
         (r_ok ? ", the single point has every coefficient -1/3 (A_a = E_a - theta/3)"
               : ""));
    return t_ok && c_ok && i_ok && r_ok;
}

bool criterion_curvature_ricci() {
    oracle::S3Fixture fx;
    Connection lc = oracle::levi_civita_s3(fx.space);
    Curvature curv = curvature(fx.space, lc);
    bool ok = curv.regular;
    for (std::size_t ia = 0; ia < 3; ++ia)
        ok = ok && curv.F[ia] == fx.space.dE[ia];

    OneOneTensor rw = ricci(fx.space, curv, lift_woronowicz(fx.space));
    OneOneTensor rp = ricci(fx.space, curv, lift_projection(fx.space));
    for (std::size_t b = 0; b < 3; ++b)
        for (std::size_t d = 0; d < 3; ++d) {
            // mu (theta x theta - g) with metric components 3 delta
            Rational base = b == d ? Rational(-2) : Rational(1);
            ok = ok && rw.comp[b][d] == GroupFunction::constant(6, base);
            ok = ok && rp.comp[b][d] == GroupFunction::constant(6, base * Rational(2, 3));
        }
    if (ok) {
        note("F_a = dE_a at the distinguished connection; Ricci = mu (theta x theta - g)"
             " with mu = 1 (antisymmetrizer lift) and mu = 2/3 (projection lift)");
        note("scalar curvature: -2 and -4/3 respectively");
    }
    return ok;
}

bool criterion_metric_derivative() {
    oracle::S3Fixture fx;
    Connection lc = oracle::levi_civita_s3(fx.space);
    OneOneTensor h = oracle::unit_cotensor(3, 6);

    bool skew_ok = metric_compat_defect(fx.space, lc, h).is_zero();
    note(std::string("skew derivative of sum_a E_a x E_a: ") +
         (skew_ok ? "exactly zero" : "NOT zero"));

    OneOneOneTensor got = nabla_on_metric(fx.space, lc, h);
    OneOneOneTensor want(3, 6);
    for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t q = 0; q < 3; ++q)
            for (std::size_t r = 0; r < 3; ++r) {
                bool two_equal = !(p == q && q == r) && (p == q || q == r || p == r);
                want.comp[p][q][r] =
                    GroupFunction::constant(6, two_equal ? Rational(2) : Rational(0));
            }
    bool table_ok = got == want;

    if (!table_ok) {
        OneOneOneTensor faithful(3, 6);
        Rational got_mass = 0, want_mass = 0;
        bool diff_const = true;
        for (std::size_t p = 0; p < 3; ++p)
            for (std::size_t q = 0; q < 3; ++q)
                for (std::size_t r = 0; r < 3; ++r) {
                    bool all_equal = p == q && q == r;
                    bool all_distinct = p != q && q != r && p != r;
                    Rational v = Rational(2, 3);
                    if (all_equal || all_distinct) v -= 2;
                    faithful.comp[p][q][r] = GroupFunction::constant(6, v);
                    GroupFunction d = want.comp[p][q][r] - got.comp[p][q][r];
                    if (!(d == GroupFunction::constant(6, Rational(4, 3))))
                        diff_const = false;
                    got_mass += got.comp[p][q][r].values[0];
                    want_mass += want.comp[p][q][r].values[0];
                }
        note(std::string("one-sided derivative: entries 2/3 - 2 [p=q=r] - 2 [all "
                         "distinct] ") +
             (got == faithful ? "(verified)" : "(NOT the computed value)") +
             "; the expected table is 2 [exactly two indices equal]");
        if (diff_const)
            note("difference is the constant tensor (4/3) theta x theta x theta");
        note("total mass: computed " + rat_str(got_mass) + ", expected " +
             rat_str(want_mass));

        bool mass_rule = true;
        for (const Connection& c :
             {oracle::zero_connection(fx.space), oracle::maurer_cartan_connection(fx.space),
              lc}) {
            OneOneOneTensor t = nabla_on_metric(fx.space, c, h);
            GroupFunction m(6);
            for (std::size_t p = 0; p < 3; ++p)
                for (std::size_t q = 0; q < 3; ++q)
                    for (std::size_t r = 0; r < 3; ++r) m = m + t.comp[p][q][r];
            if (!m.is_zero()) mass_rule = false;
        }
        note(std::string("pointwise total mass vanishes at every tested connection: ") +
             (mass_rule ? "yes" : "no") +
             "; a mass-36 table is out of reach for this operator");
    }
    return skew_ok && table_ok;
}

bool criterion_dirac() {
    oracle::S3Fixture fx;
    Representation W = s3_two_dim_rep(fx.G);
    BraidedGammas g = tautological_gammas(fx.C, W);

    auto mat2 = [](std::initializer_list<Rational> v) {
        Matrix m(2, 2);
        auto it = v.begin();
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) m.at(i, j) = *it++;
        return m;
    };
    Rational t(1, 3);
    bool ok = g.gamma[0] == mat2({-t, t, t, -t}) &&
              g.gamma[1] == mat2({0, 0, -t, -2 * t}) &&
              g.gamma[2] == mat2({-2 * t, -t, 0, 0});

    Matrix I2 = Matrix::identity(2);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) {
            Matrix lhs = g.gamma[a] * g.gamma[b] + g.gamma[b] * g.gamma[a] +
                         (g.gamma[a] + g.gamma[b]) * Rational(2, 3);
            ok = ok && lhs == I2 * rat(a == b ? 0 : -1, 3);
        }

    Matrix sq(2, 2);
    for (const auto& m : g.gamma) sq = sq + m * m;
    ok = ok && sq * Rational(3) == I2 * Rational(2);
    ok = ok && casimir_action(fx.C, W) == I2 * Rational(2);

    Matrix D = dirac_matrix(fx.space, oracle::levi_civita_s3(fx.space), W, g);
    Matrix want(12, 12);
    for (std::size_t ia = 0; ia < 3; ++ia)
        want = want + oracle::kron(partial_matrix(fx.C, ia), g.gamma[ia]);
    want = want - Matrix::identity(12);
    ok = ok && D == want;

    Matrix Pu = partial_matrix(fx.C, 0);
    Matrix Pv = partial_matrix(fx.C, 1);
    Matrix Pw = partial_matrix(fx.C, 2);
    Matrix I6 = Matrix::identity(6);
    std::vector<std::vector<Matrix>> blocks = {
        {(Pu * Rational(-1) - Pw * Rational(2) - I6 * Rational(3)) * t, (Pu - Pw) * t},
        {(Pu - Pv) * t, (Pu * Rational(-1) - Pv * Rational(2) - I6 * Rational(3)) * t}};
    for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t x = 0; x < 6; ++x)
                for (std::size_t y = 0; y < 6; ++y)
                    ok = ok && D.at(2 * x + s, 2 * y + r) == blocks[s][r].at(x, y);
    return ok;
}

bool criterion_nilpotency_checker() {
    oracle::S3Fixture fx;
    BraidedGammas g = tautological_gammas(fx.C, s3_two_dim_rep(fx.G));
    bool ok = !connes_necessary_check(fx.C, g).passed;

    GroupTable z2 = builtin_zn(2);
    AdSet c2 = validate_ad_set(z2, {1});
    BraidedGammas n;
    n.dimw = 2;
    Matrix nm(2, 2);
    nm.at(0, 1) = 1;
    n.gamma = {nm};
    ok = ok && connes_necessary_check(c2, n).passed;
    return ok;
}

bool engines_agree(const TwoFormSpace& sp, const Coframing& cf, const Lift& lift,
                   const Connection& conn, const Representation& W,
                   const BraidedGammas& g) {
    const GroupTable& G = *sp.group;
    const AdSet& C = sp.C;
    std::size_t n = sp.csize();
    GroupFinsetModel m = finset_from_group(sp, &lift);
    bool ok = true;

    std::vector<OneForm> aforms, sforms;
    for (std::size_t iw = 0; iw < n; ++iw) aforms.push_back(conn.form(sp, iw));
    for (std::size_t a = 0; a < n; ++a) sforms.push_back(cf.dual_form(sp, a));
    Fin1Family A = to_fin_family(m, sp, aforms);
    Fin1Family Estar = to_fin_family(m, sp, sforms);

    std::vector<TwoForm> T = torsion_of(sp, conn);
    std::vector<TwoForm> S = cotorsion_of(sp, cf, conn);
    auto Tf = torsion_tensor(m.ec, m.wf, m.vb, m.tau, A);
    auto Sf = cotorsion_tensor(m.ec, m.wf, m.vb, m.tau, A, Estar);
    for (std::size_t a = 0; a < n; ++a) {
        ok = ok && Tf[a] == to_fin_two_form(m, sp, T[a]);
        ok = ok && Sf[a] == to_fin_two_form(m, sp, S[a]);
    }

    Curvature cv = curvature(sp, conn);
    FinCurvature fcv = curvature_tensor(m.ec, m.wf, m.prod, A);
    ok = ok && fcv.regular == cv.regular &&
         fcv.residuals.size() == cv.residuals.size();
    for (std::size_t i = 0; i < n; ++i)
        ok = ok && fcv.F[i] == to_fin_two_form(m, sp, cv.F[i]);

    for (std::size_t a = 0; a < n; ++a) {
        OneForm e = unit_one_form(sp, a);
        ok = ok && d_one_form_fin(m.ec, m.wf, to_fin_one_form(m, sp, e)) ==
                       to_fin_two_form(m, sp, d_one_form(sp, e));
        ok = ok && nabla_tensor(m.ec, m.vb, m.tau, A, to_fin_one_form(m, sp, e)) ==
                       to_fin_path_tensor(m, sp, covariant_derivative(sp, conn, e));
    }

    OneOneTensor gt(n, sp.order());
    for (std::size_t ia = 0; ia < n; ++ia)
        for (std::size_t ib = 0; ib < n; ++ib)
            gt.comp[ib][ia] = cf.dual_form(sp, ia).comp[ib];
    ok = ok && metric_tensor_fin(m.ec, m.vb, Estar) == to_fin_path_tensor(m, sp, gt);

    ok = ok && ricci_tensor(m.ec, m.wf, m.vb, m.tau, m.prod, A) ==
                   to_fin_path_tensor(m, sp, ricci(sp, cv, lift));

    std::vector<Matrix> tauW;
    for (std::size_t i = 0; i < n; ++i)
        tauW.push_back(W.of_minus_id(G.inv(C.element(i))));
    ok = ok &&
         dirac_tensor(m.ec, m.vb, A, tauW, g.gamma) == dirac_matrix(sp, conn, W, g);
    return ok;
}

bool criterion_engine_equivalence() {
    bool ok = true;

    oracle::S3Fixture fx;
    Representation W = s3_two_dim_rep(fx.G);
    BraidedGammas g = tautological_gammas(fx.C, W);
    Lift proj = lift_projection(fx.space);
    for (const Connection& conn :
         {oracle::zero_connection(fx.space), oracle::maurer_cartan_connection(fx.space),
          oracle::levi_civita_s3(fx.space)})
        ok = ok && engines_agree(fx.space, fx.cf, proj, conn, W, g);

    GroupTable Z = builtin_zn(3);
    AdSet C = validate_ad_set(Z, {1, 2});
    TwoFormSpace sp = build_omega2(C);
    Coframing cf = coframing_from_cotensor(sp, Matrix::identity(2));
    Representation Wr = regular_rep(Z);
    BraidedGammas gz = oracle::synthetic_gammas(2, 3);
    Lift pz = lift_projection(sp);
    for (const Connection& conn :
         {oracle::zero_connection(sp), oracle::maurer_cartan_connection(sp),
          oracle::synthetic_connection(sp)})
        ok = ok && engines_agree(sp, cf, pz, conn, Wr, gz);
    note("order-3 cyclic set: the joint moduli fill the whole ambient space, so no "
         "distinguished connection exists; a fixed synthetic one stands in");
    return ok;
}

bool criterion_property_suite() {
    bool ok = true;

    std::vector<std::pair<GroupTable, std::vector<int>>> zoo;
    zoo.emplace_back(builtin_zn(2), std::vector<int>{1});
    zoo.emplace_back(builtin_zn(3), std::vector<int>{1, 2});
    zoo.emplace_back(builtin_zn(4), std::vector<int>{1, 3});
    zoo.emplace_back(builtin_zn(6), std::vector<int>{1, 5});
    zoo.emplace_back(builtin_s3(), std::vector<int>{1, 2, 5});
    zoo.emplace_back(builtin_zn(12), std::vector<int>{1, 11});
    zoo.emplace_back(builtin_zn(24), std::vector<int>{1, 23});
    {
        GroupTable d4 = builtin_dihedral(4);
        AdSet refl = class_of_label(d4, "s");
        zoo.emplace_back(d4, refl.members);
        GroupTable s4 = builtin_s4();
        zoo.emplace_back(s4, transposition_class(s4).members);
    }

    for (const auto& [G, members] : zoo) {
        AdSet C = validate_ad_set(G, members);
        TwoFormSpace sp = build_omega2(C);
        int order = static_cast<int>(G.order());
        for (int i = 0; i < order; ++i) {
            GroupFunction f = GroupFunction::delta(G.order(), i);
            for (int j = 0; j < order; ++j) {
                GroupFunction h = GroupFunction::delta(G.order(), j);
                for (int a : members) {
                    GroupFunction lhs = partial(C, a, f * h);
                    GroupFunction rhs =
                        f * partial(C, a, h) + partial(C, a, f) * shift_right(G, a, h);
                    ok = ok && lhs == rhs;
                }
            }
            for (int a : members)
                for (int b : members) {
                    GroupFunction lhs = partial(C, a, partial(C, b, f));
                    GroupFunction rhs = partial(C, G.mul(a, b), f) - partial(C, a, f) -
                                        partial(C, b, f);
                    ok = ok && lhs == rhs;
                }
            ok = ok && d_one_form(sp, differential(C, f)).is_zero();
        }
    }

    for (int nn : {4, 6}) {
        GroupTable G = builtin_zn(nn);
        AdSet C = validate_ad_set(G, {1, nn - 1});
        TwoFormSpace sp = build_omega2(C);
        for (const Connection& conn :
             {oracle::zero_connection(sp), oracle::maurer_cartan_connection(sp),
              oracle::synthetic_connection(sp)}) {
            Curvature cv = curvature(sp, conn);
            for (std::size_t ia = 0; ia < 2; ++ia)
                ok = ok && riemann_on_basis(sp, cv, ia).is_zero();
        }
    }

    oracle::S3Fixture fx;
    ok = ok && fx.space.wedge_matrix * lift_projection(fx.space).mat ==
                   Matrix::identity(4);
    ok = ok && fx.space.wedge_matrix * lift_woronowicz(fx.space).mat !=
                   Matrix::identity(4);
    return ok;
}

bool criterion_spectrum() {
    oracle::S3Fixture fx;
    Representation W = s3_two_dim_rep(fx.G);
    BraidedGammas g = tautological_gammas(fx.C, W);
    Matrix D = dirac_matrix(fx.space, oracle::levi_civita_s3(fx.space), W, g);

    Poly cp = char_poly(D);
    bool ok = cp == oracle::char_poly_interpolated(D, 13);

    Spectrum sp = spectrum(D);
    std::vector<Rational> recorded = {0, 0, 0, 0, 1, 0, -4, 0, 6, 0, -4, 0, 1};
    bool rec_ok = sp.char_poly.coeffs() == recorded;

    std::size_t mult = 0;
    bool res_ok = true;
    for (const auto& r : sp.roots) {
        mult += r.multiplicity;
        if (!(r.residual < 1e-20)) res_ok = false;
    }
    ok = ok && rec_ok && res_ok && mult == 12;

    std::string line = "char poly (ascending):";
    for (const auto& c : sp.char_poly.coeffs()) line += " " + rat_str(c);
    note(line);
    std::string roots = "roots:";
    for (const auto& r : sp.roots)
        roots += " " + r.value + " (x" + std::to_string(r.multiplicity) + ")";
    note(roots);
    Poly flipped = sp.char_poly;
    {
        std::vector<Rational> cs = flipped.coeffs();
        for (std::size_t i = 1; i < cs.size(); i += 2) cs[i] = -cs[i];
        flipped = Poly(cs);
    }
    note(std::string("spectrum symmetric about zero (observed, not asserted): ") +
         (flipped == sp.char_poly ? "yes" : "no"));
    return ok;
}

}  // namespace

int main() {
    std::cout << "acceptance gate: exact checks only, zero tolerance\n";
    run(1, "braided-Killing form on the transposition class", criterion_killing);
    run(2, "two-form quotient: dimension, relations, structure equations",
        criterion_omega2);
    run(3, "relation span equals the braiding fixed space on the whole zoo",
        criterion_relation_spans);
    run(4, "connection moduli: dimensions and the distinguished point",
        criterion_moduli);
    run(5, "curvature and Ricci at the distinguished connection",
        criterion_curvature_ricci);
    run(6, "metric-compatibility diagnostics", criterion_metric_derivative);
    run(7, "gamma matrices and the assembled Dirac operator", criterion_dirac);
    run(8, "nilpotency checker verdicts", criterion_nilpotency_checker);
    run(9, "finite-set engine reproduces the group calculus",
        criterion_engine_equivalence);
    run(10, "difference-calculus property suite", criterion_property_suite);
    run(11, "spectrum plumbing and the recorded regression value", criterion_spectrum);

    std::cout << "result: " << (11 - g_failed) << " of 11 criteria passed";
    if (g_failed > 0) std::cout << ", " << g_failed << " failed";
    std::cout << "\n";
    return g_failed;
}
