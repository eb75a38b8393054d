#include <doctest.h>

#include <utility>
#include <vector>

#include "oracles.hpp"

using namespace ncgeo;
using oracle::S3Fixture;

TEST_SUITE("killing") {
    TEST_CASE("transposition class is semisimple with a diagonal form") {
        S3Fixture fx;
        KillingForm kf = killing_form(fx.C);
        REQUIRE(kf.semisimple);
        CHECK(kf.eta == Matrix::identity(3) * Rational(3));
        REQUIRE(kf.eta_inv.has_value());
        CHECK(*kf.eta_inv == Matrix::identity(3) * Rational(1, 3));
    }

    TEST_CASE("3-cycle class is degenerate") {
        GroupTable G = builtin_s3();
        AdSet C = validate_ad_set(G, {3, 4});
        KillingForm kf = killing_form(C);
        CHECK(!kf.semisimple);
        CHECK(!kf.eta_inv.has_value());
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) CHECK(kf.eta.at(i, j) == 2);
    }

    TEST_CASE("offset variant on the transposition class") {
        S3Fixture fx;
        KillingForm kf = killing_form(fx.C, true);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                CHECK(kf.eta.at(i, j) == (i == j ? 4 : 1));  // 3 delta + 1
        CHECK(kf.semisimple);
    }
}

TEST_SUITE("coframing") {
    TEST_CASE("killing coframing and induced metric") {
        S3Fixture fx;
        for (std::size_t a = 0; a < 3; ++a) {
            OneForm dual = fx.cf.dual_form(fx.space, a);
            for (std::size_t b = 0; b < 3; ++b) {
                CHECK(dual.comp[b].is_constant());
                CHECK(dual.comp[b].values[0] == (a == b ? Rational(1, 3) : Rational(0)));
            }
        }
        OneOneTensor h = metric_cotensor(fx.space, fx.cf);
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b)
                CHECK(h.comp[a][b] ==
                      GroupFunction::constant(6, a == b ? Rational(3) : Rational(0)));
    }

    TEST_CASE("metric family degenerates exactly once") {
        S3Fixture fx;
        KillingForm kf = killing_form(fx.C);
        CHECK_THROWS_AS(coframing_from_cotensor(fx.space, metric_family(kf, 1)),
                        NotInvertible);
        Coframing ok = coframing_from_cotensor(fx.space, metric_family(kf, 2));
        // pointwise inverse relation between the two component tables
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b) {
                Rational acc = 0;
                for (std::size_t k = 0; k < 3; ++k)
                    acc += ok.gmat[a][k].values[0] * ok.gmat_inv[k][b].values[0];
                CHECK(acc == (a == b ? 1 : 0));
            }
    }

    TEST_CASE("function-valued coframing inverts pointwise") {
        S3Fixture fx;
        std::vector<std::vector<GroupFunction>> gmat(
            3, std::vector<GroupFunction>(3, GroupFunction(6)));
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t x = 0; x < 6; ++x)
                gmat[a][a].values[x] = Rational(static_cast<long>(1 + a + x));
        Coframing cf = coframing_from_functions(fx.space, gmat);
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t x = 0; x < 6; ++x)
                CHECK(gmat[a][a].values[x] * cf.gmat_inv[a][a].values[x] == 1);
    }
}

TEST_SUITE("moduli") {
    TEST_CASE("torsion-free family matches the parametric form") {
        S3Fixture fx;
        AffineModuli mt = solve_torsion_free(fx.space);
        REQUIRE(mt.consistent);
        CHECK(mt.dim() == 12);
        CHECK(mt.ambient_dim == 54);

        AffineModuli ref = oracle::family_from_pattern(
            fx.space, [&](const GroupFunction& a, const GroupFunction& b) {
                return oracle::prop_family_vector(fx.space, a, b);
            });
        CHECK(same_affine_span(mt, ref));

        // sum of the three connection forms vanishes across the family
        auto sums_to_zero = [&](const std::vector<Rational>& v) {
            Connection c = connection_from_vector(fx.space, v);
            OneForm s(3, 6);
            for (std::size_t iw = 0; iw < 3; ++iw)
                s = s + c.form(fx.space, iw);
            return s.is_zero();
        };
        CHECK(sums_to_zero(mt.base));
        for (std::size_t j = 0; j < mt.basis.cols(); ++j) {
            std::vector<Rational> dir(mt.ambient_dim);
            for (std::size_t i = 0; i < mt.ambient_dim; ++i)
                dir[i] = mt.base[i] + mt.basis.at(i, j);
            CHECK(sums_to_zero(dir));
        }

        // members annihilate the torsion equations
        Connection probe = connection_from_vector(
            fx.space, oracle::prop_family_vector(
                          fx.space, GroupFunction::delta(6, 2) * Rational(5, 7),
                          GroupFunction::delta(6, 4) * Rational(-2)));
        CHECK(oracle::all_zero(torsion_of(fx.space, probe)));
    }

    TEST_CASE("cotorsion-free family is the mirror image") {
        S3Fixture fx;
        AffineModuli mcf = solve_cotorsion_free(fx.space, fx.cf);
        REQUIRE(mcf.consistent);
        CHECK(mcf.dim() == 12);

        AffineModuli ref = oracle::family_from_pattern(
            fx.space, [&](const GroupFunction& a, const GroupFunction& b) {
                return oracle::mirror_family_vector(fx.space, a, b);
            });
        CHECK(same_affine_span(mcf, ref));

        Connection probe = connection_from_vector(
            fx.space, oracle::mirror_family_vector(
                          fx.space, GroupFunction::delta(6, 1) * Rational(3, 2),
                          GroupFunction::delta(6, 5)));
        CHECK(oracle::all_zero(cotorsion_of(fx.space, fx.cf, probe)));
    }

    TEST_CASE("joint moduli: constants plus alternating-coset directions") {
        S3Fixture fx;
        AffineModuli mt = solve_torsion_free(fx.space);
        AffineModuli mcf = solve_cotorsion_free(fx.space, fx.cf);
        AffineModuli mi = intersect_moduli(mt, mcf);
        REQUIRE(mi.consistent);
        CHECK(mi.dim() == 4);

        GroupFunction z(6);
        GroupFunction c1 = GroupFunction::constant(6, Rational(1, 4));
        GroupFunction chi = oracle::alternating_character(fx.G);
        // two constant directions and two alternating-coset directions all lie
        // in the intersection and are affinely independent
        std::vector<std::vector<Rational>> pts = {
            oracle::prop_family_vector(fx.space, c1, z),
            oracle::prop_family_vector(fx.space, z, c1),
            oracle::mirror_family_vector(fx.space, chi, z),
            oracle::mirror_family_vector(fx.space, z, chi)};
        for (const auto& p : pts) {
            CHECK(moduli_contains(mi, p));
            Connection conn = connection_from_vector(fx.space, p);
            CHECK(oracle::all_zero(torsion_of(fx.space, conn)));
            CHECK(oracle::all_zero(cotorsion_of(fx.space, fx.cf, conn)));
        }
        // the coset directions genuinely leave the constant-coefficient plane
        Connection cc = connection_from_vector(fx.space, pts[2]);
        bool all_const = true;
        for (auto& row : cc.comps)
            for (auto& f : row)
                if (!f.is_constant()) all_const = false;
        CHECK(!all_const);

        // subtracting a fixed member gives 4 independent directions
        std::vector<Rational> origin = oracle::prop_family_vector(
            fx.space, GroupFunction::constant(6, Rational(-1, 3)),
            GroupFunction::constant(6, Rational(-1, 3)));
        Matrix dirs(mi.ambient_dim, 4);
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t i = 0; i < mi.ambient_dim; ++i)
                dirs.at(i, j) = pts[j][i] - origin[i];
        CHECK(dirs.rank() == 4);
    }

    TEST_CASE("unique regular point") {
        S3Fixture fx;
        AffineModuli mi = intersect_moduli(solve_torsion_free(fx.space),
                                           solve_cotorsion_free(fx.space, fx.cf));
        RegularSearch rs = find_regular(fx.space, mi);
        REQUIRE(rs.status == RegularSearch::Status::Points);
        REQUIRE(rs.points.size() == 1);
        Connection want = oracle::levi_civita_s3(fx.space);
        CHECK(rs.points[0] == connection_to_vector(fx.space, want));

        CHECK_THROWS_AS(find_regular(fx.space, solve_torsion_free(fx.space), 4),
                        DimensionTooLarge);
    }
}

TEST_SUITE("curvature") {
    TEST_CASE("levi-civita point: regular, with curvature dE") {
        S3Fixture fx;
        Connection lc = oracle::levi_civita_s3(fx.space);
        CHECK(oracle::all_zero(torsion_of(fx.space, lc)));
        CHECK(oracle::all_zero(cotorsion_of(fx.space, fx.cf, lc)));
        Curvature curv = curvature(fx.space, lc);
        CHECK(curv.regular);
        for (std::size_t ia = 0; ia < 3; ++ia) CHECK(curv.F[ia] == fx.space.dE[ia]);
        CHECK_NOTHROW(require_regular(fx.space, curv));
        // the residual list covers exactly the products outside the set
        CHECK(curv.residuals.size() == 2);
    }

    TEST_CASE("canonical framing connection is flat but has torsion") {
        S3Fixture fx;
        Connection mc = oracle::maurer_cartan_connection(fx.space);
        Curvature curv = curvature(fx.space, mc);
        CHECK(curv.regular);
        for (auto& f : curv.F) CHECK(f.is_zero());
        CHECK(!oracle::all_zero(torsion_of(fx.space, mc)));

        Connection zero = oracle::zero_connection(fx.space);
        Curvature cz = curvature(fx.space, zero);
        CHECK(cz.regular);
        for (auto& f : cz.F) CHECK(f.is_zero());
    }

    TEST_CASE("regularity violations are caught") {
        S3Fixture fx;
        Connection bad = oracle::zero_connection(fx.space);
        bad.comps[0][0] = GroupFunction::constant(6, 1);  // A_u = E_u alone
        bad.comps[1][1] = GroupFunction::constant(6, 1);  // A_v = E_v
        Curvature curv = curvature(fx.space, bad);
        CHECK(!curv.regular);
        CHECK_THROWS_AS(require_regular(fx.space, curv), NotRegular);
    }

    TEST_CASE("abelian sets have zero holonomy action") {
        for (int n : {4, 6}) {
            GroupTable G = builtin_zn(n);
            AdSet C = validate_ad_set(G, {1, n - 1});
            TwoFormSpace sp = build_omega2(C);
            std::vector<Connection> conns = {oracle::zero_connection(sp),
                                             oracle::maurer_cartan_connection(sp)};
            Connection fancy = oracle::zero_connection(sp);
            for (std::size_t iw = 0; iw < 2; ++iw)
                for (std::size_t ic = 0; ic < 2; ++ic)
                    for (std::size_t x = 0; x < sp.order(); ++x)
                        fancy.comps[iw][ic].values[x] =
                            Rational(static_cast<long>((3 * iw + 5 * ic + x) % 7) - 3);
            conns.push_back(fancy);
            for (const auto& conn : conns) {
                Curvature curv = curvature(sp, conn);
                for (std::size_t ia = 0; ia < 2; ++ia)
                    CHECK(riemann_on_basis(sp, curv, ia).is_zero());
                if (sp.dim2 > 0)
                    CHECK(ricci(sp, curv, lift_projection(sp)).is_zero());
            }
        }
    }
}

TEST_SUITE("ricci") {
    TEST_CASE("lift splittings") {
        S3Fixture fx;
        Lift proj = lift_projection(fx.space);
        CHECK(fx.space.wedge_matrix * proj.mat == Matrix::identity(4));
        // the induced idempotent on the pair space
        Matrix pi = proj.mat * fx.space.wedge_matrix;
        CHECK(pi * pi == pi);

        Lift wor = lift_woronowicz(fx.space);
        CHECK(fx.space.wedge_matrix * wor.mat != Matrix::identity(4));
        // columns are (id - psi) applied to the basis representatives
        Matrix psi = psi_matrix(fx.C);
        for (std::size_t k = 0; k < 4; ++k) {
            auto [a, b] = fx.space.basis_pairs[k];
            std::size_t pcol = fx.space.pair_index(
                static_cast<std::size_t>(fx.C.index_of(a)),
                static_cast<std::size_t>(fx.C.index_of(b)));
            for (std::size_t i = 0; i < 9; ++i) {
                Rational want = (i == pcol ? Rational(1) : Rational(0)) - psi.at(i, pcol);
                CHECK(wor.mat.at(i, k) == want);
            }
        }
    }

    TEST_CASE("ricci of the levi-civita connection, both lifts") {
        S3Fixture fx;
        Connection lc = oracle::levi_civita_s3(fx.space);
        Curvature curv = curvature(fx.space, lc);

        OneOneTensor rw = ricci(fx.space, curv, lift_woronowicz(fx.space));
        OneOneTensor rp = ricci(fx.space, curv, lift_projection(fx.space));
        for (std::size_t b = 0; b < 3; ++b)
            for (std::size_t d = 0; d < 3; ++d) {
                CHECK(rw.comp[b][d] ==
                      GroupFunction::constant(6, b == d ? Rational(-2) : Rational(1)));
                CHECK(rp.comp[b][d] ==
                      GroupFunction::constant(
                          6, b == d ? Rational(-4, 3) : Rational(2, 3)));
            }
        // both equal mu (theta x theta - g) with the metric components 3 delta
        CHECK(scalar_curvature(fx.space, fx.cf, rw) == GroupFunction::constant(6, -2));
        CHECK(scalar_curvature(fx.space, fx.cf, rp) ==
              GroupFunction::constant(6, Rational(-4, 3)));
    }
}

TEST_SUITE("nabla") {
    TEST_CASE("covariant derivative of the frame at the levi-civita point") {
        S3Fixture fx;
        Connection lc = oracle::levi_civita_s3(fx.space);
        // nabla E_a = -E_a x E_a - E_b x E_c - E_c x E_b + (1/3) theta x theta
        // with (a, b, c) a relabeling of the three positions
        for (std::size_t a = 0; a < 3; ++a) {
            OneOneTensor got = covariant_derivative(fx.space, lc, unit_one_form(fx.space, a));
            std::size_t b = (a + 1) % 3, c = (a + 2) % 3;
            for (std::size_t p = 0; p < 3; ++p)
                for (std::size_t q = 0; q < 3; ++q) {
                    Rational want = Rational(1, 3);
                    if (p == a && q == a) want -= 1;
                    if (p == b && q == c) want -= 1;
                    if (p == c && q == b) want -= 1;
                    CHECK(got.comp[p][q] == GroupFunction::constant(6, want));
                }
            // wedging the output legs recovers the exterior derivative
            CHECK(wedge_contract(fx.space, got) == fx.space.dE[a]);
        }
    }

    TEST_CASE("metric compatibility in the skew sense") {
        S3Fixture fx;
        Connection lc = oracle::levi_civita_s3(fx.space);
        OneOneTensor hI = oracle::unit_cotensor(3, 6);
        OneOneTensor hK = metric_cotensor(fx.space, fx.cf);
        CHECK(metric_compat_defect(fx.space, lc, hI).is_zero());
        CHECK(metric_compat_defect(fx.space, lc, hK).is_zero());
        // the defect discriminates: the flat framing connection fails it
        Connection mc = oracle::maurer_cartan_connection(fx.space);
        CHECK(!metric_compat_defect(fx.space, mc, hI).is_zero());
    }

    TEST_CASE("one-sided derivative of the unit cotensor") {
        S3Fixture fx;
        Connection lc = oracle::levi_civita_s3(fx.space);
        OneOneTensor hI = oracle::unit_cotensor(3, 6);
        OneOneOneTensor got = nabla_on_metric(fx.space, lc, hI);
        Rational mass = 0;
        for (std::size_t p = 0; p < 3; ++p)
            for (std::size_t q = 0; q < 3; ++q)
                for (std::size_t r = 0; r < 3; ++r) {
                    bool all_equal = (p == q && q == r);
                    bool all_distinct = (p != q && q != r && p != r);
                    Rational want = Rational(2, 3);
                    if (all_equal) want -= 2;
                    if (all_distinct) want -= 2;
                    CHECK(got.comp[p][q][r] == GroupFunction::constant(6, want));
                    mass += want;
                }
        CHECK(mass == 0);
        // linearity in the cotensor
        OneOneOneTensor scaled =
            nabla_on_metric(fx.space, lc, metric_cotensor(fx.space, fx.cf));
        for (std::size_t p = 0; p < 3; ++p)
            for (std::size_t q = 0; q < 3; ++q)
                for (std::size_t r = 0; r < 3; ++r)
                    CHECK(scaled.comp[p][q][r] == got.comp[p][q][r] * Rational(3));
    }
}
