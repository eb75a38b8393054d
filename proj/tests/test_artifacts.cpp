#include <doctest.h>

#include <cstdio>
#include <string>
#include <vector>

#include "ncgeo/json_io.hpp"
#include "oracles.hpp"

using namespace ncgeo;

namespace {

// a writer is deterministic when two calls agree byte for byte
template <typename F>
void check_stable(F&& emit) {
    std::string one = emit();
    std::string two = emit();
    CHECK(one == two);
    CHECK(!one.empty());
    CHECK(one.back() == '\n');
}

}  // namespace

TEST_SUITE("artifacts") {
    TEST_CASE("writers are deterministic") {
        oracle::S3Fixture fx;
        Connection lc = oracle::levi_civita_s3(fx.space);
        Curvature curv = curvature(fx.space, lc);
        Lift proj = lift_projection(fx.space);
        OneOneTensor ric = ricci(fx.space, curv, proj);
        GroupFunction sc = scalar_curvature(fx.space, fx.cf, ric);
        AffineModuli mt = solve_torsion_free(fx.space);
        KillingForm kf = killing_form(fx.C);
        Representation W = s3_two_dim_rep(fx.G);
        BraidedGammas g = tautological_gammas(fx.C, W);
        Matrix D = dirac_matrix(fx.space, lc, W, g);
        Spectrum sp = spectrum(D);

        check_stable([&] { return group_json(fx.G); });
        check_stable([&] { return calculus_json(fx.space); });
        check_stable([&] { return killing_json(fx.C, kf); });
        check_stable([&] { return moduli_json(fx.space, mt); });
        check_stable([&] { return connection_json(fx.space, lc); });
        check_stable([&] { return metric_json(fx.space, fx.cf); });
        check_stable([&] {
            return geometry_json(fx.space, curv, "projection", &ric, &sc);
        });
        check_stable([&] {
            return geometry_json(fx.space, curv, "", nullptr, nullptr);
        });
        check_stable([&] { return dirac_json(D, trace_d_squared(D)); });
        check_stable([&] { return spectrum_json(sp); });
    }

    TEST_CASE("group round trip through the table form") {
        GroupTable G = builtin_dihedral(4);
        GroupTable back = load_group_json(group_json(G));
        REQUIRE(back.order() == G.order());
        int n = static_cast<int>(G.order());
        for (int x = 0; x < n; ++x) {
            CHECK(back.label(x) == G.label(x));
            CHECK(back.inv(x) == G.inv(x));
            for (int y = 0; y < n; ++y) CHECK(back.mul(x, y) == G.mul(x, y));
        }
        CHECK(back.conjugacy_classes() == G.conjugacy_classes());
    }

    TEST_CASE("group from permutation generators") {
        std::string text = R"({
            "degree": 3,
            "permutation_generators": [[1, 0, 2], [0, 2, 1]],
            "generator_labels": ["u", "v"],
            "labels": ["e", "u", "v", "uv", "vu", "uvu"]
        })";
        GroupTable G = load_group_json(text);
        GroupTable want = builtin_s3();
        REQUIRE(G.order() == 6u);
        for (int x = 0; x < 6; ++x) {
            CHECK(G.label(x) == want.label(x));
            for (int y = 0; y < 6; ++y) CHECK(G.mul(x, y) == want.mul(x, y));
        }
    }

    TEST_CASE("connection round trip") {
        oracle::S3Fixture fx;
        Connection conn = oracle::zero_connection(fx.space);
        for (std::size_t iw = 0; iw < 3; ++iw)
            for (std::size_t ic = 0; ic < 3; ++ic)
                for (std::size_t x = 0; x < 6; ++x)
                    conn.comps[iw][ic].values[x] =
                        rat(static_cast<long>(iw * 7 + ic * 3 + x) - 5,
                            static_cast<long>(x + 1));
        Connection back = load_connection_json(fx.space, connection_json(fx.space, conn));
        CHECK(back.comps == conn.comps);
    }

    TEST_CASE("representation entries in all three spellings") {
        GroupTable G = builtin_s3();
        std::string text = R"({
            "dim": 2,
            "generators": {
                "u": [[0, 1], [1, 0]],
                "v": [["1/1", 0], [[-1, 1], -1]]
            }
        })";
        Representation W = load_rep_json(G, text);
        Representation want = s3_two_dim_rep(G);
        REQUIRE(W.dim == 2);
        for (int x = 0; x < 6; ++x) CHECK(W.of(x) == want.of(x));
    }

    TEST_CASE("metric, edge and gamma loaders") {
        Matrix h = load_metric_json(2, R"({"cotensor": [[1, "1/2"], [[1, 2], 1]]})");
        CHECK(h.at(0, 0) == 1);
        CHECK(h.at(0, 1) == rat(1, 2));
        CHECK(h.at(1, 0) == rat(1, 2));

        EdgeCalculus ec = load_edges_json(R"({"points": 3, "edges": [[0, 1], [1, 2]]})");
        CHECK(ec.npoints == 3);
        CHECK(ec.edges.size() == 2);
        CHECK(ec.triples.size() == 1);

        auto gs = load_gammas_json(
            2, R"({"dim": 2, "matrices": [[[0, 1], [0, 0]], [[0, 0], ["-1/3", 0]]]})");
        REQUIRE(gs.size() == 2);
        CHECK(gs[0].at(0, 1) == 1);
        CHECK(gs[1].at(1, 0) == rat(-1, 3));
    }

    TEST_CASE("file io") {
        std::string path = "/tmp/ncgeo_artifact_io.json";
        oracle::S3Fixture fx;
        std::string doc = group_json(fx.G);
        write_text_file(path, doc);
        CHECK(read_text_file(path) == doc);
        GroupTable back = load_group_file(path);
        CHECK(back.order() == 6u);
        std::remove(path.c_str());
        CHECK_THROWS_AS(read_text_file(path), BadInput);
    }

    TEST_CASE("malformed input") {
        oracle::S3Fixture fx;
        GroupTable& G = fx.G;

        CHECK_THROWS_AS(load_group_json("not json at all"), BadInput);
        CHECK_THROWS_AS(load_group_json("[1, 2, 3]"), BadInput);
        CHECK_THROWS_AS(load_group_json(R"({"degree": 3})"), BadInput);
        CHECK_THROWS_AS(load_group_json(R"({"multiplication_table": [[0, 1], [1]]})"),
                        BadInput);
        CHECK_THROWS_AS(
            load_group_json(
                R"({"multiplication_table": [[0, 1], [1, 0]], "labels": ["e"]})"),
            BadInput);

        CHECK_THROWS_AS(load_rep_json(G, R"({"dim": 0, "generators": {}})"), BadInput);
        CHECK_THROWS_AS(load_rep_json(G, R"({"dim": 2, "generators": {}})"), BadInput);
        CHECK_THROWS_AS(
            load_rep_json(G, R"({"dim": 2, "generators": {"zz": [[1, 0], [0, 1]]}})"),
            BadInput);
        CHECK_THROWS_AS(
            load_rep_json(G, R"({"dim": 2, "generators": {
                "u": [[0, 1], [1, 0]], "v": [[2, 0], [0, 2]]}})"),
            NotHomomorphism);

        CHECK_THROWS_AS(load_connection_json(
                            fx.space, R"({"basis": ["A[u]^v"], "coefficients": []})"),
                        BadInput);
        CHECK_THROWS_AS(
            load_connection_json(
                fx.space,
                R"({"basis": ["B[u]^v"], "coefficients": [[0, 0, 0, 0, 0, 0]]})"),
            BadInput);
        CHECK_THROWS_AS(
            load_connection_json(
                fx.space,
                R"({"basis": ["A[e]^v"], "coefficients": [[0, 0, 0, 0, 0, 0]]})"),
            BadInput);
        CHECK_THROWS_AS(
            load_connection_json(
                fx.space, R"({"basis": ["A[u]^v"], "coefficients": [[0, 0]]})"),
            BadInput);

        CHECK_THROWS_AS(load_metric_json(3, R"({"cotensor": [[1, 0], [0, 1]]})"),
                        BadInput);
        CHECK_THROWS_AS(load_metric_json(2, R"({"cotensor": [[1, [1, 0]], [0, 1]]})"),
                        BadInput);
        CHECK_THROWS_AS(load_metric_json(2, R"({"cotensor": [[1, "1/0"], [0, 1]]})"),
                        BadInput);

        CHECK_THROWS_AS(load_edges_json(R"({"points": 2, "edges": [[0]]})"), BadInput);
        CHECK_THROWS_AS(load_edges_json(R"({"points": 2, "edges": [[0, 0]]})"),
                        BadInput);
        CHECK_THROWS_AS(load_edges_json(R"({"points": 2, "edges": [[0, 7]]})"),
                        BadInput);

        CHECK_THROWS_AS(
            load_gammas_json(3, R"({"dim": 2, "matrices": [[[0, 0], [0, 0]]]})"),
            BadInput);
        CHECK_THROWS_AS(load_gammas_json(1, R"({"dim": 2, "matrices": [[[0, 0]]]})"),
                        BadInput);
    }
}
