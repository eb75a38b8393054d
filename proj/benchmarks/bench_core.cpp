#include <benchmark/benchmark.h>

#include "ncgeo/dirac.hpp"
#include "ncgeo/finset.hpp"
#include "ncgeo/riemannian.hpp"

using namespace ncgeo;

namespace {

AdSet first_class_of_size(const GroupTable& G, std::size_t size) {
    for (const auto& cls : G.conjugacy_classes())
        if (cls.size() == size) return validate_ad_set(G, cls);
    throw GroupError("no class of the requested size");
}

Connection levi_civita(const TwoFormSpace& space, const Coframing& cf) {
    AffineModuli both = intersect_moduli(solve_torsion_free(space),
                                         solve_cotorsion_free(space, cf));
    RegularSearch rs = find_regular(space, both, 4);
    return connection_from_vector(space, rs.points.at(0));
}

void bm_build_omega2_s4(benchmark::State& state) {
    GroupTable G = builtin_s4();
    AdSet C = first_class_of_size(G, 6);
    for (auto _ : state) {
        TwoFormSpace space = build_omega2(C);
        benchmark::DoNotOptimize(space.dim2);
    }
}
BENCHMARK(bm_build_omega2_s4);

void bm_spin_moduli_s3(benchmark::State& state) {
    GroupTable G = builtin_s3();
    AdSet C = first_class_of_size(G, 3);
    TwoFormSpace space = build_omega2(C);
    Coframing cf = killing_coframing(space);
    for (auto _ : state) {
        Connection conn = levi_civita(space, cf);
        benchmark::DoNotOptimize(&conn);
    }
}
BENCHMARK(bm_spin_moduli_s3);

void bm_curvature_ricci_s3(benchmark::State& state) {
    GroupTable G = builtin_s3();
    AdSet C = first_class_of_size(G, 3);
    TwoFormSpace space = build_omega2(C);
    Coframing cf = killing_coframing(space);
    Connection conn = levi_civita(space, cf);
    Lift lift = lift_projection(space);
    for (auto _ : state) {
        Curvature curv = curvature(space, conn);
        OneOneTensor ric = ricci(space, curv, lift);
        benchmark::DoNotOptimize(&ric);
    }
}
BENCHMARK(bm_curvature_ricci_s3);

void bm_dirac_assembly_s3(benchmark::State& state) {
    GroupTable G = builtin_s3();
    AdSet C = first_class_of_size(G, 3);
    TwoFormSpace space = build_omega2(C);
    Coframing cf = killing_coframing(space);
    Connection conn = levi_civita(space, cf);
    Representation W = s3_two_dim_rep(G);
    BraidedGammas bg = tautological_gammas(C, W);
    for (auto _ : state) {
        Matrix D = dirac_matrix(space, conn, W, bg);
        benchmark::DoNotOptimize(&D);
    }
}
BENCHMARK(bm_dirac_assembly_s3);

void bm_spectrum_s3(benchmark::State& state) {
    GroupTable G = builtin_s3();
    AdSet C = first_class_of_size(G, 3);
    TwoFormSpace space = build_omega2(C);
    Coframing cf = killing_coframing(space);
    Connection conn = levi_civita(space, cf);
    Representation W = s3_two_dim_rep(G);
    BraidedGammas bg = tautological_gammas(C, W);
    Matrix D = dirac_matrix(space, conn, W, bg);
    for (auto _ : state) {
        Spectrum sp = spectrum(D, 30);
        benchmark::DoNotOptimize(&sp);
    }
}
BENCHMARK(bm_spectrum_s3);

void bm_finset_model_s3(benchmark::State& state) {
    GroupTable G = builtin_s3();
    AdSet C = first_class_of_size(G, 3);
    TwoFormSpace space = build_omega2(C);
    Lift lift = lift_projection(space);
    for (auto _ : state) {
        GroupFinsetModel m = finset_from_group(space, &lift);
        benchmark::DoNotOptimize(&m);
    }
}
BENCHMARK(bm_finset_model_s3);

}  // namespace

BENCHMARK_MAIN();
