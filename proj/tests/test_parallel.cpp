#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <vector>

#include "symmod/exec.hpp"
#include "symmod/geometry.hpp"
#include "symmod/hilbmod.hpp"
#include "symmod/kernels.hpp"
#include "symmod/permgroup.hpp"
#include "symmod/rng.hpp"
#include "symmod/symfunc.hpp"

using namespace symmod;

TEST_CASE("par_for covers every index exactly once in both modes") {
    for (Exec ex : {Exec::Serial, Exec::OpenMP}) {
        std::vector<std::atomic<int>> hits(257);
        for (auto& h : hits) h = 0;
        par_for(hits.size(), ex, [&](std::size_t i) { ++hits[i]; });
        for (auto& h : hits) CHECK(h.load() == 1);
    }
    CHECK(max_threads() >= 1);
}

TEST_CASE("permanent results are identical across execution modes") {
    RandomSource rng(314159);
    for (int side : {3, 6, 9}) {
        std::vector<std::vector<Rat>> m(side, std::vector<Rat>(side));
        for (auto& row : m)
            for (auto& x : row) x = rng.proper_rational();
        CHECK(permanent(m, Rat(0), Exec::Serial) == permanent(m, Rat(0), Exec::OpenMP));
    }
    // floating entries: chunked reduction must combine in a fixed order
    std::vector<std::vector<double>> f(8, std::vector<double>(8));
    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> dist(-1, 1);
    for (auto& row : f)
        for (auto& x : row) x = dist(gen);
    double a = permanent(f, 0.0, Exec::Serial);
    double b = permanent(f, 0.0, Exec::OpenMP);
    double c = permanent(f, 0.0, Exec::OpenMP);
    CHECK(b == c);  // deterministic parallel result
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
}

TEST_CASE("orthogonality scans agree across execution modes") {
    IrrepTable<Rat> r31 = irrep_seminormal(4, Partition({3, 1}));
    IrrepTable<Rat> r22 = irrep_seminormal(4, Partition({2, 2}));
    OrthReport a = verify_orthogonality(r31, r22, Exec::Serial);
    OrthReport b = verify_orthogonality(r31, r22, Exec::OpenMP);
    CHECK(a.pass == b.pass);
    CHECK(a.max_deviation == b.max_deviation);
    OrthReport c = verify_orthogonality(irrep_orthogonal(4, Partition({3, 1})),
                                        irrep_orthogonal(4, Partition({3, 1})), 1e-10,
                                        Exec::Serial);
    OrthReport d = verify_orthogonality(irrep_orthogonal(4, Partition({3, 1})),
                                        irrep_orthogonal(4, Partition({3, 1})), 1e-10,
                                        Exec::OpenMP);
    CHECK(c.pass);
    CHECK(c.max_deviation == d.max_deviation);
}

TEST_CASE("kernel construction is identical across execution modes") {
    KernelSeries a = kernel_Gn_monomial(Rat(2), 3, 4, Exec::Serial);
    KernelSeries b = kernel_Gn_monomial(Rat(2), 3, 4, Exec::OpenMP);
    REQUIRE(a.terms.size() == b.terms.size());
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        CHECK(a.terms[i].label == b.terms[i].label);
        CHECK(a.terms[i].coef == b.terms[i].coef);
        CHECK(a.terms[i].factor == b.terms[i].factor);
    }
    KernelSeries c = kernel_Bergman_Gn(Rat(5, 2), 3, 5, Exec::Serial);
    KernelSeries d = kernel_Bergman_Gn(Rat(5, 2), 3, 5, Exec::OpenMP);
    REQUIRE(c.terms.size() == d.terms.size());
    for (std::size_t i = 0; i < c.terms.size(); ++i) {
        CHECK(c.terms[i].coef == d.terms[i].coef);
        CHECK(c.terms[i].factor == d.terms[i].factor);
    }
    PermanentCrosscheck x = crosscheck_permanent(Rat(3, 2), 3, 3, Exec::Serial);
    PermanentCrosscheck y = crosscheck_permanent(Rat(3, 2), 3, 3, Exec::OpenMP);
    CHECK(x.match);
    CHECK(y.match);
}

TEST_CASE("module checks agree across execution modes") {
    TruncatedModule mod = build_module(3, 3, Rat(2));
    IrrepTable<Rat> rep = irrep_seminormal(3, Partition({2, 1}));
    CHECK(projection_matrix<Rat>(mod, rep, 0, 1, Exec::Serial) ==
          projection_matrix<Rat>(mod, rep, 0, 1, Exec::OpenMP));
    CHECK(isotypic_projection(mod, Partition({2, 1}), Exec::Serial) ==
          isotypic_projection(mod, Partition({2, 1}), Exec::OpenMP));

    CheckReport a = verify_projection_algebra(mod, IrrepForm::Seminormal, 1e-10, Exec::Serial);
    CheckReport b = verify_projection_algebra(mod, IrrepForm::Seminormal, 1e-10, Exec::OpenMP);
    CHECK(a.pass);
    CHECK(a.max_deviation == b.max_deviation);
    CheckReport c = verify_reducing(mod, IrrepForm::Orthogonal, 1e-10, Exec::Serial);
    CheckReport d = verify_reducing(mod, IrrepForm::Orthogonal, 1e-10, Exec::OpenMP);
    CHECK(c.pass);
    CHECK(c.max_deviation == d.max_deviation);

    TruncatedModule mod2 = build_module(2, 6, Rat(1));
    std::vector<Rat> w{Rat(1, 2), Rat(1, 3)};
    JointKernelResult ja = joint_kernel(mod2, w, Exec::Serial);
    JointKernelResult jb = joint_kernel(mod2, w, Exec::OpenMP);
    CHECK(ja.rank == jb.rank);
    CHECK(ja.gram == jb.gram);
    CHECK(isotype_dimension(mod2, Partition({2}), w, Exec::Serial) ==
          isotype_dimension(mod2, Partition({2}), w, Exec::OpenMP));
}

TEST_CASE("curvature comparison reports are identical across execution modes") {
    RandomSource rng(2718);
    std::vector<std::vector<std::complex<double>>> pts{rng.complex_point_distinct(2, 0.5)};
    CurvatureComparison a = compare_curvatures(2, Rat(1), pts, 1e-3, 10, Exec::Serial);
    CurvatureComparison b = compare_curvatures(2, Rat(1), pts, 1e-3, 10, Exec::OpenMP);
    CHECK(a.verdict == b.verdict);
    CHECK(a.max_diff == b.max_diff);
    CHECK(a.richardson_err == b.richardson_err);
    CHECK(a.hermiticity_dev == b.hermiticity_dev);
}

TEST_CASE("seeded data sources are reproducible") {
    RandomSource a(424242), b(424242);
    for (int i = 0; i < 20; ++i) CHECK(a.proper_rational() == b.proper_rational());
    CHECK(a.rational_point_distinct(3) == b.rational_point_distinct(3));
    CHECK(a.weight() == b.weight());
    auto pa = a.complex_point_distinct(2, 0.5);
    auto pb = b.complex_point_distinct(2, 0.5);
    REQUIRE(pa.size() == pb.size());
    for (std::size_t i = 0; i < pa.size(); ++i) CHECK(pa[i] == pb[i]);

    // properties of the generated data
    RandomSource r(7);
    for (int i = 0; i < 50; ++i) {
        Rat x = r.proper_rational();
        Rat ax = x < 0 ? Rat(-x) : x;
        CHECK(ax < 1);
    }
    for (int i = 0; i < 10; ++i) {
        auto pt = r.rational_point_distinct(4);
        for (std::size_t u = 0; u < pt.size(); ++u)
            for (std::size_t v = u + 1; v < pt.size(); ++v) CHECK(!(pt[u] == pt[v]));
        Rat wt = r.weight();
        CHECK(wt > 0);
        CHECK(wt <= 4);
    }
    ArtinCheckResult r1 = artin_determinant_check(3, 2, 777);
    ArtinCheckResult r2 = artin_determinant_check(3, 2, 777);
    CHECK(r1.ratios == r2.ratios);
}
