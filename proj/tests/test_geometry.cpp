#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "symmod/errors.hpp"
#include "symmod/geometry.hpp"
#include "symmod/rng.hpp"

using namespace symmod;
using C = std::complex<double>;

TEST_CASE("elementary coordinates of polydisc points") {
    std::vector<C> z{{0.25, 0}, {-1.0 / 3.0, 0}};
    std::vector<C> u = sym_coordinates(z);
    REQUIRE(u.size() == 2);
    CHECK(std::abs(u[0] - C(0.25 - 1.0 / 3.0, 0)) <= 1e-15);
    CHECK(std::abs(u[1] - C(-1.0 / 12.0, 0)) <= 1e-15);
    // invariant under relabeling the point within its orbit
    std::vector<C> swapped{z[1], z[0]};
    std::vector<C> u2 = sym_coordinates(swapped);
    CHECK(std::abs(u[0] - u2[0]) <= 1e-15);
    CHECK(std::abs(u[1] - u2[1]) <= 1e-15);

    std::vector<C> z3{{0.1, 0.2}, {-0.3, 0.1}, {0.05, -0.25}};
    std::vector<C> u3 = sym_coordinates(z3);
    CHECK(std::abs(u3[0] - (z3[0] + z3[1] + z3[2])) <= 1e-15);
    CHECK(std::abs(u3[2] - z3[0] * z3[1] * z3[2]) <= 1e-15);
}

TEST_CASE("gram values of normalized kernels") {
    // normalized kernels evaluate to 1 at the origin
    SectionEvaluator sym(normalize_at_zero(kernel_Gn_monomial(Rat(1), 2, 8)));
    CHECK(sym.gram({C(0, 0), C(0, 0)}) == doctest::Approx(1.0).epsilon(1e-12));
    SectionEvaluator berg(normalize_at_zero(kernel_Bergman_Gn(Rat(2), 2, 8)));
    CHECK(berg.gram({C(0, 0), C(0, 0)}) == doctest::Approx(1.0).epsilon(1e-12));

    // disc with weight 2 at u = 1/2: (1 - 1/4)^{-2} = 16/9
    SectionEvaluator disc(kernel_Gn_monomial(Rat(2), 1, 40));
    CHECK(std::abs(disc.gram({C(0.5, 0)}) - 16.0 / 9.0) <= 1e-6);

    // positivity at generic complex points
    RandomSource rng(31);
    for (int t = 0; t < 3; ++t) {
        std::vector<C> u = sym_coordinates(rng.complex_point_distinct(2, 0.5));
        CHECK(sym.gram(u) > 0);
        CHECK(berg.gram(u) > 0);
    }
}

TEST_CASE("non-positive diagonal raises the truncation error") {
    KernelSeries bad;
    bad.kind = "sym";
    bad.n = 1;
    bad.weight = 1;
    bad.degree_cap = 0;
    KernelTerm t;
    t.label = {0};
    t.coef = Rat(-1);
    t.factor = SparsePoly::constant(1, 1);
    bad.terms.push_back(t);
    SectionEvaluator ev(bad);
    CHECK_THROWS_AS(ev.gram({C(0.1, 0)}), TruncationError);
}

TEST_CASE("disc curvature matches the closed form") {
    // at the center: curvature = -lambda
    SectionEvaluator ev2(kernel_Gn_monomial(Rat(2), 1, 60));
    auto c0 = ev2.curvature({C(0, 0)}, 1e-3);
    CHECK(std::abs(c0.matrix(0, 0).real() + 2.0) <= 1e-4);
    CHECK(std::abs(c0.matrix(0, 0).imag()) <= 1e-6);
    CHECK(c0.hermiticity_dev <= 1e-6);

    for (int lambda = 1; lambda <= 3; ++lambda) {
        SectionEvaluator ev(kernel_Gn_monomial(Rat(lambda), 1, 60));
        for (C u : {C(0.1, 0), C(-0.45, 0), C(0.2, 0.5), C(0.6, 0), C(0.3, -0.4)}) {
            double r2 = std::norm(u);
            REQUIRE(r2 <= 0.36 + 1e-12);
            double expect = -lambda / ((1 - r2) * (1 - r2));
            auto c = ev.curvature({u}, 1e-3);
            CHECK(std::abs(c.matrix(0, 0).real() - expect) <= 1e-4 * std::abs(expect));
            CHECK(std::abs(c.matrix(0, 0).imag()) <= 1e-4 * std::abs(expect));
            // step-halving stability, relative to the entry size
            CHECK(c.richardson_err <= 1e-4 * std::abs(expect));
        }
    }
}

TEST_CASE("on the disc the two kernels coincide exactly") {
    for (Rat lambda : {Rat(1), Rat(5, 2)}) {
        KernelSeries kg = kernel_Gn_monomial(lambda, 1, 12);
        KernelSeries bg = kernel_Bergman_Gn(lambda, 1, 12);
        REQUIRE(kg.terms.size() == bg.terms.size());
        for (std::size_t i = 0; i < kg.terms.size(); ++i) {
            CHECK(kg.terms[i].coef == bg.terms[i].coef);
            CHECK(kg.terms[i].factor == bg.terms[i].factor);
        }
        CurvatureComparison cmp =
            compare_curvatures(1, lambda, {{C(0.2, 0.1)}, {C(-0.4, 0)}}, 1e-3, 12);
        CHECK(cmp.max_diff == 0.0);
        CHECK(cmp.verdict == "indistinguishable");
    }
}

TEST_CASE("the symmetric and alternating kernels have different curvature for n = 2") {
    // fixed witness point s((1/4, -1/3))
    SectionEvaluator sym(normalize_at_zero(kernel_Gn_monomial(Rat(2), 2, 12)));
    SectionEvaluator berg(normalize_at_zero(kernel_Bergman_Gn(Rat(2), 2, 12)));
    std::vector<C> u = sym_coordinates({C(0.25, 0), C(-1.0 / 3.0, 0)});
    auto a = sym.curvature(u, 1e-3);
    auto b = berg.curvature(u, 1e-3);
    double diff = 0;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) diff = std::max(diff, std::abs(a.matrix(j, k) - b.matrix(j, k)));
    CHECK(diff > 1e-3);
    CHECK(a.hermiticity_dev <= 1e-6);
    CHECK(b.hermiticity_dev <= 1e-6);

    RandomSource rng(5150);
    std::vector<std::vector<C>> pts;
    for (int i = 0; i < 3; ++i) pts.push_back(rng.complex_point_distinct(2, 0.55));
    CurvatureComparison cmp = compare_curvatures(2, Rat(1), pts, 1e-3, 12);
    CHECK(cmp.verdict == "distinguished");
    CHECK(cmp.max_diff > 10 * cmp.richardson_err);
    CHECK(cmp.hermiticity_dev <= 1e-6);
}

TEST_CASE("three-variable comparison still distinguishes the kernels") {
    RandomSource rng(61);
    std::vector<std::vector<C>> pts;
    for (int i = 0; i < 2; ++i) pts.push_back(rng.complex_point_distinct(3, 0.45));
    CurvatureComparison cmp = compare_curvatures(3, Rat(2), pts, 1e-3, 6);
    CHECK(cmp.verdict == "distinguished");
    CHECK(cmp.hermiticity_dev <= 1e-6);
}

TEST_CASE("curvature depends only on the orbit of the base point") {
    SectionEvaluator sym(normalize_at_zero(kernel_Gn_monomial(Rat(1), 2, 12)));
    std::vector<C> z{C(0.3, 0.1), C(-0.2, 0.25)};
    std::vector<C> zs{z[1], z[0]};
    auto a = sym.curvature(sym_coordinates(z), 1e-3);
    auto b = sym.curvature(sym_coordinates(zs), 1e-3);
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
            CHECK(std::abs(a.matrix(j, k) - b.matrix(j, k)) <= 1e-12);
}

TEST_CASE("geometry defaults and input validation") {
    CHECK(default_geometry_degree(1) == 12);
    CHECK(default_geometry_degree(2) == 12);
    CHECK(default_geometry_degree(3) == 8);
    CHECK(default_geometry_degree(5) == 8);
    SectionEvaluator ev(kernel_Gn_monomial(Rat(1), 2, 6));
    CHECK_THROWS_AS(ev.gram({C(0, 0)}), std::invalid_argument);
    CHECK_THROWS_AS(ev.curvature({C(0, 0), C(0, 0)}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(compare_curvatures(2, Rat(1), {}, 1e-3, 8), std::invalid_argument);
    CHECK_THROWS_AS(compare_curvatures(2, Rat(1), {{C(0, 0)}}, 1e-3, 8),
                    std::invalid_argument);
}
