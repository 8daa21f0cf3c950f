#pragma once

#include <complex>
#include <string>
#include <vector>

#include "symmod/kernels.hpp"
#include "symmod/matrix.hpp"

namespace symmod {

// Evaluates the diagonal of a kernel series and Wirtinger derivatives of its
// logarithm at complex points, with coefficients lowered to double once.
class SectionEvaluator {
  public:
    explicit SectionEvaluator(const KernelSeries& k);

    int n() const { return n_; }

    // ||gamma(u)||^2 = sum_t c_t |f_t(u)|^2; insufficient truncation if <= 0.
    double gram(const std::vector<std::complex<double>>& u) const;

    // Curvature matrix -d d-bar log gram at u, via central differences with
    // step h on the real coordinates; the reported matrix uses step h/2 and
    // richardson_err is the max entrywise change between steps h and h/2.
    struct Curvature {
        Mat<std::complex<double>> matrix;
        double richardson_err = 0;
        double hermiticity_dev = 0;
    };
    Curvature curvature(const std::vector<std::complex<double>>& u, double h) const;

  private:
    struct Term {
        double coef;
        std::vector<std::pair<std::vector<int>, double>> monomials;
    };
    int n_;
    std::vector<Term> terms_;

    Mat<std::complex<double>> curvature_once(const std::vector<std::complex<double>>& u,
                                             double h) const;
};

// Default truncation degree for curvature work: 12 for n <= 2, 8 otherwise.
int default_geometry_degree(int n);

struct CurvatureComparison {
    int n = 0;
    Rat lambda;
    std::vector<std::vector<std::complex<double>>> z_points;  // polydisc points
    double max_diff = 0;        // max entrywise curvature difference over points
    double richardson_err = 0;  // max finite-difference error estimate
    double hermiticity_dev = 0;
    std::string verdict;        // "distinguished" | "indistinguishable"
};

// Compares curvature of the symmetrized weighted kernel and the Bergman kernel
// (same weight) at u = s(z) for each supplied z; the kernels are distinguished
// when some difference exceeds 10x the finite-difference error estimate.
CurvatureComparison compare_curvatures(int n, const Rat& lambda,
                                       const std::vector<std::vector<std::complex<double>>>& zs,
                                       double h, int d, Exec ex = Exec::OpenMP);

// Elementary symmetric coordinates of a polydisc point: u_k = s_k(z).
std::vector<std::complex<double>> sym_coordinates(const std::vector<std::complex<double>>& z);

} // namespace symmod
