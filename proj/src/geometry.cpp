#include "symmod/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "symmod/errors.hpp"
#include "symmod/symfunc.hpp"

namespace symmod {

SectionEvaluator::SectionEvaluator(const KernelSeries& k) : n_(k.n) {
    for (const KernelTerm& t : k.terms) {
        Term term;
        term.coef = to_double(t.coef);
        for (const auto& [exp, c] : t.factor.terms()) term.monomials.emplace_back(exp, to_double(c));
        terms_.push_back(std::move(term));
    }
}

double SectionEvaluator::gram(const std::vector<std::complex<double>>& u) const {
    if (static_cast<int>(u.size()) != n_)
        throw std::invalid_argument("evaluation point dimension mismatch");
    double total = 0;
    for (const Term& t : terms_) {
        std::complex<double> f = 0;
        for (const auto& [exp, c] : t.monomials) {
            std::complex<double> mono = c;
            for (int i = 0; i < n_; ++i)
                for (int e = 0; e < exp[i]; ++e) mono *= u[i];
            f += mono;
        }
        total += t.coef * std::norm(f);
    }
    if (total <= 0)
        throw TruncationError("kernel diagonal is non-positive at the requested point");
    return total;
}

Mat<std::complex<double>> SectionEvaluator::curvature_once(
    const std::vector<std::complex<double>>& u, double h) const {
    // phi(x) = log gram over the 2n real coordinates (Re u_1, Im u_1, ...).
    int m = 2 * n_;
    auto phi = [&](const std::vector<double>& x) {
        std::vector<std::complex<double>> p(n_);
        for (int i = 0; i < n_; ++i) p[i] = {x[2 * i], x[2 * i + 1]};
        return std::log(gram(p));
    };
    std::vector<double> x0(m);
    for (int i = 0; i < n_; ++i) {
        x0[2 * i] = u[i].real();
        x0[2 * i + 1] = u[i].imag();
    }
    double phi0 = phi(x0);
    // real Hessian by central differences
    Mat<double> hess(m, m);
    for (int a = 0; a < m; ++a) {
        std::vector<double> xp = x0, xm = x0;
        xp[a] += h;
        xm[a] -= h;
        hess(a, a) = (phi(xp) - 2 * phi0 + phi(xm)) / (h * h);
        for (int b = a + 1; b < m; ++b) {
            std::vector<double> xpp = x0, xpm = x0, xmp = x0, xmm = x0;
            xpp[a] += h;
            xpp[b] += h;
            xpm[a] += h;
            xpm[b] -= h;
            xmp[a] -= h;
            xmp[b] += h;
            xmm[a] -= h;
            xmm[b] -= h;
            double v = (phi(xpp) - phi(xpm) - phi(xmp) + phi(xmm)) / (4 * h * h);
            hess(a, b) = v;
            hess(b, a) = v;
        }
    }
    // Wirtinger combination: d_j dbar_k phi =
    //   1/4 [ H_{x_j x_k} + H_{y_j y_k} + i (H_{x_j y_k} - H_{y_j x_k}) ]
    Mat<std::complex<double>> curv(n_, n_);
    for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k) {
            double re = 0.25 * (hess(2 * j, 2 * k) + hess(2 * j + 1, 2 * k + 1));
            double im = 0.25 * (hess(2 * j, 2 * k + 1) - hess(2 * j + 1, 2 * k));
            curv(j, k) = -std::complex<double>(re, im);
        }
    return curv;
}

SectionEvaluator::Curvature SectionEvaluator::curvature(const std::vector<std::complex<double>>& u,
                                                        double h) const {
    if (h <= 0) throw std::invalid_argument("step must be positive");
    Curvature res;
    Mat<std::complex<double>> coarse = curvature_once(u, h);
    Mat<std::complex<double>> fine = curvature_once(u, h / 2);
    double err = 0, herm = 0;
    for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k) {
            err = std::max(err, std::abs(coarse(j, k) - fine(j, k)));
            herm = std::max(herm, std::abs(fine(j, k) - std::conj(fine(k, j))));
        }
    res.matrix = std::move(fine);
    res.richardson_err = err;
    res.hermiticity_dev = herm;
    return res;
}

int default_geometry_degree(int n) { return n <= 2 ? 12 : 8; }

std::vector<std::complex<double>> sym_coordinates(const std::vector<std::complex<double>>& z) {
    int n = static_cast<int>(z.size());
    std::vector<std::complex<double>> u(n);
    // Newton-free direct expansion: coefficients of prod (1 + z_i t)
    std::vector<std::complex<double>> coef(n + 1, 0.0);
    coef[0] = 1.0;
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k >= 1; --k) coef[k] += z[i] * coef[k - 1];
    for (int k = 1; k <= n; ++k) u[k - 1] = coef[k];
    return u;
}

CurvatureComparison compare_curvatures(int n, const Rat& lambda,
                                       const std::vector<std::vector<std::complex<double>>>& zs,
                                       double h, int d, Exec ex) {
    if (zs.empty()) throw std::invalid_argument("need at least one evaluation point");
    CurvatureComparison cmp;
    cmp.n = n;
    cmp.lambda = lambda;
    cmp.z_points = zs;
    SectionEvaluator sym_eval(normalize_at_zero(kernel_Gn_monomial(lambda, n, d, ex)));
    SectionEvaluator berg_eval(normalize_at_zero(kernel_Bergman_Gn(lambda, n, d, ex)));
    bool distinguished = false;
    for (const auto& z : zs) {
        if (static_cast<int>(z.size()) != n)
            throw std::invalid_argument("evaluation point dimension mismatch");
        std::vector<std::complex<double>> u = sym_coordinates(z);
        SectionEvaluator::Curvature a = sym_eval.curvature(u, h);
        SectionEvaluator::Curvature b = berg_eval.curvature(u, h);
        double diff = 0;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                diff = std::max(diff, std::abs(a.matrix(j, k) - b.matrix(j, k)));
        double err = std::max(a.richardson_err, b.richardson_err);
        cmp.max_diff = std::max(cmp.max_diff, diff);
        cmp.richardson_err = std::max(cmp.richardson_err, err);
        cmp.hermiticity_dev =
            std::max({cmp.hermiticity_dev, a.hermiticity_dev, b.hermiticity_dev});
        if (diff > 10 * err) distinguished = true;
    }
    cmp.verdict = distinguished ? "distinguished" : "indistinguishable";
    return cmp;
}

} // namespace symmod
