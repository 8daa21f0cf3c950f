#pragma once

#include <map>
#include <string>
#include <vector>

#include "symmod/exec.hpp"
#include "symmod/matrix.hpp"
#include "symmod/permgroup.hpp"
#include "symmod/rational.hpp"

namespace symmod {

// Degree-truncated weighted analytic module on the polydisc: monomial basis
// z^m, |m| <= d, with squared norms m!/(lambda)_m, plus the matrices of
// multiplication by each elementary symmetric polynomial.
struct TruncatedModule {
    int n = 0, d = 0;
    Rat lambda;
    std::vector<std::vector<int>> basis;   // (degree, then descending lex)
    std::map<std::vector<int>, int> index; // exponent -> basis position
    std::vector<Rat> norm_sq;              // ||z^m||^2 = m!/(lambda)_m
    std::vector<Rat> coef;                 // kernel coefficient (lambda)_m/m!

    struct MultOp {
        Mat<Rat> mat;                      // multiplication by s_k on the basis
        std::vector<char> lossfree;        // per source column: image stays in the basis
    };
    std::vector<MultOp> mult;              // index k-1 holds s_k

    int index_of(const std::vector<int>& m) const;  // -1 when absent
};

TruncatedModule build_module(int n, int d, const Rat& lambda);

// Matrix of P_p[i][j] f = (dim_p/n!) sum_sigma pi_p[j][i](sigma^{-1}) f(sigma^{-1}.z)
// on the monomial basis.  Exact for the rational (seminormal) model.
template <class S>
Mat<S> projection_matrix(const TruncatedModule& mod, const IrrepTable<S>& rep, int i, int j,
                         Exec ex = Exec::OpenMP);

// Full isotypic projection P_p = sum_i P_p[i][i], computed from characters only.
Mat<Rat> isotypic_projection(const TruncatedModule& mod, const Partition& p,
                             Exec ex = Exec::OpenMP);

struct CheckReport {
    std::string check;
    int n = 0, d = 0;
    std::string form;
    std::string max_deviation;
    bool pass = false;
};

// Full block algebra: P_p[i][j] P_q[l][m] = [p==q][j==l] P_p[i][m], completeness
// sum_p sum_i P_p[i][i] = id, and each diagonal block nonzero.  The orthogonal
// form additionally checks self-adjointness in the weighted inner product.
CheckReport verify_projection_algebra(const TruncatedModule& mod, IrrepForm form,
                                      double tol = 1e-10, Exec ex = Exec::OpenMP);

// Commutators [M_{s_k}, P_p[i][j]] vanish on columns whose image under s_k
// stays inside the truncation.
CheckReport verify_reducing(const TruncatedModule& mod, IrrepForm form, double tol = 1e-10,
                            Exec ex = Exec::OpenMP);

struct JointKernelResult {
    int rank = 0;
    Mat<Rat> gram;           // Gram of the n! kernel vectors at the orbit of w
};

// Span of {K(., sigma.w) : sigma in S_n} inside the truncation, via the exact
// rational Gram matrix.  Requires d >= n(n-1)/2 + 2 (and |w_i| < 1).
JointKernelResult joint_kernel(const TruncatedModule& mod, const std::vector<Rat>& w,
                               Exec ex = Exec::OpenMP);

// Rank of the Gram of {P_p K(., sigma.w)}; the isotype dimension at a generic point.
int isotype_dimension(const TruncatedModule& mod, const Partition& p, const std::vector<Rat>& w,
                      Exec ex = Exec::OpenMP);

// Monomials z^a with 0 <= a_i <= n-i, ordered by (degree, descending lex).
std::vector<std::vector<int>> artin_basis(int n);

struct ArtinCheckResult {
    int n = 0;
    std::vector<Rat> ratios;     // det / Delta^{n!/2} per sample point
    bool constant = false;       // all ratios equal and nonzero
    bool degree_ok = false;      // det scales as t^{(n!/2) C(n,2)}
    bool pass = false;
};

// Evaluates det((w_tau^a)) over the orbit of seeded random points and checks it
// is a fixed nonzero multiple of Delta(w)^{n!/2}.
ArtinCheckResult artin_determinant_check(int n, int trials, unsigned long seed);

} // namespace symmod
