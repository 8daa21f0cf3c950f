#pragma once

#include <complex>
#include <string>
#include <vector>

#include "symmod/exec.hpp"
#include "symmod/partition.hpp"
#include "symmod/rational.hpp"
#include "symmod/sparsepoly.hpp"

namespace symmod {

// Coordinate system for kernel factors: Z = polydisc variables z_1..z_n,
// U = elementary-symmetric coordinates u_1..u_n on the symmetrized domain.
enum class Coord { Z, U };

struct KernelTerm {
    std::vector<int> label;  // exponent orbit representative, or padded partition
    Rat coef;                // positive series coefficient
    SparsePoly factor;       // polynomial factor f_t; the term is coef * f_t(x) conj(f_t(y))
};

struct KernelSeries {
    std::string kind;  // "polydisc" | "sym" | "K_Gn" | "B_Gn"
    int n = 0;
    Rat weight;        // lambda or mu
    int degree_cap = 0;
    Coord coord = Coord::Z;
    std::vector<KernelTerm> terms;
};

// Unsymmetrized weighted kernel on the polydisc: one monomial term per
// exponent m with |m| <= d, coefficient (lambda)_m / m!.
KernelSeries kernel_polydisc(const Rat& lambda, int n, int d);

// Symmetrized kernel (1/n!) per((1 - z_j w_k)^{-lambda}) expanded over
// exponent orbits: coefficient alpha! (lambda)_m / (m! n!) on M_m.
KernelSeries kernel_sym(const Rat& lambda, int n, int d);

// Same series with each orbit factor rewritten in elementary coordinates.
KernelSeries kernel_Gn_monomial(const Rat& lambda, int n, int d, Exec ex = Exec::OpenMP);

// Weighted Bergman kernel of the symmetrized domain: Schur-factor expansion
// with coefficients gamma_p^2 = (mu)_{p+delta} / (p+delta)!.
KernelSeries kernel_Bergman_Gn(const Rat& mu, int n, int d, Exec ex = Exec::OpenMP);

// Divides all coefficients by the kernel's value at the origin pair.
KernelSeries normalize_at_zero(const KernelSeries& k);

// K(x, y) at complex points (coefficients converted to double).
std::complex<double> eval_kernel(const KernelSeries& k, const std::vector<std::complex<double>>& x,
                                 const std::vector<std::complex<double>>& y);

// Exact evaluation at real rational points.
Rat eval_kernel_exact(const KernelSeries& k, const std::vector<Rat>& x, const std::vector<Rat>& y);

// Diagonal coefficient of u_1^q (x) conj(u_1^q) in a U-coordinate series.
Rat extract_e1_coefficient(const KernelSeries& k, int q);

// Recomputes the symmetrized kernel through the permanent of the matrix of
// truncated geometric series and compares with kernel_sym term by term.
struct PermanentCrosscheck {
    int n = 0, d = 0;
    Rat lambda;
    bool match = false;
};
PermanentCrosscheck crosscheck_permanent(const Rat& lambda, int n, int d, Exec ex = Exec::OpenMP);

// First- and second-coefficient comparison between the symmetrized weighted
// kernel (weight lambda) and the normalized Bergman kernel (weight mu):
// the q=1 coefficients agree iff lambda = mu + n - 1, and adding the q=2
// equation forces n = 1.
struct InequivalenceWitness {
    int n = 0;
    Rat lambda;
    Rat coef_sym_q1;        // lambda/n
    Rat coef_bergman_q1;    // (mu+n-1)/n at mu = lambda
    bool differ = false;    // q=1 coefficients differ (same weight both sides)
    Rat mu_from_q1;         // mu solving the q=1 equation: lambda - n + 1
    bool mu_admissible = false;  // mu_from_q1 > 0
    bool system_solvable = false;  // q=1 and q=2 equations simultaneously satisfiable
};
InequivalenceWitness witness_inequivalence(const Rat& lambda, int n);

bool all_coefficients_positive(const KernelSeries& k);

} // namespace symmod
