#include "symmod/kernels.hpp"

#include <algorithm>
#include <stdexcept>

#include "symmod/errors.hpp"
#include "symmod/permgroup.hpp"
#include "symmod/symfunc.hpp"

namespace symmod {

namespace {

void check_weight(const Rat& w) {
    if (w <= 0) throw std::invalid_argument("kernel weight must be positive");
}

void check_degree(int d) {
    if (d < 0) throw std::invalid_argument("degree cap must be >= 0");
}

} // namespace

KernelSeries kernel_polydisc(const Rat& lambda, int n, int d) {
    check_weight(lambda);
    check_degree(d);
    if (n < 1) throw std::invalid_argument("n must be positive");
    KernelSeries k;
    k.kind = "polydisc";
    k.n = n;
    k.weight = lambda;
    k.degree_cap = d;
    k.coord = Coord::Z;
    for (const std::vector<int>& m : exponents_up_to(n, d)) {
        KernelTerm t;
        t.label = m;
        t.coef = pochhammer_vec(lambda, m) / factorial_vec(m);
        t.factor = SparsePoly::monomial(m, 1);
        k.terms.push_back(std::move(t));
    }
    return k;
}

namespace {

// Orbit representatives: weakly decreasing exponent vectors of length n,
// total degree <= d, ordered by (degree, descending lex).
std::vector<std::vector<int>> orbit_reps(int n, int d) {
    std::vector<std::vector<int>> reps;
    for (const Partition& p : partitions_up_to(d, n)) reps.push_back(p.padded(n));
    return reps;
}

} // namespace

KernelSeries kernel_sym(const Rat& lambda, int n, int d) {
    check_weight(lambda);
    check_degree(d);
    if (n < 1) throw std::invalid_argument("n must be positive");
    KernelSeries k;
    k.kind = "sym";
    k.n = n;
    k.weight = lambda;
    k.degree_cap = d;
    k.coord = Coord::Z;
    Rat nfact = factorial(static_cast<unsigned>(n));
    for (const std::vector<int>& m : orbit_reps(n, d)) {
        KernelTerm t;
        t.label = m;
        t.coef = Rat(static_cast<long>(multiplicity_factorial(m))) * pochhammer_vec(lambda, m) /
                 (factorial_vec(m) * nfact);
        t.factor = monomial_sym(m, n);
        k.terms.push_back(std::move(t));
    }
    return k;
}

KernelSeries kernel_Gn_monomial(const Rat& lambda, int n, int d, Exec ex) {
    KernelSeries k = kernel_sym(lambda, n, d);
    k.kind = "K_Gn";
    k.coord = Coord::U;
    std::vector<SparsePoly> converted(k.terms.size());
    par_for(k.terms.size(), ex, [&](std::size_t t) {
        converted[t] = to_elementary_basis(k.terms[t].factor);
    });
    for (std::size_t t = 0; t < k.terms.size(); ++t) k.terms[t].factor = std::move(converted[t]);
    return k;
}

KernelSeries kernel_Bergman_Gn(const Rat& mu, int n, int d, Exec ex) {
    check_weight(mu);
    check_degree(d);
    if (n < 1) throw std::invalid_argument("n must be positive");
    KernelSeries k;
    k.kind = "B_Gn";
    k.n = n;
    k.weight = mu;
    k.degree_cap = d;
    k.coord = Coord::U;
    std::vector<Partition> parts = partitions_up_to(d, n);
    k.terms.resize(parts.size());
    par_for(parts.size(), ex, [&](std::size_t t) {
        const Partition& p = parts[t];
        KernelTerm term;
        term.label = p.padded(n);
        std::vector<int> shifted = p.padded(n);
        std::vector<int> delta = staircase(n);
        for (int i = 0; i < n; ++i) shifted[i] += delta[i];
        term.coef = pochhammer_vec(mu, shifted) / factorial_vec(shifted);
        term.factor = schur_giambelli(p, n);
        k.terms[t] = std::move(term);
    });
    return k;
}

KernelSeries normalize_at_zero(const KernelSeries& k) {
    std::vector<Rat> zero(k.n, Rat(0));
    Rat at_zero = 0;
    for (const KernelTerm& t : k.terms) {
        Rat v = t.factor.eval(zero);
        at_zero += t.coef * v * v;
    }
    if (at_zero == 0) throw NotNormalizableError("kernel vanishes at the origin");
    KernelSeries out = k;
    for (KernelTerm& t : out.terms) t.coef /= at_zero;
    return out;
}

std::complex<double> eval_kernel(const KernelSeries& k, const std::vector<std::complex<double>>& x,
                                 const std::vector<std::complex<double>>& y) {
    std::complex<double> total = 0;
    for (const KernelTerm& t : k.terms)
        total += to_double(t.coef) * t.factor.eval(x) * std::conj(t.factor.eval(y));
    return total;
}

Rat eval_kernel_exact(const KernelSeries& k, const std::vector<Rat>& x,
                      const std::vector<Rat>& y) {
    Rat total = 0;
    for (const KernelTerm& t : k.terms) total += t.coef * t.factor.eval(x) * t.factor.eval(y);
    return total;
}

Rat extract_e1_coefficient(const KernelSeries& k, int q) {
    if (k.coord != Coord::U)
        throw std::invalid_argument("e1-coefficient extraction needs elementary coordinates");
    if (q < 0) throw std::invalid_argument("q must be >= 0");
    if (2 * q > k.degree_cap)
        throw TruncationError("degree cap too small for the requested coefficient");
    std::vector<int> target(k.n, 0);
    if (k.n > 0 && q > 0) target[0] = q;
    Rat total = 0;
    for (const KernelTerm& t : k.terms) {
        Rat c = t.factor.coefficient(target);
        total += t.coef * c * c;
    }
    return total;
}

namespace {

// Polynomial in 2n variables (z_1..z_n, v_1..v_n) with products truncated at
// z-degree cap; element of the ring used for the permanent crosscheck.
struct TruncSeries {
    SparsePoly p;
    int n = 0, cap = 0;

    TruncSeries() = default;
    TruncSeries(SparsePoly poly, int n_, int cap_) : p(std::move(poly)), n(n_), cap(cap_) {}
    explicit TruncSeries(int c) : p() {
        // only used for the additive/multiplicative identities of the ring
        if (c != 0) throw std::logic_error("TruncSeries literal must be 0");
    }

    int zdeg(const std::vector<int>& exp) const {
        int s = 0;
        for (int i = 0; i < n; ++i) s += exp[i];
        return s;
    }

    TruncSeries operator+(const TruncSeries& o) const { return {p + o.p, n, cap}; }
    TruncSeries operator-(const TruncSeries& o) const { return {p - o.p, n, cap}; }
    TruncSeries operator*(const TruncSeries& o) const {
        // truncate by degree in the z-half of the variables
        SparsePoly r(p.nvars());
        std::vector<int> exp(p.nvars());
        for (const auto& [ea, ca] : p.terms()) {
            int da = zdeg(ea);
            for (const auto& [eb, cb] : o.p.terms()) {
                if (da + zdeg(eb) > cap) continue;
                for (int i = 0; i < p.nvars(); ++i) exp[i] = ea[i] + eb[i];
                r.add_term(exp, Rat(ca * cb));
            }
        }
        return {std::move(r), n, cap};
    }
};

} // namespace

PermanentCrosscheck crosscheck_permanent(const Rat& lambda, int n, int d, Exec ex) {
    check_weight(lambda);
    check_degree(d);
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > 4 || d > 6)
        throw ResourceLimitError("permanent crosscheck capped at n <= 4, d <= 6");
    int nv = 2 * n;
    // matrix entry (j, k): truncation of (1 - z_j v_k)^{-lambda}
    std::vector<std::vector<TruncSeries>> mat(n);
    for (int j = 0; j < n; ++j)
        for (int col = 0; col < n; ++col) {
            SparsePoly entry(nv);
            for (int t = 0; t <= d; ++t) {
                std::vector<int> exp(nv, 0);
                exp[j] = t;
                exp[n + col] = t;
                entry.add_term(exp, pochhammer(lambda, static_cast<unsigned>(t)) /
                                        factorial(static_cast<unsigned>(t)));
            }
            mat[j].push_back(TruncSeries(std::move(entry), n, d));
        }
    TruncSeries zero(SparsePoly(nv), n, d);
    TruncSeries per = permanent(mat, zero, ex);

    // reference: (1/n!) per == sum over orbits of coef * M_m(z) M_m(v)
    KernelSeries sym = kernel_sym(lambda, n, d);
    SparsePoly expected(nv);
    for (const KernelTerm& t : sym.terms) {
        SparsePoly zpart(nv), vpart(nv);
        for (const auto& [exp, c] : t.factor.terms()) {
            std::vector<int> ze(nv, 0), ve(nv, 0);
            for (int i = 0; i < n; ++i) {
                ze[i] = exp[i];
                ve[n + i] = exp[i];
            }
            zpart.add_term(ze, c);
            vpart.add_term(ve, c);
        }
        expected = expected + zpart * vpart * t.coef;
    }
    Rat nfact = factorial(static_cast<unsigned>(n));
    SparsePoly scaled = per.p * (Rat(1) / nfact);

    PermanentCrosscheck r;
    r.n = n;
    r.d = d;
    r.lambda = lambda;
    r.match = (scaled == expected);
    return r;
}

InequivalenceWitness witness_inequivalence(const Rat& lambda, int n) {
    check_weight(lambda);
    if (n < 1) throw std::invalid_argument("n must be positive");
    InequivalenceWitness w;
    w.n = n;
    w.lambda = lambda;
    w.coef_sym_q1 = lambda / n;
    w.coef_bergman_q1 = (lambda + n - 1) / Rat(n);
    w.differ = !(w.coef_sym_q1 == w.coef_bergman_q1);
    // q=1 equation lambda = mu + n - 1 determines mu; then test the q=2 equation
    //   lambda (lambda+1) / (2n) == (mu+n-1)(mu+n) / (n (n+1))
    w.mu_from_q1 = lambda - (n - 1);
    w.mu_admissible = w.mu_from_q1 > 0;
    Rat lhs = lambda * (lambda + 1) / (2 * n);
    Rat rhs = (w.mu_from_q1 + n - 1) * (w.mu_from_q1 + n) / (Rat(n) * (n + 1));
    w.system_solvable = w.mu_admissible && lhs == rhs;
    return w;
}

bool all_coefficients_positive(const KernelSeries& k) {
    for (const KernelTerm& t : k.terms)
        if (!(t.coef > 0)) return false;
    return true;
}

} // namespace symmod
