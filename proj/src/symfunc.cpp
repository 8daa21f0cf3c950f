#include "symmod/symfunc.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symmod {

SparsePoly elementary(int k, int n) {
    if (k < 0) throw std::invalid_argument("elementary index must be >= 0");
    SparsePoly p(n);
    if (k > n) return p;  // identically zero
    if (k == 0) return SparsePoly::constant(n, 1);
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    // iterate k-subsets of {0..n-1} in lexicographic order
    while (true) {
        std::vector<int> exp(n, 0);
        for (int i : idx) exp[i] = 1;
        p.add_term(exp, 1);
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int t = pos + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
    }
    return p;
}

SparsePoly vandermonde(int n) {
    SparsePoly p = SparsePoly::constant(n, 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> ei(n, 0), ej(n, 0);
            ei[i] = 1;
            ej[j] = 1;
            p = p * (SparsePoly::monomial(ei, 1) - SparsePoly::monomial(ej, 1));
        }
    return p;
}

SparsePoly monomial_sym(const std::vector<int>& m, int n) {
    if (static_cast<int>(m.size()) != n)
        throw std::invalid_argument("exponent vector must have length n");
    for (int v : m)
        if (v < 0) throw std::invalid_argument("exponents must be >= 0");
    std::vector<int> sorted = m;
    std::sort(sorted.begin(), sorted.end());
    SparsePoly p(n);
    do {
        p.add_term(sorted, 1);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return p;
}

SparsePoly alternant(const std::vector<int>& m, int n) {
    if (static_cast<int>(m.size()) != n)
        throw std::invalid_argument("exponent vector must have length n");
    for (int i = 0; i + 1 < n; ++i)
        if (m[i] <= m[i + 1])
            throw std::invalid_argument("alternant needs strictly decreasing exponents");
    if (n > 0 && m[n - 1] < 0) throw std::invalid_argument("exponents must be >= 0");
    SparsePoly p(n);
    for (const Permutation& s : all_permutations(n)) {
        // term sgn(s) * prod_i z_i^{m_{s(i)}}
        std::vector<int> exp(n);
        for (int i = 0; i < n; ++i) exp[i] = m[s(i)];
        p.add_term(exp, Rat(s.sign()));
    }
    return p;
}

std::vector<int> staircase(int n) {
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i) d[i] = n - 1 - i;
    return d;
}

std::vector<std::vector<int>> exponents_up_to(int n, int d) {
    std::vector<std::vector<std::vector<int>>> by_deg(d + 1);
    std::vector<int> cur(n, 0);
    auto rec = [&](auto&& self, int pos, int used) -> void {
        if (pos == n) {
            by_deg[used].push_back(cur);
            return;
        }
        for (int e = d - used; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, used + e);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, 0);
    std::vector<std::vector<int>> out;
    for (auto& bucket : by_deg)
        for (auto& e : bucket) out.push_back(std::move(e));
    return out;
}

SparsePoly schur_bialternant(const Partition& p, int n) {
    if (p.num_parts() > n)
        throw std::invalid_argument("partition has more parts than variables");
    std::vector<int> top = p.padded(n);
    std::vector<int> delta = staircase(n);
    for (int i = 0; i < n; ++i) top[i] += delta[i];
    return exact_divide(alternant(top, n), vandermonde(n));
}

namespace {

// Determinant of a matrix of polynomials by Laplace expansion along the first
// remaining row, memoized on the column mask.
SparsePoly poly_det(const std::vector<std::vector<SparsePoly>>& m, int nvars) {
    int r = static_cast<int>(m.size());
    std::map<unsigned long, SparsePoly> memo;
    auto rec = [&](auto&& self, unsigned long colmask, int row) -> SparsePoly {
        if (row == r) return SparsePoly::constant(nvars, 1);
        if (auto it = memo.find(colmask); it != memo.end()) return it->second;
        SparsePoly acc(nvars);
        int sign = 1;
        for (int c = 0; c < r; ++c) {
            if (!(colmask >> c & 1ul)) continue;
            if (!m[row][c].is_zero()) {
                SparsePoly sub = self(self, colmask & ~(1ul << c), row + 1);
                SparsePoly term = m[row][c] * sub;
                acc = sign > 0 ? acc + term : acc - term;
            }
            sign = -sign;
        }
        memo.emplace(colmask, acc);
        return acc;
    };
    unsigned long full = r >= 64 ? ~0ul : (1ul << r) - 1ul;
    return rec(rec, full, 0);
}

} // namespace

SparsePoly schur_giambelli(const Partition& p, int n) {
    if (p.num_parts() > n)
        throw std::invalid_argument("partition has more parts than variables");
    Partition conj = p.conjugate();
    int r = p.part(0);  // number of rows of the dual Jacobi-Trudi matrix
    if (r == 0) return SparsePoly::constant(n, 1);
    auto s_poly = [&](int k) -> SparsePoly {
        if (k < 0 || k > n) return SparsePoly(n);  // zero
        if (k == 0) return SparsePoly::constant(n, 1);
        std::vector<int> exp(n, 0);
        exp[k - 1] = 1;
        return SparsePoly::monomial(exp, 1);  // variable u_k
    };
    std::vector<std::vector<SparsePoly>> m(r, std::vector<SparsePoly>(r, SparsePoly(n)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) m[i][j] = s_poly(conj.part(i) + j - i);
    return poly_det(m, n);
}

Partition conjugate_partition(const Partition& p) { return p.conjugate(); }

SparsePoly to_elementary_basis(const SparsePoly& f) {
    if (!f.is_symmetric())
        throw std::invalid_argument("to_elementary_basis needs a symmetric polynomial");
    int n = f.nvars();
    std::vector<SparsePoly> elem(n + 1, SparsePoly(n));
    for (int k = 1; k <= n; ++k) elem[k] = elementary(k, n);
    SparsePoly rem = f;
    SparsePoly out(n);
    while (!rem.is_zero()) {
        std::vector<int> lead = rem.leading_exponent_grlex();
        // For symmetric rem the grlex-leading exponent is weakly decreasing.
        for (int i = 0; i + 1 < n; ++i)
            if (lead[i] < lead[i + 1])
                throw std::logic_error("leading exponent of a symmetric polynomial not sorted");
        Rat c = rem.coefficient(lead);
        // exponent of u_k is lead[k-1] - lead[k]
        std::vector<int> uexp(n, 0);
        SparsePoly prod = SparsePoly::constant(n, 1);
        for (int k = 1; k <= n; ++k) {
            int e = lead[k - 1] - (k < n ? lead[k] : 0);
            uexp[k - 1] = e;
            if (e) prod = prod * elem[k].pow(static_cast<unsigned>(e));
        }
        out.add_term(uexp, c);
        rem = rem - prod * c;
    }
    return out;
}

} // namespace symmod
