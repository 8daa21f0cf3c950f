#pragma once

#include <algorithm>
#include <vector>

#include "symmod/errors.hpp"
#include "symmod/exec.hpp"
#include "symmod/partition.hpp"
#include "symmod/sparsepoly.hpp"

namespace symmod {

// Elementary symmetric polynomial s_k in n variables; s_0 = 1, s_k = 0 for k > n.
SparsePoly elementary(int k, int n);

// prod_{i<j} (z_i - z_j), expanded.
SparsePoly vandermonde(int n);

// Monomial symmetric polynomial: sum of distinct permutations of z^m.
SparsePoly monomial_sym(const std::vector<int>& m, int n);

// Alternant det((z_i^{m_j})); requires strictly decreasing m.
SparsePoly alternant(const std::vector<int>& m, int n);

// Staircase delta = (n-1, n-2, ..., 0).
std::vector<int> staircase(int n);

// All exponent vectors of length n with total degree <= d, ordered by
// (degree, then descending lex).
std::vector<std::vector<int>> exponents_up_to(int n, int d);

// Schur polynomial S_p in z-variables as the quotient a_{p+delta} / a_delta.
SparsePoly schur_bialternant(const Partition& p, int n);

// Schur polynomial in elementary coordinates u_k ~ s_k via the dual
// Jacobi-Trudi determinant det((s_{p'_i + j - i}))_{i,j=1..p_1}, with the
// empty determinant equal to 1.
SparsePoly schur_giambelli(const Partition& p, int n);

Partition conjugate_partition(const Partition& p);

// Permanent of a square matrix over any commutative ring with +, -, *.
// Ryser inclusion-exclusion with Gray-code updates; chunked deterministically
// when parallel.  `zero` supplies the additive identity of T.
template <class T>
T permanent(const std::vector<std::vector<T>>& a, const T& zero, Exec ex = Exec::OpenMP);

// Definitional permanent: sum over permutations of row products (oracle).
template <class T>
T permanent_definition(const std::vector<std::vector<T>>& a, const T& zero);

// Rewrites a symmetric polynomial in the elementary basis: the result's
// variable k stands for s_{k+1}.  Throws std::invalid_argument when the input
// is not symmetric.
SparsePoly to_elementary_basis(const SparsePoly& f);

inline constexpr int kPermanentMaxSide = 12;

// --- template implementations ---

template <class T>
T permanent_definition(const std::vector<std::vector<T>>& a, const T& zero) {
    int n = static_cast<int>(a.size());
    if (n == 0) return zero + T(1);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    T total = zero;
    do {
        T prod = a[0][perm[0]];
        for (int i = 1; i < n; ++i) prod = prod * a[i][perm[i]];
        total = total + prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

namespace detail {

// Ryser over subset indices [lo, hi): walks the Gray sequence, returning the
// chunk's partial sum.  Row sums are rebuilt from scratch at the chunk start.
template <class T>
T ryser_chunk(const std::vector<std::vector<T>>& a, const T& zero, unsigned long lo,
              unsigned long hi) {
    int n = static_cast<int>(a.size());
    auto gray = [](unsigned long x) { return x ^ (x >> 1); };
    std::vector<T> rowsum(n, zero);
    unsigned long g = gray(lo);
    for (int j = 0; j < n; ++j)
        if (g >> j & 1ul)
            for (int i = 0; i < n; ++i) rowsum[i] = rowsum[i] + a[i][j];
    T total = zero;
    for (unsigned long s = lo; s < hi; ++s) {
        if (s != lo) {
            unsigned long prev = gray(s - 1), cur = gray(s);
            unsigned long diff = prev ^ cur;
            int j = 0;
            while (!(diff >> j & 1ul)) ++j;
            if (cur >> j & 1ul)
                for (int i = 0; i < n; ++i) rowsum[i] = rowsum[i] + a[i][j];
            else
                for (int i = 0; i < n; ++i) rowsum[i] = rowsum[i] - a[i][j];
            g = cur;
        }
        if (g == 0) continue;  // empty subset contributes nothing
        T prod = rowsum[0];
        for (int i = 1; i < n; ++i) prod = prod * rowsum[i];
        int popcount = 0;
        for (unsigned long x = g; x; x >>= 1) popcount += static_cast<int>(x & 1ul);
        // sign (-1)^{n - |S|}
        if ((n - popcount) % 2)
            total = total - prod;
        else
            total = total + prod;
    }
    return total;
}

} // namespace detail

template <class T>
T permanent(const std::vector<std::vector<T>>& a, const T& zero, Exec ex) {
    int n = static_cast<int>(a.size());
    if (n > kPermanentMaxSide)
        throw ResourceLimitError("permanent side exceeds cap");
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("permanent needs a square matrix");
    if (n == 0) return zero + T(1);
    unsigned long total_subsets = 1ul << n;
    int nchunks = ex == Exec::OpenMP
                      ? std::min<int>(std::max(1, max_threads()), static_cast<int>(total_subsets))
                      : 1;
    std::vector<T> partial(nchunks, zero);
    unsigned long per = total_subsets / nchunks;
    par_for(static_cast<std::size_t>(nchunks), ex, [&](std::size_t c) {
        unsigned long lo = c * per;
        unsigned long hi = (c + 1 == static_cast<unsigned long>(nchunks)) ? total_subsets
                                                                          : (c + 1) * per;
        partial[c] = detail::ryser_chunk(a, zero, lo, hi);
    });
    T total = zero;
    for (const T& p : partial) total = total + p;  // fixed combine order
    return total;
}

} // namespace symmod
