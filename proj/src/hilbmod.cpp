#include "symmod/hilbmod.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "symmod/errors.hpp"
#include "symmod/rng.hpp"
#include "symmod/symfunc.hpp"

namespace symmod {

namespace {

std::map<std::vector<int>, int> build_index(const std::vector<std::vector<int>>& basis) {
    std::map<std::vector<int>, int> idx;
    for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = static_cast<int>(i);
    return idx;
}

int degree_of(const std::vector<int>& m) {
    int s = 0;
    for (int v : m) s += v;
    return s;
}

} // namespace

int TruncatedModule::index_of(const std::vector<int>& m) const {
    auto it = index.find(m);
    return it == index.end() ? -1 : it->second;
}

TruncatedModule build_module(int n, int d, const Rat& lambda) {
    check_group_size(n);
    if (d < 0) throw std::invalid_argument("degree cap must be >= 0");
    if (!(lambda > 0)) throw std::invalid_argument("module weight must be positive");
    TruncatedModule mod;
    mod.n = n;
    mod.d = d;
    mod.lambda = lambda;
    mod.basis = exponents_up_to(n, d);
    mod.index = build_index(mod.basis);
    const auto& idx = mod.index;
    int nb = static_cast<int>(mod.basis.size());
    for (const auto& m : mod.basis) {
        mod.norm_sq.push_back(factorial_vec(m) / pochhammer_vec(lambda, m));
        mod.coef.push_back(pochhammer_vec(lambda, m) / factorial_vec(m));
    }
    for (int k = 1; k <= n; ++k) {
        TruncatedModule::MultOp op;
        op.mat = Mat<Rat>(nb, nb);
        op.lossfree.assign(nb, 0);
        SparsePoly sk = elementary(k, n);
        for (int c = 0; c < nb; ++c) {
            const auto& m = mod.basis[c];
            bool fits = degree_of(m) + k <= d;
            op.lossfree[c] = fits ? 1 : 0;
            if (!fits) continue;
            for (const auto& [sexp, coefficient] : sk.terms()) {
                std::vector<int> target(n);
                for (int i = 0; i < n; ++i) target[i] = m[i] + sexp[i];
                op.mat(idx.at(target), c) += coefficient;
            }
        }
        mod.mult.push_back(std::move(op));
    }
    return mod;
}

namespace {

// row_map[g][c] = basis index of sigma_g . basis[c]
std::vector<std::vector<int>> action_row_maps(const TruncatedModule& mod,
                                              const std::vector<Permutation>& group) {
    std::vector<std::vector<int>> maps(group.size(), std::vector<int>(mod.basis.size()));
    for (std::size_t g = 0; g < group.size(); ++g)
        for (std::size_t c = 0; c < mod.basis.size(); ++c)
            maps[g][c] = mod.index.at(group[g].act(mod.basis[c]));
    return maps;
}

} // namespace

template <class S>
Mat<S> projection_matrix(const TruncatedModule& mod, const IrrepTable<S>& rep, int i, int j,
                         Exec ex) {
    if (rep.n != mod.n) throw std::invalid_argument("representation/module size mismatch");
    if (i < 0 || i >= rep.dim || j < 0 || j >= rep.dim)
        throw std::invalid_argument("projection indices out of range");
    std::vector<Permutation> group = all_permutations(mod.n);
    std::vector<std::vector<int>> rows = action_row_maps(mod, group);
    std::vector<S> weights(group.size());
    S factor = S(0);
    {
        long long fact = 1;
        for (int t = 2; t <= mod.n; ++t) fact *= t;
        factor = S(rep.dim) / S(static_cast<long>(fact));
    }
    for (std::size_t g = 0; g < group.size(); ++g)
        weights[g] = S(factor * rep.at(group[g].inverse())(j, i));
    int nb = static_cast<int>(mod.basis.size());
    Mat<S> out(nb, nb);
    par_for(static_cast<std::size_t>(nb), ex, [&](std::size_t c) {
        for (std::size_t g = 0; g < group.size(); ++g)
            out(rows[g][c], static_cast<int>(c)) += weights[g];
    });
    return out;
}

template Mat<Rat> projection_matrix<Rat>(const TruncatedModule&, const IrrepTable<Rat>&, int, int,
                                         Exec);
template Mat<double> projection_matrix<double>(const TruncatedModule&, const IrrepTable<double>&,
                                               int, int, Exec);

Mat<Rat> isotypic_projection(const TruncatedModule& mod, const Partition& p, Exec ex) {
    std::vector<Permutation> group = all_permutations(mod.n);
    std::vector<std::vector<int>> rows = action_row_maps(mod, group);
    Rat dim(static_cast<long>(character(p, Partition(std::vector<int>(mod.n, 1)))));
    Rat nfact = factorial(static_cast<unsigned>(mod.n));
    std::vector<Rat> weights(group.size());
    for (std::size_t g = 0; g < group.size(); ++g)
        weights[g] = dim / nfact * Rat(static_cast<long>(character(p, cycle_type(group[g]))));
    int nb = static_cast<int>(mod.basis.size());
    Mat<Rat> out(nb, nb);
    par_for(static_cast<std::size_t>(nb), ex, [&](std::size_t c) {
        for (std::size_t g = 0; g < group.size(); ++g)
            out(rows[g][c], static_cast<int>(c)) += weights[g];
    });
    return out;
}

namespace {

template <class S>
struct ProjBlock {
    int p_index = 0;
    int i = 0, j = 0;
    Mat<S> mat;
};

template <class S, class MakeRep>
std::vector<ProjBlock<S>> all_blocks(const TruncatedModule& mod,
                                     const std::vector<Partition>& parts, MakeRep make_rep,
                                     Exec ex) {
    std::vector<ProjBlock<S>> blocks;
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
        auto rep = make_rep(parts[pi]);
        for (int i = 0; i < rep.dim; ++i)
            for (int j = 0; j < rep.dim; ++j)
                blocks.push_back({static_cast<int>(pi), i, j,
                                  projection_matrix<S>(mod, rep, i, j, ex)});
    }
    return blocks;
}

template <class S>
S algebra_max_dev(const TruncatedModule& mod, const std::vector<ProjBlock<S>>& blocks, Exec ex) {
    int nb = static_cast<int>(mod.basis.size());
    std::size_t pairs = blocks.size() * blocks.size();
    std::vector<S> devs(pairs, S(0));
    par_for(pairs, ex, [&](std::size_t t) {
        const ProjBlock<S>& a = blocks[t / blocks.size()];
        const ProjBlock<S>& b = blocks[t % blocks.size()];
        Mat<S> prod = a.mat * b.mat;
        if (a.p_index == b.p_index && a.j == b.i) {
            // locate P[p, a.i, b.j]
            for (const ProjBlock<S>& c : blocks)
                if (c.p_index == a.p_index && c.i == a.i && c.j == b.j) {
                    prod = prod - c.mat;
                    break;
                }
        }
        devs[t] = max_abs(prod);
    });
    S best(0);
    for (const S& v : devs)
        if (best < v) best = v;
    // completeness: sum of diagonal blocks is the identity
    Mat<S> sum(nb, nb);
    for (const ProjBlock<S>& b : blocks)
        if (b.i == b.j) sum = sum + b.mat;
    S dev = max_abs(sum - Mat<S>::identity(nb));
    if (best < dev) best = dev;
    return best;
}

std::string double_str(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

CheckReport verify_projection_algebra(const TruncatedModule& mod, IrrepForm form, double tol,
                                      Exec ex) {
    CheckReport r;
    r.check = "projection_algebra";
    r.n = mod.n;
    r.d = mod.d;
    r.form = form_name(form);
    std::vector<Partition> parts = partitions_of(mod.n);
    if (form == IrrepForm::Seminormal) {
        auto blocks = all_blocks<Rat>(
            mod, parts, [&](const Partition& p) { return irrep_seminormal(mod.n, p); }, ex);
        Rat dev = algebra_max_dev<Rat>(mod, blocks, ex);
        bool nonzero = true;
        for (const auto& b : blocks)
            if (b.i == b.j && b.mat.is_zero()) nonzero = false;
        r.max_deviation = rat_str(dev);
        r.pass = (dev == 0) && nonzero;
    } else {
        auto blocks = all_blocks<double>(
            mod, parts, [&](const Partition& p) { return irrep_orthogonal(mod.n, p); }, ex);
        double dev = algebra_max_dev<double>(mod, blocks, ex);
        // self-adjointness w.r.t. the weighted inner product: D P = P^T D
        int nb = static_cast<int>(mod.basis.size());
        for (const auto& b : blocks) {
            if (b.i != b.j) continue;
            for (int r2 = 0; r2 < nb; ++r2)
                for (int c = 0; c < nb; ++c) {
                    double lhs = to_double(mod.norm_sq[r2]) * b.mat(r2, c);
                    double rhs = b.mat(c, r2) * to_double(mod.norm_sq[c]);
                    dev = std::max(dev, std::abs(lhs - rhs));
                }
        }
        bool nonzero = true;
        for (const auto& b : blocks)
            if (b.i == b.j && max_abs(b.mat) < tol) nonzero = false;
        r.max_deviation = double_str(dev);
        r.pass = dev <= tol && nonzero;
    }
    return r;
}

CheckReport verify_reducing(const TruncatedModule& mod, IrrepForm form, double tol, Exec ex) {
    CheckReport r;
    r.check = "reducing";
    r.n = mod.n;
    r.d = mod.d;
    r.form = form_name(form);
    std::vector<Partition> parts = partitions_of(mod.n);
    int nb = static_cast<int>(mod.basis.size());

    auto scan = [&](auto make_rep, auto zero) {
        using S = decltype(zero);
        auto blocks = all_blocks<S>(mod, parts, make_rep, ex);
        S best(0);
        for (int k = 1; k <= mod.n; ++k) {
            Mat<Rat> const& mk_rat = mod.mult[k - 1].mat;
            Mat<S> mk(nb, nb);
            for (int a = 0; a < nb; ++a)
                for (int b = 0; b < nb; ++b) mk(a, b) = from_rat<S>(mk_rat(a, b));
            for (const auto& blk : blocks) {
                Mat<S> left = mk * blk.mat;    // M_k P
                Mat<S> right = blk.mat * mk;   // P M_k
                for (int c = 0; c < nb; ++c) {
                    if (!mod.mult[k - 1].lossfree[c]) continue;
                    for (int row = 0; row < nb; ++row) {
                        S dev = left(row, c) - right(row, c);
                        if (dev < S(0)) dev = S(-dev);
                        if (best < dev) best = dev;
                    }
                }
            }
        }
        return best;
    };

    if (form == IrrepForm::Seminormal) {
        Rat dev = scan([&](const Partition& p) { return irrep_seminormal(mod.n, p); }, Rat(0));
        r.max_deviation = rat_str(dev);
        r.pass = (dev == 0);
    } else {
        double dev =
            scan([&](const Partition& p) { return irrep_orthogonal(mod.n, p); }, double(0));
        r.max_deviation = double_str(dev);
        r.pass = dev <= tol;
    }
    return r;
}

namespace {

void check_point(const TruncatedModule& mod, const std::vector<Rat>& w) {
    if (static_cast<int>(w.size()) != mod.n)
        throw std::invalid_argument("point dimension mismatch");
    for (const Rat& c : w) {
        Rat a = c < 0 ? Rat(-c) : c;
        if (!(a < 1)) throw std::invalid_argument("point must lie inside the polydisc");
    }
    int threshold = mod.n * (mod.n - 1) / 2 + 2;
    if (mod.d < threshold)
        throw TruncationError("degree cap below the joint-kernel sufficiency threshold");
}

// kernel vector at sigma.w over the basis: v[m] = (lambda)_m/m! * (sigma.w)^m
std::vector<std::vector<Rat>> kernel_vectors(const TruncatedModule& mod,
                                             const std::vector<Rat>& w,
                                             const std::vector<Permutation>& group) {
    std::vector<std::vector<Rat>> vecs(group.size());
    for (std::size_t g = 0; g < group.size(); ++g) {
        std::vector<Rat> pw = group[g].act(w);
        // memoized powers per coordinate
        std::vector<std::vector<Rat>> powers(mod.n, {Rat(1)});
        auto pow_of = [&](int i, int e) -> const Rat& {
            auto& cache = powers[i];
            while (static_cast<int>(cache.size()) <= e) cache.push_back(Rat(cache.back() * pw[i]));
            return cache[e];
        };
        std::vector<Rat> v(mod.basis.size());
        for (std::size_t b = 0; b < mod.basis.size(); ++b) {
            Rat prod = mod.coef[b];
            for (int i = 0; i < mod.n; ++i)
                if (mod.basis[b][i]) prod *= pow_of(i, mod.basis[b][i]);
            v[b] = prod;
        }
        vecs[g] = std::move(v);
    }
    return vecs;
}

} // namespace

JointKernelResult joint_kernel(const TruncatedModule& mod, const std::vector<Rat>& w, Exec ex) {
    check_point(mod, w);
    std::vector<Permutation> group = all_permutations(mod.n);
    auto vecs = kernel_vectors(mod, w, group);
    int g = static_cast<int>(group.size());
    JointKernelResult res;
    res.gram = Mat<Rat>(g, g);
    std::size_t entries = static_cast<std::size_t>(g) * g;
    par_for(entries, ex, [&](std::size_t t) {
        int a = static_cast<int>(t / g), b = static_cast<int>(t % g);
        Rat sum = 0;
        for (std::size_t m = 0; m < mod.basis.size(); ++m)
            sum += vecs[a][m] * vecs[b][m] * mod.norm_sq[m];
        res.gram(a, b) = sum;
    });
    res.rank = rank_exact(res.gram);
    return res;
}

int isotype_dimension(const TruncatedModule& mod, const Partition& p, const std::vector<Rat>& w,
                      Exec ex) {
    check_point(mod, w);
    std::vector<Permutation> group = all_permutations(mod.n);
    auto vecs = kernel_vectors(mod, w, group);
    Mat<Rat> proj = isotypic_projection(mod, p, ex);
    int g = static_cast<int>(group.size());
    int nb = static_cast<int>(mod.basis.size());
    // projected vectors
    std::vector<std::vector<Rat>> pv(group.size(), std::vector<Rat>(nb, Rat(0)));
    par_for(group.size(), ex, [&](std::size_t a) {
        for (int row = 0; row < nb; ++row) {
            Rat sum = 0;
            for (int c = 0; c < nb; ++c)
                if (!(proj(row, c) == 0)) sum += proj(row, c) * vecs[a][c];
            pv[a][row] = sum;
        }
    });
    Mat<Rat> gram(g, g);
    for (int a = 0; a < g; ++a)
        for (int b = 0; b < g; ++b) {
            Rat sum = 0;
            for (int m = 0; m < nb; ++m) sum += pv[a][m] * pv[b][m] * mod.norm_sq[m];
            gram(a, b) = sum;
        }
    return rank_exact(gram);
}

std::vector<std::vector<int>> artin_basis(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, 0);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= n - pos - 1; ++e) {
            cur[pos] = e;
            self(self, pos + 1);
        }
        cur[pos] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        int da = degree_of(a), db = degree_of(b);
        if (da != db) return da < db;
        return b < a;  // descending lex within a degree
    });
    return out;
}

ArtinCheckResult artin_determinant_check(int n, int trials, unsigned long seed) {
    check_group_size(n);
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    ArtinCheckResult res;
    res.n = n;
    std::vector<std::vector<int>> basis = artin_basis(n);
    std::vector<Permutation> group = all_permutations(n);
    int g = static_cast<int>(group.size());
    RandomSource rng(seed);
    long long half = 1;
    for (int t = 2; t <= n; ++t) half *= t;
    half /= 2;
    int pairs = n * (n - 1) / 2;

    auto det_at = [&](const std::vector<Rat>& w) {
        Mat<Rat> m(g, g);
        for (int row = 0; row < g; ++row)
            for (int col = 0; col < g; ++col) {
                std::vector<Rat> pw = group[col].act(w);
                Rat v = 1;
                for (int i = 0; i < n; ++i)
                    if (basis[row][i]) v *= rat_pow(pw[i], static_cast<unsigned>(basis[row][i]));
                m(row, col) = v;
            }
        return det_exact(m);
    };

    bool degree_ok = true;
    for (int t = 0; t < trials; ++t) {
        std::vector<Rat> w = rng.rational_point_distinct(n);
        Rat det = det_at(w);
        Rat delta = 1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) delta *= w[i] - w[j];
        Rat denom = rat_pow(delta, static_cast<unsigned>(half));
        res.ratios.push_back(det / denom);
        if (t == 0) {
            // homogeneity: det(2w) = 2^{(n!/2) C(n,2)} det(w)
            std::vector<Rat> w2 = w;
            for (Rat& c : w2) c *= Rat(1, 2);  // stay inside the polydisc
            Rat det2 = det_at(w2);
            Rat scale = rat_pow(Rat(1, 2), static_cast<unsigned>(half * pairs));
            degree_ok = (det2 == scale * det);
        }
    }
    res.degree_ok = degree_ok;
    res.constant = true;
    for (const Rat& r : res.ratios)
        if (!(r == res.ratios.front()) || r == 0) res.constant = false;
    res.pass = res.constant && res.degree_ok;
    return res;
}

} // namespace symmod
