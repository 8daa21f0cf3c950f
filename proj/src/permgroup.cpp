#include "symmod/permgroup.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "symmod/errors.hpp"

namespace symmod {

int max_group_n() {
    int cap = 8;
    if (const char* env = std::getenv("SYMMOD_MAX_N")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) cap = static_cast<int>(v);
    }
    return cap;
}

void check_group_size(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > max_group_n()) {
        std::ostringstream os;
        os << "n = " << n << " exceeds the group-size cap " << max_group_n()
           << " (set SYMMOD_MAX_N to raise)";
        throw ResourceLimitError(os.str());
    }
}

std::vector<long long> inversion_counts(int n) {
    check_group_size(n);
    std::vector<long long> hist(static_cast<std::size_t>(n) * (n - 1) / 2 + 1, 0);
    for (const Permutation& s : all_permutations(n)) ++hist[s.length()];
    return hist;
}

std::vector<long long> inversion_count_polynomial(int n) {
    std::vector<long long> coef{1};
    for (int i = 1; i < n; ++i) {
        std::vector<long long> next(coef.size() + i, 0);
        for (std::size_t k = 0; k < coef.size(); ++k)
            for (int t = 0; t <= i; ++t) next[k + t] += coef[k];
        coef = std::move(next);
    }
    return coef;
}

std::vector<Partition> conjugacy_classes(int n) {
    std::vector<Partition> cl = partitions_of(n);
    std::reverse(cl.begin(), cl.end());  // ascending lex: (1^n) first
    return cl;
}

Partition cycle_type(const Permutation& s) {
    int n = s.size();
    std::vector<char> seen(n, 0);
    std::vector<int> lens;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = s(j);
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
}

long long class_size(const Partition& ct, int n) {
    if (ct.weight() != n) throw std::invalid_argument("cycle type must partition n");
    // n! / prod_j j^{a_j} a_j!  with a_j = multiplicity of j in the cycle type
    long long num = 1;
    for (int t = 2; t <= n; ++t) num *= t;
    std::map<int, int> mult;
    for (int p : ct.parts()) ++mult[p];
    long long den = 1;
    for (auto& [j, a] : mult) {
        for (int t = 0; t < a; ++t) den *= j;
        for (int t = 2; t <= a; ++t) den *= t;
    }
    return num / den;
}

namespace {

// Murnaghan-Nakayama on beta-numbers (first-column hook lengths).
long long mn_char(const std::vector<int>& p, const std::vector<int>& mu,
                  std::map<std::pair<std::vector<int>, std::vector<int>>, long long>& memo) {
    if (mu.empty()) return p.empty() ? 1 : 0;
    if (p.empty()) return 0;
    auto key = std::make_pair(p, mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int L = mu.front();
    std::vector<int> rest(mu.begin() + 1, mu.end());
    int k = static_cast<int>(p.size());
    std::vector<int> beta(k);
    for (int i = 0; i < k; ++i) beta[i] = p[i] + (k - 1 - i);

    long long total = 0;
    for (int i = 0; i < k; ++i) {
        int nb = beta[i] - L;
        if (nb < 0) continue;
        if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
        int height = 0;  // beta entries strictly between nb and beta[i]
        for (int b : beta)
            if (nb < b && b < beta[i]) ++height;
        std::vector<int> nbeta = beta;
        nbeta[i] = nb;
        std::sort(nbeta.rbegin(), nbeta.rend());
        int m = static_cast<int>(nbeta.size());
        std::vector<int> np;
        for (int t = 0; t < m; ++t) {
            int part = nbeta[t] - (m - 1 - t);
            if (part > 0) np.push_back(part);
        }
        long long sub = mn_char(np, rest, memo);
        total += (height % 2 == 0 ? sub : -sub);
    }
    memo[key] = total;
    return total;
}

} // namespace

long long character(const Partition& p, const Partition& ct) {
    if (p.weight() != ct.weight())
        throw std::invalid_argument("partition and cycle type must have equal weight");
    static thread_local std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo;
    return mn_char(p.parts(), ct.parts(), memo);
}

CharacterTable character_table(int n) {
    check_group_size(n);
    CharacterTable t;
    t.n = n;
    t.row_partitions = partitions_of(n);
    t.classes = conjugacy_classes(n);
    t.chi.resize(t.row_partitions.size());
    for (std::size_t r = 0; r < t.row_partitions.size(); ++r)
        for (const Partition& ct : t.classes)
            t.chi[r].push_back(character(t.row_partitions[r], ct));
    return t;
}

std::vector<Tableau> standard_tableaux(const Partition& p) {
    int n = p.weight();
    int rows = p.num_parts();
    std::vector<Tableau> out;
    Tableau cur(n);
    std::vector<int> heights(rows, 0);  // filled cells per row
    auto rec = [&](auto&& self, int k) -> void {
        if (k == n) {
            out.push_back(cur);
            return;
        }
        for (int r = 0; r < rows; ++r) {
            int c = heights[r];
            if (c < p.part(r) && (r == 0 || heights[r - 1] > c)) {
                heights[r] = c + 1;
                cur[k] = {r, c};
                self(self, k + 1);
                heights[r] = c;
            }
        }
    };
    rec(rec, 0);
    // Order by row word (row index of 1..n); the recursion already emits in
    // this order, but sort keeps the contract explicit.
    std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].first != b[i].first) return a[i].first < b[i].first;
        return false;
    });
    return out;
}

namespace {

// Axial distance d = content(k+1) - content(k), content = col - row.
// Generator matrices act on the standard-tableau basis:
//   same row:     e_T -> e_T
//   same column:  e_T -> -e_T
//   otherwise, on the pair {T, sT} with d measured in T:
//     seminormal:  e_T -> (1/d) e_T + (1 - 1/d^2) e_sT,  e_sT -> e_T - (1/d) e_sT
//     orthogonal:  e_T -> (1/d) e_T + sqrt(1 - 1/d^2) e_sT (symmetric in the pair)
template <class S, class PairCoef>
std::vector<Mat<S>> generator_matrices(const Partition& p, const std::vector<Tableau>& tabs,
                                       PairCoef pair_coef) {
    int n = p.weight();
    int dim = static_cast<int>(tabs.size());
    std::map<Tableau, int> index;
    for (int i = 0; i < dim; ++i) index[tabs[i]] = i;

    std::vector<Mat<S>> gens;
    for (int k = 0; k < n - 1; ++k) {  // s_{k+1} swaps k+1, k+2 (1-based values)
        Mat<S> m(dim, dim);
        std::vector<char> done(dim, 0);
        for (int i = 0; i < dim; ++i) {
            if (done[i]) continue;
            auto [rk, ck] = tabs[i][k];
            auto [rk1, ck1] = tabs[i][k + 1];
            int d = (ck1 - rk1) - (ck - rk);
            if (rk == rk1) {
                m(i, i) = S(1);
                done[i] = 1;
            } else if (ck == ck1) {
                m(i, i) = S(-1);
                done[i] = 1;
            } else {
                Tableau swapped = tabs[i];
                std::swap(swapped[k], swapped[k + 1]);
                int j = index.at(swapped);
                pair_coef(m, i, j, d);
                done[i] = done[j] = 1;
            }
        }
        gens.push_back(std::move(m));
    }
    return gens;
}

// BFS over the Cayley graph: pi(s_k sigma) = pi(s_k) pi(sigma).
template <class S>
std::map<Permutation, Mat<S>> group_matrices(int n, const std::vector<Mat<S>>& gens, int dim) {
    std::map<Permutation, Mat<S>> mats;
    Permutation id = Permutation::identity(n);
    mats[id] = Mat<S>::identity(dim);
    std::deque<Permutation> queue{id};
    while (!queue.empty()) {
        Permutation s = queue.front();
        queue.pop_front();
        const Mat<S> base = mats.at(s);
        for (int k = 0; k < n - 1; ++k) {
            std::vector<int> timg(n);
            std::iota(timg.begin(), timg.end(), 0);
            std::swap(timg[k], timg[k + 1]);
            Permutation t = Permutation(timg).compose(s);
            if (!mats.count(t)) {
                mats.emplace(t, gens[k] * base);
                queue.push_back(t);
            }
        }
    }
    return mats;
}

} // namespace

std::string form_name(IrrepForm f) {
    return f == IrrepForm::Seminormal ? "seminormal" : "orthogonal";
}

IrrepForm parse_form(const std::string& name) {
    if (name == "seminormal") return IrrepForm::Seminormal;
    if (name == "orthogonal") return IrrepForm::Orthogonal;
    throw std::invalid_argument("unknown representation form: " + name);
}

IrrepTable<Rat> irrep_seminormal(int n, const Partition& p) {
    check_group_size(n);
    if (p.weight() != n) throw std::invalid_argument("partition must have weight n");
    IrrepTable<Rat> t;
    t.n = n;
    t.p = p;
    t.form = IrrepForm::Seminormal;
    std::vector<Tableau> tabs = standard_tableaux(p);
    t.dim = static_cast<int>(tabs.size());
    auto pair_coef = [](Mat<Rat>& m, int i, int j, int d) {
        Rat rd = Rat(1) / d;  // division canonicalizes; d may be negative
        m(i, i) = rd;
        m(j, i) = 1 - rd * rd;
        m(i, j) = 1;
        m(j, j) = -rd;
    };
    auto gens = generator_matrices<Rat>(p, tabs, pair_coef);
    t.mats = group_matrices<Rat>(n, gens, t.dim);
    return t;
}

IrrepTable<double> irrep_orthogonal(int n, const Partition& p) {
    check_group_size(n);
    if (p.weight() != n) throw std::invalid_argument("partition must have weight n");
    IrrepTable<double> t;
    t.n = n;
    t.p = p;
    t.form = IrrepForm::Orthogonal;
    std::vector<Tableau> tabs = standard_tableaux(p);
    t.dim = static_cast<int>(tabs.size());
    auto pair_coef = [](Mat<double>& m, int i, int j, int d) {
        double rd = 1.0 / d;
        double off = std::sqrt(1.0 - rd * rd);
        m(i, i) = rd;
        m(j, i) = off;
        m(i, j) = off;
        m(j, j) = -rd;
    };
    auto gens = generator_matrices<double>(p, tabs, pair_coef);
    t.mats = group_matrices<double>(n, gens, t.dim);
    return t;
}

namespace {

template <class S>
struct OrthScan {
    S max_dev;
};

// One orthogonality sum per flat index over (i,j,l,m); deterministic chunking.
template <class S>
S orthogonality_max_dev(const IrrepTable<S>& a, const IrrepTable<S>& b, Exec ex) {
    std::vector<Permutation> group = all_permutations(a.n);
    std::vector<const Mat<S>*> right(group.size());
    std::vector<const Mat<S>*> left_inv(group.size());
    for (std::size_t t = 0; t < group.size(); ++t) {
        right[t] = &b.at(group[t]);
        left_inv[t] = &a.at(group[t].inverse());
    }
    bool same = a.p == b.p;
    S factor = S(0);
    {
        // n!/dim_p as a scalar of type S
        long fact = 1;
        for (int t = 2; t <= a.n; ++t) fact *= t;
        factor = S(fact) / S(a.dim);
    }
    int da = a.dim, db = b.dim;
    std::size_t tuples = static_cast<std::size_t>(da) * da * db * db;
    std::vector<S> devs(tuples, S(0));
    par_for(tuples, ex, [&](std::size_t t) {
        int m = static_cast<int>(t % db);
        int l = static_cast<int>((t / db) % db);
        int j = static_cast<int>((t / (static_cast<std::size_t>(db) * db)) % da);
        int i = static_cast<int>(t / (static_cast<std::size_t>(db) * db * da));
        S sum(0);
        for (std::size_t g = 0; g < group.size(); ++g)
            sum += (*left_inv[g])(i, j) * (*right[g])(l, m);
        S target = (same && i == m && j == l) ? factor : S(0);
        S dev = sum - target;
        devs[t] = dev < S(0) ? S(-dev) : dev;
    });
    S best(0);
    for (const S& d : devs)
        if (best < d) best = d;
    return best;
}

} // namespace

OrthReport verify_orthogonality(const IrrepTable<Rat>& a, const IrrepTable<Rat>& b, Exec ex) {
    OrthReport r;
    r.n = a.n;
    r.p = a.p;
    r.q = b.p;
    r.form = IrrepForm::Seminormal;
    Rat dev = orthogonality_max_dev<Rat>(a, b, ex);
    r.max_deviation = rat_str(dev);
    r.pass = (dev == 0);
    return r;
}

OrthReport verify_orthogonality(const IrrepTable<double>& a, const IrrepTable<double>& b,
                                double tol, Exec ex) {
    OrthReport r;
    r.n = a.n;
    r.p = a.p;
    r.q = b.p;
    r.form = IrrepForm::Orthogonal;
    double dev = orthogonality_max_dev<double>(a, b, ex);
    std::ostringstream os;
    os << dev;
    r.max_deviation = os.str();
    r.pass = dev <= tol;
    return r;
}

} // namespace symmod
