#include "symmod/sparsepoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symmod {

namespace {

int degree_of(const std::vector<int>& exp) {
    return std::accumulate(exp.begin(), exp.end(), 0);
}

// Graded lexicographic: compare total degree, then lex on exponents.
bool grlex_less(const std::vector<int>& a, const std::vector<int>& b) {
    int da = degree_of(a), db = degree_of(b);
    if (da != db) return da < db;
    return a < b;
}

} // namespace

SparsePoly SparsePoly::constant(int nvars, const Rat& c) {
    SparsePoly p(nvars);
    p.add_term(std::vector<int>(nvars, 0), c);
    return p;
}

SparsePoly SparsePoly::monomial(std::vector<int> exp, const Rat& c) {
    SparsePoly p(static_cast<int>(exp.size()));
    p.add_term(std::move(exp), c);
    return p;
}

int SparsePoly::total_degree() const {
    int d = -1;
    for (const auto& [exp, c] : terms_) d = std::max(d, degree_of(exp));
    return d;
}

Rat SparsePoly::coefficient(const std::vector<int>& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rat(0) : it->second;
}

void SparsePoly::add_term(const std::vector<int>& exp, const Rat& c) {
    if (static_cast<int>(exp.size()) != nvars_)
        throw std::invalid_argument("exponent vector length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    SparsePoly r = *this;
    for (const auto& [exp, c] : o.terms_) r.add_term(exp, c);
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
    SparsePoly r = *this;
    for (const auto& [exp, c] : o.terms_) r.add_term(exp, Rat(-c));
    return r;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r(nvars_);
    for (const auto& [exp, c] : terms_) r.terms_.emplace(exp, Rat(-c));
    return r;
}

SparsePoly SparsePoly::operator*(const Rat& c) const {
    SparsePoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [exp, coef] : terms_) r.terms_.emplace(exp, Rat(coef * c));
    return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    SparsePoly r(nvars_);
    std::vector<int> exp(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) exp[i] = ea[i] + eb[i];
            r.add_term(exp, Rat(ca * cb));
        }
    return r;
}

SparsePoly SparsePoly::mul_truncated(const SparsePoly& o, int cap) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    SparsePoly r(nvars_);
    std::vector<int> exp(nvars_);
    for (const auto& [ea, ca] : terms_) {
        int da = degree_of(ea);
        for (const auto& [eb, cb] : o.terms_) {
            if (da + degree_of(eb) > cap) continue;
            for (int i = 0; i < nvars_; ++i) exp[i] = ea[i] + eb[i];
            r.add_term(exp, Rat(ca * cb));
        }
    }
    return r;
}

SparsePoly SparsePoly::pow(unsigned e) const {
    SparsePoly r = SparsePoly::constant(nvars_, 1);
    SparsePoly b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        b = b * b;
        e >>= 1u;
    }
    return r;
}

const std::vector<int>& SparsePoly::leading_exponent_grlex() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    const std::vector<int>* best = nullptr;
    for (const auto& [exp, c] : terms_)
        if (!best || grlex_less(*best, exp)) best = &exp;
    return *best;
}

Rat SparsePoly::eval(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("evaluation point length mismatch");
    Rat total = 0;
    for (const auto& [exp, c] : terms_) {
        Rat term = c;
        for (int i = 0; i < nvars_; ++i)
            if (exp[i]) term *= rat_pow(point[i], static_cast<unsigned>(exp[i]));
        total += term;
    }
    return total;
}

std::complex<double> SparsePoly::eval(const std::vector<std::complex<double>>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("evaluation point length mismatch");
    std::complex<double> total = 0;
    for (const auto& [exp, c] : terms_) {
        std::complex<double> term = to_double(c);
        for (int i = 0; i < nvars_; ++i)
            for (int t = 0; t < exp[i]; ++t) term *= point[i];
        total += term;
    }
    return total;
}

SparsePoly SparsePoly::substitute(const std::vector<SparsePoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw std::invalid_argument("substitution needs one image per variable");
    int out_vars = images.empty() ? 0 : images[0].nvars();
    // Memoize image powers; exponents in our inputs stay small.
    std::vector<std::vector<SparsePoly>> powers(nvars_);
    auto power = [&](int var, int e) -> const SparsePoly& {
        auto& cache = powers[var];
        if (cache.empty()) cache.push_back(SparsePoly::constant(out_vars, 1));
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back() * images[var]);
        return cache[e];
    };
    SparsePoly r(out_vars);
    for (const auto& [exp, c] : terms_) {
        SparsePoly term = SparsePoly::constant(out_vars, c);
        for (int i = 0; i < nvars_; ++i)
            if (exp[i]) term = term * power(i, exp[i]);
        r = r + term;
    }
    return r;
}

SparsePoly SparsePoly::permuted(const Permutation& s) const {
    SparsePoly r(nvars_);
    for (const auto& [exp, c] : terms_) r.terms_.emplace(s.act(exp), c);
    return r;
}

bool SparsePoly::is_symmetric() const {
    for (int k = 0; k + 1 < nvars_; ++k) {
        std::vector<int> img(nvars_);
        std::iota(img.begin(), img.end(), 0);
        std::swap(img[k], img[k + 1]);
        if (!(permuted(Permutation(img)) == *this)) return false;
    }
    return true;
}

SparsePoly exact_divide(const SparsePoly& f, const SparsePoly& g) {
    if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (f.nvars() != g.nvars()) throw std::invalid_argument("variable count mismatch");
    SparsePoly q(f.nvars());
    SparsePoly r = f;
    const std::vector<int>& glead = g.leading_exponent_grlex();
    Rat gcoef = g.coefficient(glead);
    std::vector<int> delta(f.nvars());
    while (!r.is_zero()) {
        const std::vector<int>& rlead = r.leading_exponent_grlex();
        for (int i = 0; i < f.nvars(); ++i) {
            delta[i] = rlead[i] - glead[i];
            if (delta[i] < 0) throw std::logic_error("polynomial division left a remainder");
        }
        Rat c = r.coefficient(rlead) / gcoef;
        SparsePoly qt = SparsePoly::monomial(delta, c);
        q = q + qt;
        r = r - qt * g;
    }
    return q;
}

} // namespace symmod
