#pragma once

#include <complex>
#include <map>
#include <vector>

#include "symmod/permutation.hpp"
#include "symmod/rational.hpp"

namespace symmod {

// Multivariate polynomial with exact rational coefficients, stored sparsely as
// exponent-vector -> coefficient.  Zero coefficients are never stored.
class SparsePoly {
  public:
    using Terms = std::map<std::vector<int>, Rat>;

    SparsePoly() = default;
    explicit SparsePoly(int nvars) : nvars_(nvars) {}
    static SparsePoly constant(int nvars, const Rat& c);
    static SparsePoly monomial(std::vector<int> exp, const Rat& c);

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;  // -1 for the zero polynomial

    Rat coefficient(const std::vector<int>& exp) const;
    void add_term(const std::vector<int>& exp, const Rat& c);

    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly operator-() const;
    SparsePoly operator*(const Rat& c) const;
    bool operator==(const SparsePoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    SparsePoly pow(unsigned e) const;

    // Product with all result terms of total degree > cap dropped.
    SparsePoly mul_truncated(const SparsePoly& o, int cap) const;

    // Largest exponent under graded lexicographic order (degree, then lex).
    const std::vector<int>& leading_exponent_grlex() const;  // pre: nonzero

    Rat eval(const std::vector<Rat>& point) const;
    std::complex<double> eval(const std::vector<std::complex<double>>& point) const;

    // Substitute variable i -> images[i]; images share a common nvars.
    SparsePoly substitute(const std::vector<SparsePoly>& images) const;

    // Permutation action (sigma . f)(z) = f(sigma^{-1} . z), i.e. exponent
    // vectors are permuted by sigma.
    SparsePoly permuted(const Permutation& s) const;

    bool is_symmetric() const;  // invariant under all adjacent transpositions

  private:
    int nvars_ = 0;
    Terms terms_;
};

// Exact quotient f / g; throws std::logic_error if g does not divide f.
SparsePoly exact_divide(const SparsePoly& f, const SparsePoly& g);

} // namespace symmod
