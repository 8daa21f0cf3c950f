#pragma once

#include <map>
#include <string>
#include <vector>

#include "symmod/exec.hpp"
#include "symmod/matrix.hpp"
#include "symmod/partition.hpp"
#include "symmod/permutation.hpp"
#include "symmod/rational.hpp"

namespace symmod {

// Hard cap on n for whole-group operations; SYMMOD_MAX_N overrides.
int max_group_n();
void check_group_size(int n);

// Histogram of inversion numbers: I[k] = #{sigma : length(sigma) = k}, k = 0..n(n-1)/2.
std::vector<long long> inversion_counts(int n);

// Coefficients of prod_{i=1}^{n-1} (1 + z + ... + z^i); equals inversion_counts.
std::vector<long long> inversion_count_polynomial(int n);

// Conjugacy classes as cycle types, identity class (1^n) first.
std::vector<Partition> conjugacy_classes(int n);
Partition cycle_type(const Permutation& s);
long long class_size(const Partition& ct, int n);

// Irreducible character chi_p on the class of cycle type ct (Murnaghan-Nakayama).
long long character(const Partition& p, const Partition& ct);

struct CharacterTable {
    int n = 0;
    std::vector<Partition> row_partitions;          // descending lex, (n) first
    std::vector<Partition> classes;                 // identity class first
    std::vector<std::vector<long long>> chi;        // chi[row][class]
};
CharacterTable character_table(int n);

// Standard Young tableau: cell (row, col) of each entry 1..n, 0-based.
using Tableau = std::vector<std::pair<int, int>>;

// All standard tableaux of shape p, ordered by lexicographic row word.
std::vector<Tableau> standard_tableaux(const Partition& p);

enum class IrrepForm { Seminormal, Orthogonal };

std::string form_name(IrrepForm f);
IrrepForm parse_form(const std::string& name);

// Matrix model of the irreducible representation labelled by p: one matrix per
// group element, multiplicative, basis indexed by standard tableaux.
template <class S>
struct IrrepTable {
    int n = 0;
    Partition p;
    int dim = 0;
    IrrepForm form = IrrepForm::Seminormal;
    std::map<Permutation, Mat<S>> mats;

    const Mat<S>& at(const Permutation& s) const { return mats.at(s); }
};

// Exact rational model (non-unitary).
IrrepTable<Rat> irrep_seminormal(int n, const Partition& p);
// Floating-point orthogonal model (unitary to rounding).
IrrepTable<double> irrep_orthogonal(int n, const Partition& p);

// Max deviation in the matrix-coefficient orthogonality sums
//   sum_sigma pi_p[i][j](sigma^{-1}) pi_q[l][m](sigma) = (n!/dim_p) [p==q][i==m][j==l]
// over all index tuples.  Exact (deviation must be 0) for the rational model.
struct OrthReport {
    int n = 0;
    Partition p, q;
    IrrepForm form = IrrepForm::Seminormal;
    std::string max_deviation;  // exact rational string or float rendering
    bool pass = false;
};
OrthReport verify_orthogonality(const IrrepTable<Rat>& a, const IrrepTable<Rat>& b,
                                Exec ex = Exec::OpenMP);
OrthReport verify_orthogonality(const IrrepTable<double>& a, const IrrepTable<double>& b,
                                double tol = 1e-10, Exec ex = Exec::OpenMP);

} // namespace symmod
