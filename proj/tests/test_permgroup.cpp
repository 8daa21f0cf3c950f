#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>

#include "symmod/errors.hpp"
#include "symmod/permgroup.hpp"

using namespace symmod;

TEST_CASE("permutation parse, compose, inverse, action") {
    Permutation s = Permutation::parse("[2,3,1]", 3);
    CHECK(s(0) == 1);
    CHECK(s(1) == 2);
    CHECK(s(2) == 0);
    CHECK(s.one_line() == "[2,3,1]");
    Permutation inv = s.inverse();
    CHECK(inv.one_line() == "[3,1,2]");
    CHECK(s.compose(inv) == Permutation::identity(3));
    CHECK(inv.compose(s) == Permutation::identity(3));

    // (s.v)[i] = v[s^{-1}(i)]: with s = [2,3,1], (a,b,c) -> (c,a,b)
    std::vector<int> v{10, 20, 30};
    std::vector<int> w = s.act(v);
    CHECK(w == std::vector<int>{30, 10, 20});

    // action is a left action: (st).v = s.(t.v)
    Permutation t = Permutation::parse("[2,1,3]", 3);
    CHECK(s.compose(t).act(v) == s.act(t.act(v)));

    CHECK(Permutation::parse("[2,1,3]", 3).length() == 1);
    CHECK(Permutation::parse("[2,1,3]", 3).sign() == -1);
    CHECK(Permutation::parse("[3,2,1]", 3).length() == 3);
    CHECK(Permutation::identity(4).length() == 0);
    CHECK_THROWS_AS(Permutation::parse("[1,1,2]", 3), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("[1,2]", 3), std::invalid_argument);
}

TEST_CASE("all_permutations is the full lex-sorted group") {
    auto g3 = all_permutations(3);
    REQUIRE(g3.size() == 6);
    CHECK(g3.front() == Permutation::identity(3));
    for (std::size_t i = 1; i < g3.size(); ++i) CHECK(g3[i - 1] < g3[i]);
    auto g5 = all_permutations(5);
    CHECK(g5.size() == 120);
}

TEST_CASE("inversion histogram equals the product-polynomial coefficients") {
    CHECK(inversion_counts(3) == std::vector<long long>{1, 2, 2, 1});
    CHECK(inversion_counts(4) == std::vector<long long>{1, 3, 5, 6, 5, 3, 1});
    for (int n = 2; n <= 6; ++n) {
        auto hist = inversion_counts(n);
        CHECK(hist == inversion_count_polynomial(n));
        CHECK(static_cast<int>(hist.size()) == n * (n - 1) / 2 + 1);
        long long total = std::accumulate(hist.begin(), hist.end(), 0ll);
        long long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        CHECK(total == fact);
    }
}

TEST_CASE("conjugacy classes, cycle types, class sizes") {
    auto cl = conjugacy_classes(4);
    REQUIRE(cl.size() == 5);
    CHECK(cl[0].parts() == std::vector<int>{1, 1, 1, 1});
    CHECK(cl[1].parts() == std::vector<int>{2, 1, 1});
    CHECK(cl[2].parts() == std::vector<int>{2, 2});
    CHECK(cl[3].parts() == std::vector<int>{3, 1});
    CHECK(cl[4].parts() == std::vector<int>{4});
    std::vector<long long> sizes;
    for (const auto& c : cl) sizes.push_back(class_size(c, 4));
    CHECK(sizes == std::vector<long long>{1, 6, 3, 8, 6});

    CHECK(cycle_type(Permutation::parse("[2,1,3]", 3)).parts() == std::vector<int>{2, 1});
    CHECK(cycle_type(Permutation::parse("[2,3,1]", 3)).parts() == std::vector<int>{3});
    CHECK(cycle_type(Permutation::parse("[2,1,4,3]", 4)).parts() == std::vector<int>{2, 2});
    CHECK(cycle_type(Permutation::identity(5)).parts() == std::vector<int>{1, 1, 1, 1, 1});

    // class sizes count the actual permutations of each cycle type
    for (int n : {3, 4, 5}) {
        auto classes = conjugacy_classes(n);
        std::vector<long long> counted(classes.size(), 0);
        for (const auto& s : all_permutations(n)) {
            Partition ct = cycle_type(s);
            for (std::size_t i = 0; i < classes.size(); ++i)
                if (classes[i] == ct) ++counted[i];
        }
        for (std::size_t i = 0; i < classes.size(); ++i)
            CHECK(counted[i] == class_size(classes[i], n));
    }
}

TEST_CASE("character values for S_3 and S_4 match the classical tables") {
    // rows (n) first, classes identity first
    CharacterTable t3 = character_table(3);
    REQUIRE(t3.row_partitions.size() == 3);
    CHECK(t3.row_partitions[0].parts() == std::vector<int>{3});
    CHECK(t3.classes[0].parts() == std::vector<int>{1, 1, 1});
    CHECK(t3.chi[0] == std::vector<long long>{1, 1, 1});
    CHECK(t3.chi[1] == std::vector<long long>{2, 0, -1});
    CHECK(t3.chi[2] == std::vector<long long>{1, -1, 1});

    CharacterTable t4 = character_table(4);
    REQUIRE(t4.row_partitions.size() == 5);
    CHECK(t4.chi[0] == std::vector<long long>{1, 1, 1, 1, 1});
    CHECK(t4.chi[1] == std::vector<long long>{3, 1, -1, 0, -1});
    CHECK(t4.chi[2] == std::vector<long long>{2, 0, 2, -1, 0});
    CHECK(t4.chi[3] == std::vector<long long>{3, -1, -1, 0, 1});
    CHECK(t4.chi[4] == std::vector<long long>{1, -1, 1, 1, -1});
}

TEST_CASE("character tables satisfy the group-theoretic identities") {
    for (int n = 2; n <= 6; ++n) {
        CharacterTable t = character_table(n);
        long long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;

        // dimension column and the sum-of-squares count
        long long sum_sq = 0;
        for (std::size_t r = 0; r < t.chi.size(); ++r) {
            CHECK(t.chi[r][0] == character(t.row_partitions[r], t.classes[0]));
            CHECK(t.chi[r][0] > 0);
            sum_sq += t.chi[r][0] * t.chi[r][0];
        }
        CHECK(sum_sq == fact);

        // row orthogonality with class sizes
        for (std::size_t a = 0; a < t.chi.size(); ++a)
            for (std::size_t b = a; b < t.chi.size(); ++b) {
                long long acc = 0;
                for (std::size_t c = 0; c < t.classes.size(); ++c)
                    acc += class_size(t.classes[c], n) * t.chi[a][c] * t.chi[b][c];
                CHECK(acc == (a == b ? fact : 0));
            }

        // column orthogonality
        for (std::size_t c1 = 0; c1 < t.classes.size(); ++c1)
            for (std::size_t c2 = c1; c2 < t.classes.size(); ++c2) {
                long long acc = 0;
                for (std::size_t r = 0; r < t.chi.size(); ++r)
                    acc += t.chi[r][c1] * t.chi[r][c2];
                CHECK(acc == (c1 == c2 ? fact / class_size(t.classes[c1], n) : 0));
            }

        // trivial row all ones; sign row is the parity of the class
        for (std::size_t c = 0; c < t.classes.size(); ++c) {
            CHECK(t.chi.front()[c] == 1);
            int parity = (n - t.classes[c].num_parts()) % 2 ? -1 : 1;
            CHECK(t.chi.back()[c] == parity);
        }
    }
}

TEST_CASE("characters are class functions computed directly") {
    for (int n : {3, 4}) {
        CharacterTable t = character_table(n);
        for (const auto& s : all_permutations(n)) {
            Partition ct = cycle_type(s);
            for (std::size_t r = 0; r < t.row_partitions.size(); ++r) {
                long long val = character(t.row_partitions[r], ct);
                std::size_t c = 0;
                while (!(t.classes[c] == ct)) ++c;
                CHECK(val == t.chi[r][c]);
            }
        }
    }
}

TEST_CASE("standard tableaux enumerate the representation dimension") {
    auto tabs = standard_tableaux(Partition({2, 1}));
    CHECK(tabs.size() == 2);
    auto hook = standard_tableaux(Partition({2, 2}));
    CHECK(hook.size() == 2);
    CHECK(standard_tableaux(Partition({3, 1})).size() == 3);
    for (int n : {4, 5}) {
        CharacterTable t = character_table(n);
        for (std::size_t r = 0; r < t.row_partitions.size(); ++r)
            CHECK(static_cast<long long>(standard_tableaux(t.row_partitions[r]).size()) ==
                  t.chi[r][0]);
    }
}

TEST_CASE("seminormal matrices are multiplicative with character traces") {
    for (int n : {3, 4}) {
        CharacterTable ct = character_table(n);
        auto group = all_permutations(n);
        for (const Partition& p : partitions_of(n)) {
            IrrepTable<Rat> rep = irrep_seminormal(n, p);
            CHECK(rep.dim == static_cast<int>(standard_tableaux(p).size()));
            CHECK(rep.at(Permutation::identity(n)) == Mat<Rat>::identity(rep.dim));

            // traces are the characters
            for (const auto& s : group) {
                Rat tr = 0;
                const Mat<Rat>& m = rep.at(s);
                for (int i = 0; i < rep.dim; ++i) tr += m(i, i);
                CHECK(tr == Rat(static_cast<long>(character(p, cycle_type(s)))));
            }

            // multiplicativity on sampled pairs (all pairs for n=3)
            std::mt19937_64 gen(12345);
            std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
            int pairs = n == 3 ? 36 : 60;
            for (int k = 0; k < pairs; ++k) {
                const Permutation& a = n == 3 ? group[k / 6] : group[pick(gen)];
                const Permutation& b = n == 3 ? group[k % 6] : group[pick(gen)];
                CHECK(rep.at(a.compose(b)) == rep.at(a) * rep.at(b));
            }
        }
    }
}

TEST_CASE("orthogonal matrices are unitary and trace-correct") {
    for (int n : {3, 4}) {
        for (const Partition& p : partitions_of(n)) {
            IrrepTable<double> rep = irrep_orthogonal(n, p);
            for (const auto& [s, m] : rep.mats) {
                Mat<double> prod = m * m.transpose();
                double dev = 0;
                for (int i = 0; i < rep.dim; ++i)
                    for (int j = 0; j < rep.dim; ++j)
                        dev = std::max(dev, std::abs(prod(i, j) - (i == j ? 1.0 : 0.0)));
                CHECK(dev <= 1e-10);
                double tr = 0;
                for (int i = 0; i < rep.dim; ++i) tr += m(i, i);
                CHECK(std::abs(tr - static_cast<double>(character(p, cycle_type(s)))) <= 1e-9);
            }
        }
    }
}

TEST_CASE("matrix-coefficient orthogonality sums are exact / tiny") {
    // exact rational: every partition pair of S_3
    auto parts3 = partitions_of(3);
    std::vector<IrrepTable<Rat>> reps;
    for (const auto& p : parts3) reps.push_back(irrep_seminormal(3, p));
    for (std::size_t a = 0; a < reps.size(); ++a)
        for (std::size_t b = 0; b < reps.size(); ++b) {
            OrthReport r = verify_orthogonality(reps[a], reps[b]);
            CHECK(r.pass);
            CHECK(r.max_deviation == "0");
        }

    // one n=4 mixed pair and one diagonal pair, exact
    IrrepTable<Rat> r31 = irrep_seminormal(4, Partition({3, 1}));
    IrrepTable<Rat> r22 = irrep_seminormal(4, Partition({2, 2}));
    CHECK(verify_orthogonality(r31, r22).pass);
    CHECK(verify_orthogonality(r31, r31).pass);

    // floating orthogonal form within 1e-10
    for (std::size_t a = 0; a < parts3.size(); ++a)
        for (std::size_t b = 0; b < parts3.size(); ++b) {
            OrthReport r = verify_orthogonality(irrep_orthogonal(3, parts3[a]),
                                                irrep_orthogonal(3, parts3[b]));
            CHECK(r.pass);
        }
}

TEST_CASE("group size cap and its environment override") {
    CHECK(max_group_n() >= 8);
    CHECK_THROWS_AS(check_group_size(max_group_n() + 1), ResourceLimitError);
    CHECK_NOTHROW(check_group_size(2));

    setenv("SYMMOD_MAX_N", "4", 1);
    CHECK(max_group_n() == 4);
    CHECK_THROWS_AS(check_group_size(5), ResourceLimitError);
    // malformed values fall back to the default cap
    setenv("SYMMOD_MAX_N", "banana", 1);
    CHECK(max_group_n() == 8);
    setenv("SYMMOD_MAX_N", "-3", 1);
    CHECK(max_group_n() == 8);
    unsetenv("SYMMOD_MAX_N");
    CHECK(max_group_n() == 8);
}
