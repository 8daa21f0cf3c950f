#include "symmod/rng.hpp"

#include <stdexcept>

namespace symmod {

Rat RandomSource::proper_rational() {
    std::uniform_int_distribution<int> den_dist(2, 32);
    int q = den_dist(gen_);
    std::uniform_int_distribution<int> num_dist(-(q - 1), q - 1);
    int p = num_dist(gen_);
    Rat r(p, q);
    r.canonicalize();
    return r;
}

std::vector<Rat> RandomSource::rational_point_distinct(int n) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<Rat> w;
        for (int i = 0; i < n; ++i) w.push_back(proper_rational());
        bool distinct = true;
        for (int i = 0; i < n && distinct; ++i)
            for (int j = i + 1; j < n; ++j)
                if (w[i] == w[j]) {
                    distinct = false;
                    break;
                }
        if (distinct) return w;
    }
    throw std::runtime_error("failed to sample a distinct-coordinate point");
}

Rat RandomSource::weight() {
    std::uniform_int_distribution<int> den_dist(1, 32);
    int q = den_dist(gen_);
    std::uniform_int_distribution<int> num_dist(1, 4 * q);
    Rat r(num_dist(gen_), q);
    r.canonicalize();
    return r;
}

std::vector<std::complex<double>> RandomSource::complex_point_distinct(int n, double max_abs) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<std::complex<double>> w;
        for (int i = 0; i < n; ++i) {
            double re = to_double(proper_rational());
            double im = to_double(proper_rational());
            w.emplace_back(re, im);
        }
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (std::abs(w[i]) > max_abs) ok = false;
            for (int j = i + 1; j < n && ok; ++j)
                if (std::abs(w[i] - w[j]) < 1e-9) ok = false;
        }
        if (ok) return w;
    }
    throw std::runtime_error("failed to sample a distinct-coordinate complex point");
}

} // namespace symmod
