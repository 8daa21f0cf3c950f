#pragma once

#include <string>
#include <vector>

namespace symmod {

// Permutation of {1..n} stored as 0-based one-line images: img[i] = sigma(i+1)-1.
// The action on points/exponents is (sigma . v)[i] = v[sigma^{-1}(i)].
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images0);  // 0-based images
    static Permutation identity(int n);
    // Parses 1-based one-line notation "[2,1,3]".
    static Permutation parse(const std::string& one_line, int n);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }  // 0-based
    Permutation inverse() const;
    Permutation compose(const Permutation& other) const;  // (this*other)(x) = this(other(x))

    template <class T>
    std::vector<T> act(const std::vector<T>& v) const {
        Permutation inv = inverse();
        std::vector<T> w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[inv.img_[i]];
        return w;
    }

    // Number of inversions; equals the minimal adjacent-transposition word length.
    int length() const;
    int sign() const { return length() % 2 == 0 ? 1 : -1; }

    // 1-based one-line notation, e.g. "[2,1,3]".
    std::string one_line() const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    const std::vector<int>& images() const { return img_; }

  private:
    std::vector<int> img_;
};

// All n! permutations in lexicographic one-line order (identity first).
std::vector<Permutation> all_permutations(int n);

} // namespace symmod
