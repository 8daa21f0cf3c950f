#include "symmod/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symmod {

Permutation::Permutation(std::vector<int> images0) : img_(std::move(images0)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
            throw std::invalid_argument("not a permutation");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& one_line, int n) {
    std::vector<int> v;
    std::string digits;
    for (char c : one_line) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
        } else {
            if (!digits.empty()) v.push_back(std::stoi(digits) - 1);
            digits.clear();
        }
    }
    if (!digits.empty()) v.push_back(std::stoi(digits) - 1);
    if (static_cast<int>(v.size()) != n)
        throw std::invalid_argument("one-line notation has wrong length: " + one_line);
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = static_cast<int>(i);
    Permutation p;
    p.img_ = std::move(inv);
    return p;
}

Permutation Permutation::compose(const Permutation& other) const {
    std::vector<int> v(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) v[i] = img_[other.img_[i]];
    Permutation p;
    p.img_ = std::move(v);
    return p;
}

int Permutation::length() const {
    int inv = 0;
    for (std::size_t i = 0; i < img_.size(); ++i)
        for (std::size_t j = i + 1; j < img_.size(); ++j)
            if (img_[i] > img_[j]) ++inv;
    return inv;
}

std::string Permutation::one_line() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (i) os << ',';
        os << img_[i] + 1;
    }
    os << ']';
    return os.str();
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

} // namespace symmod
