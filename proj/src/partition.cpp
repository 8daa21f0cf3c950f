#include "symmod/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symmod {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    return i < static_cast<int>(parts_.size()) ? parts_[i] : 0;
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    for (int col = 1; !parts_.empty() && col <= parts_[0]; ++col) {
        int cnt = 0;
        for (int p : parts_)
            if (p >= col) ++cnt;
        out.push_back(cnt);
    }
    return Partition(std::move(out));
}

std::vector<int> Partition::padded(int n) const {
    std::vector<int> out(n, 0);
    if (static_cast<int>(parts_.size()) > n)
        throw std::invalid_argument("partition has more parts than requested length");
    std::copy(parts_.begin(), parts_.end(), out.begin());
    return out;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ']';
    return os.str();
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    if (n == 0) {
        out.push_back(Partition());
        return out;
    }
    gen_partitions(n, n, cur, out);
    return out;
}

std::vector<Partition> partitions_up_to(int d, int max_parts) {
    std::vector<Partition> out;
    for (int w = 0; w <= d; ++w)
        for (const Partition& p : partitions_of(w))
            if (p.num_parts() <= max_parts) out.push_back(p);
    return out;
}

long long multiplicity_factorial(const std::vector<int>& m) {
    std::map<int, int> mult;
    for (int v : m) ++mult[v];
    long long r = 1;
    for (auto& [v, c] : mult) {
        (void)v;
        for (int t = 2; t <= c; ++t) r *= t;
    }
    return r;
}

} // namespace symmod
