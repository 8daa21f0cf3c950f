#pragma once

#include <string>
#include <vector>

namespace symmod {

// Integer partition: weakly decreasing positive parts.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // validates monotonicity/positivity

    int weight() const;                      // sum of parts
    int num_parts() const { return static_cast<int>(parts_.size()); }
    int part(int i) const;                   // 0-based; 0 beyond the last part
    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const;

    // Parts padded with zeros to length n.
    std::vector<int> padded(int n) const;

    std::string str() const;                 // "[3,1,1]"

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  private:
    std::vector<int> parts_;
};

// All partitions of n, descending lexicographic: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

// All partitions of weight <= d with at most max_parts parts, ordered by
// (weight, then descending lex).  Includes the empty partition.
std::vector<Partition> partitions_up_to(int d, int max_parts);

// Multiplicity profile factorial alpha! = prod over distinct values v of
// (number of entries equal to v)!; zeros count as a value.
// Orbit size of the exponent vector under S_n is n!/alpha!.
long long multiplicity_factorial(const std::vector<int>& m);

} // namespace symmod
