#pragma once

#include <string>
#include <vector>

namespace modres {

// Permutation of {0..n-1}; image()[i] is where i goes.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> image);
    static Permutation identity(int n);
    // 1-based cycles, e.g. {{1,2},{3,4,5}}.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
    // Canonical representative of a cycle type: (1..l1)(l1+1..l1+l2)...
    static Permutation from_cycle_type(const std::vector<int>& type);

    int size() const noexcept { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_.at(i); }
    const std::vector<int>& image() const noexcept { return img_; }

    // (a*b)(i) = a(b(i))
    Permutation operator*(const Permutation& o) const;
    Permutation inverse() const;
    int sign() const;
    std::vector<int> cycle_type() const;  // weakly decreasing
    bool operator==(const Permutation& o) const = default;
    std::string to_string() const;

private:
    std::vector<int> img_;
};

// Partitions of n, each weakly decreasing, in reverse lexicographic order.
std::vector<std::vector<int>> partitions(int n);
// Size of the conjugacy class with the given cycle type.
long long class_size(const std::vector<int>& type);

}  // namespace modres
