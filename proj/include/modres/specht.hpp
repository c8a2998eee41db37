#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modres/fp_matrix.hpp"
#include "modres/int_matrix.hpp"
#include "modres/permutation.hpp"
#include "modres/tensor.hpp"

namespace modres {

// Two-row Young diagram [a, b], a >= b >= 0.
struct Diagram2 {
    int a = 0, b = 0;
    Diagram2() = default;
    Diagram2(int a_, int b_);
    int n() const noexcept { return a + b; }
    // Weight label c = a - b + 1.
    int c() const noexcept { return a - b + 1; }
    static Diagram2 from_weight(int n, int c);
    bool operator==(const Diagram2& o) const = default;
    auto operator<=>(const Diagram2& o) const = default;
    std::string to_string() const;
};

// Row-equivalence class of a two-row tableau, stored through its bottom-row set.
struct Tabloid2 {
    int n = 0;
    SignWord bottom = 0;
};

// Filling of a two-row diagram with 1..n (or any distinct labels).
// Column k (k < b) is (top[k] over bottom[k]); top[b..a) are single boxes.
struct Tableau2 {
    std::vector<int> top, bottom;

    Diagram2 shape() const { return Diagram2(static_cast<int>(top.size()), static_cast<int>(bottom.size())); }
    bool is_standard() const;
    // Standard tableau on 1..n with the given bottom-row set.
    static Tableau2 from_bottom(int n, SignWord bottom);
    std::string to_string() const;
};

// e_epsilon with epsilon_k = + exactly for k in the bottom row.
TensorVector tabloid_vector(const Tabloid2& t);
// prod over columns (1 - (top_k, bottom_k)) applied to the tabloid vector.
// Labels must be 1..n where n = number of boxes.
TensorVector polytabloid(const Tableau2& t);

struct SpechtBasis {
    int n = 0, c = 0, b = 0;
    std::vector<Tableau2> tableaux;     // standard, lexicographic in bottom rows
    std::vector<TensorVector> vectors;  // polytabloids
    std::map<SignWord, std::size_t> lead_index;  // leading tabloid -> basis index

    std::size_t dim() const noexcept { return vectors.size(); }
    Diagram2 shape() const { return Diagram2::from_weight(n, c); }
};

// Basis of S^c in L^n (c <= n+1, c = n+1 mod 2).
SpechtBasis specht_basis(int n, int c);

// Coordinates of v in the polytabloid basis by colex-triangular reduction.
// nullopt when v is not in the span.
std::optional<std::vector<std::int64_t>> specht_coordinates(const SpechtBasis& sb, const TensorVector& v);
std::optional<FpVec> specht_coordinates_mod(const SpechtBasis& sb, const TensorVector& v, std::uint32_t p);

IntMatrix gram_matrix(const std::vector<TensorVector>& vs);

// Checks that the polytabloids lie in ker F and the H-eigenspace, are independent mod q and
// that their number equals dim of ker F on the weight space computed mod q.
bool verify_specht_basis(const SpechtBasis& sb, std::uint32_t q = 1000003);

// Integer matrix of sigma on the basis (column j = coordinates of sigma e_j).
IntMatrix specht_action_matrix(const SpechtBasis& sb, const Permutation& sigma);
std::int64_t ordinary_character(const Diagram2& tau, const Permutation& sigma);

// Catalan-type dimension C(n, j) = binom(n, j) - binom(n, j-1).
std::int64_t catalan(int n, int j);

}  // namespace modres
