#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modres/fp_matrix.hpp"
#include "modres/permutation.hpp"
#include "modres/specht.hpp"

namespace modres {

// Matrix of E^{c0} : S^c -> S^{c-2c0} over F_p in polytabloid bases (rows = target).
FpMatrix e_power_map(std::uint32_t p, int n, int c, int c0);

struct ComplexSpec {
    std::uint32_t p = 3;
    int n = 0, k = 1;
    std::vector<int> weights;  // descending; the last one is k
    int truncation_l = 0;      // top weight is n + 1 - 2l
};

// Weights j_i = i p + k_i (k_i = k for even i, p - k for odd i) with j_i <= n + 1.
ComplexSpec complex_weights(std::uint32_t p, int n, int k);
// Top weight predicted from (n+1+k)/2 = p h + q.
int predicted_top_weight(std::uint32_t p, int n, int k);

struct ComplexOverFp {
    ComplexSpec spec;
    std::vector<std::size_t> dims;  // dims of the Specht terms, same order as weights
    std::vector<FpMatrix> maps;     // maps[t] : term t -> term t+1
};

ComplexOverFp build_complex(std::uint32_t p, int n, int k);

struct NodeReport {
    int weight = 0;
    std::size_t dim = 0;
    std::size_t dim_ker = 0;  // kernel of the outgoing map (radical at the last node)
    std::size_t dim_im = 0;   // image of the incoming map
    long homology = 0;
};

struct ExactnessReport {
    std::vector<NodeReport> nodes;
    bool composites_zero = true;
    bool image_in_radical = true;  // image of the last map inside the Gram radical
    bool exact = true;
    std::size_t dim_quotient_from_complex = 0;  // dim S^k - rank of the last map
    std::size_t dim_quotient_from_gram = 0;
    std::string to_string() const;
};

ExactnessReport verify_exactness(const ComplexOverFp& cx);

// D_p^tau = S^tau / radical of the Gram form mod p.
struct SimpleQuotient {
    std::uint32_t p = 3;
    Diagram2 tau;
    SpechtBasis basis;
    RadicalQuotient quotient;
    std::size_t dim() const noexcept { return quotient.quotient_dim(); }
    // Matrix of sigma on the Specht basis mod p.
    FpMatrix action(const Permutation& sigma) const;
    std::uint32_t trace(const Permutation& sigma) const;
};

SimpleQuotient simple_quotient(std::uint32_t p, const Diagram2& tau, bool reverse_pivots = false);

struct CharacterCheck {
    std::uint32_t lhs = 0;  // trace on D mod p
    std::uint32_t rhs = 0;  // alternating sum of ordinary characters mod p
    std::vector<std::int64_t> chis;  // chi^{tau_{j_i}}(sigma) in resolution order i = 0, 1, ...
    bool pass() const noexcept { return lhs == rhs; }
};

// Requires 0 <= a - b <= p - 2.
CharacterCheck modular_character_check(std::uint32_t p, const Diagram2& tau, const Permutation& sigma);

}  // namespace modres
