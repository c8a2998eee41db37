#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <optional>
#include <random>
#include <vector>

#include "modres/check.hpp"
#include "modres/cyclotomic.hpp"
#include "modres/exterior.hpp"
#include "modres/fp_matrix.hpp"
#include "modres/laurent.hpp"
#include "modres/specht.hpp"

namespace modres {

using Weight = std::vector<int>;  // lambda in {-1, 0, 1}^g

Weight weight_of(Mono m, int g);
// All weights, lexicographic with -1 < 0 < 1.
std::vector<Weight> all_weights(int g);
// N(lambda): 1-based indices with lambda_i = 0.
std::vector<int> zero_set(const Weight& lambda);
std::map<Weight, ExteriorVector> weight_decompose(const ExteriorVector& v);

// Upsilon_lambda : L^{n(lambda)} -> W(lambda).
ExteriorVector upsilon(const Weight& lambda, const TensorVector& x);
// Inverse on W(lambda); nullopt when v has a component outside W(lambda).
std::optional<TensorVector> upsilon_inverse(const Weight& lambda, const ExteriorVector& v);

// H+ : genus g -> g+1, alpha -> alpha ^ a_{g+1}; H- is its adjoint.
ExteriorVector handle_plus(const ExteriorVector& v);
ExteriorVector handle_minus(const ExteriorVector& v);

// V^{(j)} = wedge^{g-j+1} intersected with ker F, assembled weight block by weight block.
struct LefschetzBlock {
    Weight lambda;
    int n = 0;
    std::size_t offset = 0;
};

struct LefschetzBasis {
    int g = 0, j = 1;
    std::vector<LefschetzBlock> blocks;
    std::vector<ExteriorVector> vectors;
    std::map<Weight, std::size_t> block_of;
    std::map<int, SpechtBasis> specht_by_n;

    std::size_t dim() const noexcept { return vectors.size(); }
    const SpechtBasis& specht(const LefschetzBlock& b) const { return specht_by_n.at(b.n); }
};

LefschetzBasis lefschetz_basis(int j, int g);
std::int64_t lefschetz_dim_formula(int j, int g);

std::optional<std::vector<std::int64_t>> lefschetz_coordinates(const LefschetzBasis& lb, const ExteriorVector& v);
std::optional<FpVec> lefschetz_coordinates_mod(const LefschetzBasis& lb, const ExteriorVector& v, std::uint32_t p);

// Integer matrix of a word (group or Lie tokens) on V^{(j)}.
IntMatrix lefschetz_action_matrix(const LefschetzBasis& lb, const SpWord& w);
// Matrix mod p of an arbitrary linear map f from V^{(j)} into the target basis.
template <class Fn>
FpMatrix lefschetz_map_mod(const LefschetzBasis& src, const LefschetzBasis& dst, std::uint32_t p, Fn f);

// Vbar = V_p^{(j)} / radical of the Gram form.
struct ModularLefschetz {
    std::uint32_t p = 3;
    LefschetzBasis basis;
    RadicalQuotient quotient;
    std::size_t dim() const noexcept { return quotient.quotient_dim(); }
    FpMatrix action(const SpWord& w) const;
};
ModularLefschetz modular_lefschetz(std::uint32_t p, int j, int g, bool reverse_pivots = false);
std::uint32_t modular_quotient_trace(std::uint32_t p, int j, const SpWord& w, int g);

struct AlexanderDecomposition {
    LaurentInt T;                 // tr(y^{-H} w) on the whole exterior algebra
    std::vector<std::int64_t> t;  // t[j-1] = tr of w on V^{(j)}, j = 1..g+1
    LaurentInt recombined;        // sum_j [j]_y t_j
    bool pass() const { return T == recombined; }
};
AlexanderDecomposition alexander_trace(const SpWord& w, int g);

struct Theorem3Result {
    CyclotomicElem lhs, rhs;
    std::vector<std::uint32_t> traces;  // traces[k-1] = tr Vbar^{(k)} mod p
    bool pass() const { return lhs == rhs; }
};
// sign = +1 compares with sum (-1)^{k-1}[k](t_k + t_{p-k}); sign = -1 with sum [k](t_k - t_{p-k}).
Theorem3Result theorem3_check(std::uint32_t p, const SpWord& w, int g, int sign);

std::vector<Check> lemma2_check(int g);
std::vector<Check> lemma3_check(int g);
std::vector<Check> lemma6_check(int g);
Check handle_check(int g);
Check weyl_transitivity_check(int g);
Check cyclic_generation_check(std::uint32_t p, int g, std::uint64_t seed);

// ---- implementation of the template ----
template <class Fn>
FpMatrix lefschetz_map_mod(const LefschetzBasis& src, const LefschetzBasis& dst, std::uint32_t p, Fn f) {
    FpMatrix m(dst.dim(), src.dim(), p);
    for (std::size_t c = 0; c < src.dim(); ++c) {
        auto coords = lefschetz_coordinates_mod(dst, f(src.vectors[c]), p);
        if (!coords) throw std::logic_error("lefschetz_map_mod: image outside the target space mod p");
        for (std::size_t r = 0; r < dst.dim(); ++r) m.at(r, c) = (*coords)[r];
    }
    return m;
}

}  // namespace modres
