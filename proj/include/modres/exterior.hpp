#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "modres/int_matrix.hpp"
#include "modres/permutation.hpp"

namespace modres {

// Monomial in the exterior algebra of H = Z^{2g}; bit i < g is a_{i+1}, bit g+i is b_{i+1}.
using Mono = std::uint32_t;

inline constexpr int kMaxGenus = 8;

inline Mono gen_a(int g, int i) { (void)g; return Mono(1) << (i - 1); }
inline Mono gen_b(int g, int i) { return Mono(1) << (g + i - 1); }

// Sign of x ^ y relative to the sorted monomial x | y; 0 when they share a generator.
int wedge_sign(Mono x, Mono y);

class ExteriorVector {
public:
    explicit ExteriorVector(int g = 0);
    static ExteriorVector basis(int g, Mono m, std::int64_t c = 1);

    int genus() const noexcept { return g_; }
    const std::map<Mono, std::int64_t>& terms() const noexcept { return terms_; }
    std::int64_t coeff(Mono m) const;
    bool is_zero() const noexcept { return terms_.empty(); }
    void add(Mono m, std::int64_t c);

    ExteriorVector& operator+=(const ExteriorVector& o);
    ExteriorVector operator+(const ExteriorVector& o) const;
    ExteriorVector operator-(const ExteriorVector& o) const;
    ExteriorVector scaled(std::int64_t s) const;
    bool operator==(const ExteriorVector& o) const = default;
    std::string to_string() const;

private:
    int g_;
    std::map<Mono, std::int64_t> terms_;
};

ExteriorVector wedge(const ExteriorVector& x, const ExteriorVector& y);
std::int64_t inner_product(const ExteriorVector& x, const ExteriorVector& y);

// E = wedge with omega = sum a_i ^ b_i, F = E^*, H = degree - g.
ExteriorVector lefschetz_E(const ExteriorVector& v);
ExteriorVector lefschetz_F(const ExteriorVector& v);
ExteriorVector lefschetz_H(const ExteriorVector& v);
ExteriorVector omega(int g);

// Symplectic form on H: (a_i, b_i) = 1.
IntMatrix symplectic_form(int g);
bool is_symplectic(const IntMatrix& m, int g);

struct SpToken {
    enum class Kind { LieE, LieF, S, Perm, Matrix };
    Kind kind = Kind::S;
    int index = 0;       // 1-based for LieE / LieF / S
    Permutation perm;    // Kind::Perm, acting on indices 0..g-1
    IntMatrix matrix;    // Kind::Matrix, 2g x 2g, columns are images of a_1..a_g, b_1..b_g
    std::string label;

    bool is_group() const noexcept { return kind != Kind::LieE && kind != Kind::LieF; }
};
using SpWord = std::vector<SpToken>;

SpToken token_e(int i);
SpToken token_f(int i);
SpToken token_S(int j);
SpToken token_perm(const Permutation& sigma, std::string label = "");
SpToken token_matrix(const IntMatrix& m, int g, std::string label = "");
// x -> x + (x, v) v
SpToken token_transvection(const std::vector<std::int64_t>& v, int g, std::string label = "");

// Matrix on H: the group element, or the Lie element for LieE / LieF.
IntMatrix token_h_matrix(const SpToken& t, int g);
// Group element of a word of group tokens (product in word order).
IntMatrix word_h_matrix(const SpWord& w, int g);
IntMatrix symplectic_inverse(const IntMatrix& m, int g);

// Group tokens act as algebra automorphisms, Lie tokens as derivations.
// A word t_1 t_2 ... t_k acts as t_1(t_2(...t_k(v))).
ExteriorVector apply_token(const SpToken& t, const ExteriorVector& v);
ExteriorVector sp_action(const SpWord& w, const ExteriorVector& v);
ExteriorVector apply_h_matrix_automorphism(const IntMatrix& m, const ExteriorVector& v);

// Tokens: S<j>, P<i> (swap handles i, i+1), A<i> / B<i> (transvection along a_i / b_i),
// C<i> (transvection along a_i + a_{i+1}), e<i>, f<i>. Separated by spaces, '.' or ','.
SpWord parse_word(const std::string& s, int g);
std::string word_to_string(const SpWord& w);
SpWord random_group_word(std::mt19937_64& rng, int g, int max_len);

}  // namespace modres
