#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "modres/check.hpp"
#include "modres/exterior.hpp"
#include "modres/fn_tqft.hpp"
#include "modres/fp_matrix.hpp"

namespace modres {

// J a_i = b_i, J b_i = -a_i.
IntMatrix j_matrix(int g);
ExteriorVector apply_J(const ExteriorVector& x);
// (x, y) for x, y in H, with (a_i, b_i) = 1.
std::int64_t symplectic_pairing(const ExteriorVector& x, const ExteriorVector& y);
// Degree of a homogeneous vector; nullopt for zero or mixed degrees.
std::optional<int> homogeneous_degree(const ExteriorVector& x);

// nu(x) y = x ^ y; mu(x) = nu(Jx)^* for the monomial inner form.
ExteriorVector nu(const ExteriorVector& x, const ExteriorVector& v);
ExteriorVector mu(const ExteriorVector& x, const ExteriorVector& v);

std::vector<Check> lemma16_check(int g, std::uint64_t seed);
// mu(omega ^ y) kills ker F, covariance of the induced maps, mu(x) im E^{l+m} in im E^l,
// radical of V_p^{(k)} equal to V_p^{(k)} cap im E^{p-k}, radical containment.
std::vector<Check> lemma17_check(std::uint32_t p, int k, int m, int g, std::uint64_t seed);

// wedge^m H / omega ^ wedge^{m-2} H over F_p with canonical representatives:
// coordinates on pivot monomials of the subspace are eliminated.
class JmQuotientSpace {
public:
    JmQuotientSpace(std::uint32_t p, int m, int g);
    std::uint32_t prime() const noexcept { return p_; }
    int degree() const noexcept { return m_; }
    int genus() const noexcept { return g_; }
    const std::vector<Mono>& monomials() const noexcept { return monos_; }
    // Monomials not eliminated; their classes form a basis of the quotient.
    const std::vector<Mono>& free_monomials() const noexcept { return free_; }
    std::size_t dim() const noexcept { return free_.size(); }
    FpVec coords(const ExteriorVector& x) const;   // monomial coordinates mod p (not reduced)
    FpVec reduce(const FpVec& x) const;            // canonical representative
    ExteriorVector lift(const FpVec& x) const;     // entries in [0, p)
    FpVec act(const SpWord& w, const FpVec& x) const;  // group word on a class

private:
    std::uint32_t p_;
    int m_, g_;
    std::vector<Mono> monos_, free_;
    FpMatrix rref_;  // rows span the subspace, reduced, pivots in pivot_cols_
    std::vector<std::size_t> pivot_cols_;
};

// Element (x / a, gamma) of the semidirect product; x is a canonical numerator.
struct JmElement {
    FpVec x;
    SpWord gamma;
    std::int64_t a = 1;
};
JmElement jm_identity(const JmQuotientSpace& q, std::int64_t a = 1);
JmElement jm_abelian(const JmQuotientSpace& q, const ExteriorVector& x, std::int64_t a = 1);
JmElement jm_group(const JmQuotientSpace& q, const SpWord& w, std::int64_t a = 1);
// (x1, g1)(x2, g2) = (x1 + g1 x2, g1 g2)
JmElement jm_multiply(const JmQuotientSpace& q, const JmElement& e1, const JmElement& e2);
JmElement jm_random(const JmQuotientSpace& q, std::mt19937_64& rng, std::int64_t a = 1);
std::string jm_to_string(const JmQuotientSpace& q, const JmElement& e);

enum class JmVariant { Full, Radical, Quotient };
std::string to_string(JmVariant v);
JmVariant parse_variant(const std::string& s);

// V^{(j)} (+)_mu V^{(j+m)} over F_p in one of three variants.
class BlockModule {
public:
    BlockModule(std::uint32_t p, int j, int m, int g, JmVariant variant);
    std::uint32_t prime() const noexcept { return p_; }
    int j() const noexcept { return j_; }
    int m() const noexcept { return m_; }
    int genus() const noexcept { return g_; }
    JmVariant variant() const noexcept { return variant_; }
    const JmQuotientSpace& space() const noexcept { return space_; }
    std::size_t top_dim() const noexcept { return top_dim_; }
    std::size_t bottom_dim() const noexcept { return bottom_dim_; }
    std::size_t dim() const noexcept { return top_dim_ + bottom_dim_; }

    FpMatrix group_top(const SpWord& w) const;
    FpMatrix group_bottom(const SpWord& w) const;
    // mu of a class given by (unreduced) monomial coordinates.
    FpMatrix mu_matrix(const FpVec& x) const;
    // Block matrix [g 0; mu(x/a) g  g].
    FpMatrix action(const JmElement& e) const;
    FpVec apply(const JmElement& e, const FpVec& v) const;

private:
    FpMatrix restrict_top(const FpMatrix& full) const;
    FpMatrix restrict_bottom(const FpMatrix& full) const;
    FpMatrix restrict_between(const FpMatrix& full) const;

    std::uint32_t p_;
    int j_, m_, g_;
    JmVariant variant_;
    JmQuotientSpace space_;
    ModularLefschetz top_;
    std::optional<ModularLefschetz> bottom_;  // empty when j + m > g + 1
    std::size_t top_dim_ = 0, bottom_dim_ = 0;
    std::vector<FpMatrix> mu_basis_;  // per monomial of degree m, variant level
};

FpMatrix mu_induced(std::uint32_t p, int j, int m, int g, const ExteriorVector& x, JmVariant variant);

struct WitnessReport {
    std::uint32_t p = 5;
    int k = 1, g = 3;
    std::size_t top_dim = 0, bottom_dim = 0, search_dim = 0;
    std::optional<Mono> witness;
    std::size_t witness_rank = 0;
    bool section_exists = true;          // with the witness as abelian generator
    bool control_section_exists = false; // with omega ^ a_1 instead
    std::string note;
    bool found() const noexcept { return witness.has_value(); }
    bool nonsplit() const noexcept { return found() && !section_exists && control_section_exists; }
    std::string to_string() const;
};
// First basis class x of wedge^3 H / omega ^ H whose induced map Vbar^{(k)} -> Vbar^{(k+3)} is nonzero,
// followed by the equivariant-section solve.
WitnessReport nonsplit_witness(std::uint32_t p, int k, int g);
// Does 0 -> Vbar^{(k+m)} -> U -> Vbar^{(k)} -> 0 admit a section commuting with the given elements?
bool equivariant_section_exists(const BlockModule& mod, const std::vector<JmElement>& gens);

struct StrandReport {
    int label = 1;
    std::vector<int> labels;          // TQFT labels, last is `label`
    std::vector<std::size_t> dims;    // summed over weights with multiplicity
    std::vector<std::size_t> ranks;   // rank of each map, same multiplicities
    bool composites_zero = true, exact = true;
    std::size_t quotient_dim = 0, expected_quotient_dim = 0;
};
struct Sequence69Report {
    std::uint32_t p = 5;
    int k = 1, g = 3;
    StrandReport strands[2];
    std::vector<std::size_t> u_dims;  // aligned at the quotient end
    bool composites_zero = true, exact = true;
    bool pass() const noexcept;
    std::string to_string() const;
};
Sequence69Report sequence69_check(std::uint32_t p, int k, int g);

}  // namespace modres
