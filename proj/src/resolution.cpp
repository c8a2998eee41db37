#include "modres/resolution.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "modres/arith.hpp"

namespace modres {

FpMatrix e_power_map(std::uint32_t p, int n, int c, int c0) {
    require_odd_prime(p, "e_power_map");
    if (c0 < 1 || static_cast<std::uint32_t>(c0) >= p || c0 % static_cast<int>(p) != c % static_cast<int>(p))
        throw std::invalid_argument("e_power_map: need c0 = c mod p with 1 <= c0 <= p-1");
    if (c - 2 * c0 < 1) throw std::invalid_argument("e_power_map: target weight below 1");
    const SpechtBasis src = specht_basis(n, c);
    const SpechtBasis dst = specht_basis(n, c - 2 * c0);
    FpMatrix m(dst.dim(), src.dim(), p);
    for (std::size_t j = 0; j < src.dim(); ++j) {
        auto coords = specht_coordinates_mod(dst, apply_e_power(c0, src.vectors[j]), p);
        if (!coords) throw std::logic_error("E-power image left the target Specht module mod p");
        for (std::size_t i = 0; i < dst.dim(); ++i) m.at(i, j) = (*coords)[i];
    }
    return m;
}

ComplexSpec complex_weights(std::uint32_t p, int n, int k) {
    require_odd_prime(p, "complex_weights");
    if (n < 0) throw std::invalid_argument("complex_weights: n must be >= 0");
    if (k < 1 || k > static_cast<int>(p) - 1 || (n + 1 - k) % 2 != 0 || k > n + 1)
        throw std::invalid_argument("complex_weights: need 1 <= k <= min(p-1, n+1) and k = n+1 mod 2");
    ComplexSpec s;
    s.p = p;
    s.n = n;
    s.k = k;
    const int P = static_cast<int>(p);
    for (int i = 0;; ++i) {
        const int j = i * P + (i % 2 == 0 ? k : P - k);
        if (j > n + 1) break;
        s.weights.push_back(j);
    }
    std::reverse(s.weights.begin(), s.weights.end());
    s.truncation_l = (n + 1 - s.weights.front()) / 2;
    return s;
}

int predicted_top_weight(std::uint32_t p, int n, int k) {
    const int m = (n + 1 + k) / 2;
    const int q = m % static_cast<int>(p);
    const int l = q >= k ? q - k : q;
    return n + 1 - 2 * l;
}

ComplexOverFp build_complex(std::uint32_t p, int n, int k) {
    ComplexOverFp cx;
    cx.spec = complex_weights(p, n, k);
    if (cx.spec.weights.front() != predicted_top_weight(p, n, k))
        throw std::logic_error("complex truncation disagrees with the predicted top weight");
    const auto& w = cx.spec.weights;
    for (int c : w) cx.dims.push_back(static_cast<std::size_t>(catalan(n, (n + 1 - c) / 2)));
    const int P = static_cast<int>(p);
    for (std::size_t t = 0; t + 1 < w.size(); ++t) {
        const int c0 = w[t] % P;
        cx.maps.push_back(e_power_map(p, n, w[t], c0));
    }
    return cx;
}

ExactnessReport verify_exactness(const ComplexOverFp& cx) {
    ExactnessReport rep;
    const std::size_t m = cx.spec.weights.size();
    const std::uint32_t p = cx.spec.p;
    std::vector<std::size_t> ranks;
    for (const auto& f : cx.maps) ranks.push_back(rank(f));
    for (std::size_t t = 0; t + 2 < m; ++t)
        if (!(cx.maps[t + 1] * cx.maps[t]).is_zero()) rep.composites_zero = false;

    const SimpleQuotient sq = simple_quotient(p, Diagram2::from_weight(cx.spec.n, cx.spec.k));
    rep.dim_quotient_from_gram = sq.dim();
    if (m >= 2) rep.image_in_radical = (sq.quotient.gram() * cx.maps.back()).is_zero();

    for (std::size_t t = 0; t < m; ++t) {
        NodeReport nd;
        nd.weight = cx.spec.weights[t];
        nd.dim = cx.dims[t];
        nd.dim_im = t > 0 ? ranks[t - 1] : 0;
        nd.dim_ker = t + 1 < m ? nd.dim - ranks[t] : sq.quotient.radical_dim();
        nd.homology = static_cast<long>(nd.dim_ker) - static_cast<long>(nd.dim_im);
        if (nd.homology != 0) rep.exact = false;
        rep.nodes.push_back(nd);
    }
    rep.dim_quotient_from_complex = cx.dims.back() - (m >= 2 ? ranks.back() : 0);
    rep.exact = rep.exact && rep.composites_zero && rep.image_in_radical;
    return rep;
}

std::string ExactnessReport::to_string() const {
    std::ostringstream os;
    for (const auto& nd : nodes)
        os << "  S^" << nd.weight << ": dim " << nd.dim << ", ker " << nd.dim_ker << ", im " << nd.dim_im
           << ", homology " << nd.homology << "\n";
    os << "  dim D: complex " << dim_quotient_from_complex << ", gram " << dim_quotient_from_gram
       << (exact ? ", exact" : ", NOT exact") << "\n";
    return os.str();
}

FpMatrix SimpleQuotient::action(const Permutation& sigma) const {
    FpMatrix m(basis.dim(), basis.dim(), p);
    for (std::size_t j = 0; j < basis.dim(); ++j) {
        auto coords = specht_coordinates_mod(basis, perm_action(sigma, basis.vectors[j]), p);
        if (!coords) throw std::logic_error("Specht module not closed under the symmetric group");
        for (std::size_t i = 0; i < basis.dim(); ++i) m.at(i, j) = (*coords)[i];
    }
    return m;
}

std::uint32_t SimpleQuotient::trace(const Permutation& sigma) const {
    if (sigma.size() != tau.n()) throw std::invalid_argument("SimpleQuotient::trace: size mismatch");
    if (dim() == 0) return 0;
    return quotient.trace(action(sigma));
}

SimpleQuotient simple_quotient(std::uint32_t p, const Diagram2& tau, bool reverse_pivots) {
    require_odd_prime(p, "simple_quotient");
    SimpleQuotient sq;
    sq.p = p;
    sq.tau = tau;
    sq.basis = specht_basis(tau.n(), tau.c());
    sq.quotient = RadicalQuotient(gram_matrix(sq.basis.vectors).mod(p), reverse_pivots);
    return sq;
}

CharacterCheck modular_character_check(std::uint32_t p, const Diagram2& tau, const Permutation& sigma) {
    require_odd_prime(p, "modular_character_check");
    const int k = tau.c();
    if (k < 1 || k > static_cast<int>(p) - 1) throw std::invalid_argument("modular_character_check: need 0 <= a-b <= p-2");
    const int n = tau.n();
    CharacterCheck cc;
    cc.lhs = simple_quotient(p, tau).trace(sigma);
    const ComplexSpec spec = complex_weights(p, n, k);
    std::int64_t acc = 0;
    // spec.weights is descending; resolution index i counts from the end
    for (std::size_t t = spec.weights.size(); t-- > 0;) {
        const std::size_t i = spec.weights.size() - 1 - t;
        const std::int64_t chi = ordinary_character(Diagram2::from_weight(n, spec.weights[t]), sigma);
        cc.chis.push_back(chi);
        acc = checked_add(acc, i % 2 == 0 ? chi : -chi);
    }
    cc.rhs = mod_p(acc, p);
    return cc;
}

}  // namespace modres
