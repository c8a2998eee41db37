#include "modres/fn_tqft.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "modres/arith.hpp"

namespace modres {

Weight weight_of(Mono m, int g) {
    Weight w(g, 0);
    for (int i = 1; i <= g; ++i) {
        const bool a = m & gen_a(g, i), b = m & gen_b(g, i);
        w[i - 1] = (a && !b) ? 1 : (b && !a) ? -1 : 0;
    }
    return w;
}

std::vector<Weight> all_weights(int g) {
    std::vector<Weight> out;
    Weight w(g, -1);
    while (true) {
        out.push_back(w);
        int i = g - 1;
        while (i >= 0 && w[i] == 1) w[i--] = -1;
        if (i < 0) break;
        ++w[i];
    }
    return out;
}

std::vector<int> zero_set(const Weight& lambda) {
    std::vector<int> n;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (lambda[i] == 0) n.push_back(static_cast<int>(i) + 1);
    return n;
}

std::map<Weight, ExteriorVector> weight_decompose(const ExteriorVector& v) {
    std::map<Weight, ExteriorVector> out;
    for (auto [m, c] : v.terms()) {
        auto [it, fresh] = out.try_emplace(weight_of(m, v.genus()), v.genus());
        it->second.add(m, c);
    }
    return out;
}

namespace {
void check_weight(const Weight& lambda) {
    if (lambda.empty() || static_cast<int>(lambda.size()) > kMaxGenus) throw std::invalid_argument("weight: bad genus");
    for (int x : lambda)
        if (x < -1 || x > 1) throw std::invalid_argument("weight entries must be -1, 0 or 1");
}

// Monomial and sign of Upsilon_lambda(e_eps).
std::pair<Mono, int> upsilon_mono(const Weight& lambda, SignWord eps) {
    const int g = static_cast<int>(lambda.size());
    Mono m = 0;
    int sign = 1;
    for (int i = 1; i <= g; ++i) {
        if (lambda[i - 1] == 0) continue;
        const Mono x = lambda[i - 1] == 1 ? gen_a(g, i) : gen_b(g, i);
        sign *= wedge_sign(m, x);
        m |= x;
    }
    const auto nset = zero_set(lambda);
    for (std::size_t k = 0; k < nset.size(); ++k) {
        if (!((eps >> k) & 1)) continue;
        const Mono pair = gen_a(g, nset[k]) | gen_b(g, nset[k]);
        sign *= wedge_sign(m, pair);
        m |= pair;
    }
    return {m, sign};
}
}  // namespace

ExteriorVector upsilon(const Weight& lambda, const TensorVector& x) {
    check_weight(lambda);
    const int g = static_cast<int>(lambda.size());
    if (x.length() != static_cast<int>(zero_set(lambda).size())) throw std::invalid_argument("upsilon: length differs from n(lambda)");
    ExteriorVector r(g);
    for (auto [w, c] : x.terms()) {
        auto [m, s] = upsilon_mono(lambda, w);
        r.add(m, s == 1 ? c : checked_mul(c, -1));
    }
    return r;
}

std::optional<TensorVector> upsilon_inverse(const Weight& lambda, const ExteriorVector& v) {
    check_weight(lambda);
    const int g = static_cast<int>(lambda.size());
    if (v.genus() != g) throw std::invalid_argument("upsilon_inverse: genus mismatch");
    const auto nset = zero_set(lambda);
    TensorVector r(static_cast<int>(nset.size()));
    for (auto [m, c] : v.terms()) {
        if (weight_of(m, g) != lambda) return std::nullopt;
        SignWord eps = 0;
        for (std::size_t k = 0; k < nset.size(); ++k)
            if (m & gen_a(g, nset[k])) eps |= SignWord(1) << k;
        const auto [mm, s] = upsilon_mono(lambda, eps);
        if (mm != m) return std::nullopt;
        r.add(eps, s == 1 ? c : checked_mul(c, -1));
    }
    return r;
}

namespace {
// genus g monomial -> genus g+1 monomial (b generators shift by one)
Mono lift_mono(Mono m, int g) {
    const Mono a = m & ((Mono(1) << g) - 1);
    const Mono b = m >> g;
    return a | (b << (g + 1));
}
}  // namespace

ExteriorVector handle_plus(const ExteriorVector& v) {
    const int g = v.genus();
    ExteriorVector r(g + 1);
    const Mono extra = gen_a(g + 1, g + 1);
    for (auto [m, c] : v.terms()) {
        const Mono lm = lift_mono(m, g);
        r.add(lm | extra, checked_mul(c, wedge_sign(lm, extra)));
    }
    return r;
}

ExteriorVector handle_minus(const ExteriorVector& v) {
    const int g1 = v.genus();
    if (g1 < 1) throw std::invalid_argument("handle_minus: genus must be >= 1");
    const int g = g1 - 1;
    ExteriorVector r(g);
    const Mono extra = gen_a(g1, g1), extra_b = gen_b(g1, g1);
    for (auto [m, c] : v.terms()) {
        if (!(m & extra) || (m & extra_b)) continue;
        const Mono lm = m & ~extra;
        const Mono a = lm & ((Mono(1) << g) - 1);
        const Mono b = lm >> (g + 1);
        r.add(a | (b << g), checked_mul(c, wedge_sign(lm, extra)));
    }
    return r;
}

std::int64_t lefschetz_dim_formula(int j, int g) {
    std::int64_t s = 0;
    for (int n = 0; n <= g; ++n) {
        if (n + 1 < j || (n + 1 - j) % 2 != 0) continue;
        s = checked_add(s, checked_mul(checked_mul(binomial(g, n), checked_pow(2, g - n)), catalan(n, (n + 1 - j) / 2)));
    }
    return s;
}

LefschetzBasis lefschetz_basis(int j, int g) {
    if (g < 1 || g > kMaxGenus) throw std::invalid_argument("lefschetz_basis: genus out of range");
    if (j < 1 || j > g + 1) throw std::invalid_argument("lefschetz_basis: need 1 <= j <= g+1");
    LefschetzBasis lb;
    lb.g = g;
    lb.j = j;
    for (const auto& lambda : all_weights(g)) {
        const int n = static_cast<int>(zero_set(lambda).size());
        if (n + 1 < j || (n + 1 - j) % 2 != 0) continue;
        auto it = lb.specht_by_n.find(n);
        if (it == lb.specht_by_n.end()) it = lb.specht_by_n.emplace(n, specht_basis(n, j)).first;
        LefschetzBlock blk{lambda, n, lb.vectors.size()};
        for (const auto& x : it->second.vectors) lb.vectors.push_back(upsilon(lambda, x));
        lb.block_of.emplace(lambda, lb.blocks.size());
        lb.blocks.push_back(blk);
    }
    return lb;
}

std::optional<std::vector<std::int64_t>> lefschetz_coordinates(const LefschetzBasis& lb, const ExteriorVector& v) {
    std::vector<std::int64_t> out(lb.dim(), 0);
    for (const auto& [lambda, comp] : weight_decompose(v)) {
        auto it = lb.block_of.find(lambda);
        if (it == lb.block_of.end()) return std::nullopt;
        const auto& blk = lb.blocks[it->second];
        auto x = upsilon_inverse(lambda, comp);
        if (!x) return std::nullopt;
        auto coords = specht_coordinates(lb.specht(blk), *x);
        if (!coords) return std::nullopt;
        std::copy(coords->begin(), coords->end(), out.begin() + blk.offset);
    }
    return out;
}

std::optional<FpVec> lefschetz_coordinates_mod(const LefschetzBasis& lb, const ExteriorVector& v, std::uint32_t p) {
    FpVec out(lb.dim(), 0);
    for (const auto& [lambda, comp] : weight_decompose(v)) {
        bool zero_mod_p = true;
        for (auto [m, c] : comp.terms()) zero_mod_p = zero_mod_p && mod_p(c, p) == 0;
        if (zero_mod_p) continue;
        auto it = lb.block_of.find(lambda);
        if (it == lb.block_of.end()) return std::nullopt;
        const auto& blk = lb.blocks[it->second];
        auto x = upsilon_inverse(lambda, comp);
        if (!x) return std::nullopt;
        auto coords = specht_coordinates_mod(lb.specht(blk), *x, p);
        if (!coords) return std::nullopt;
        std::copy(coords->begin(), coords->end(), out.begin() + blk.offset);
    }
    return out;
}

IntMatrix lefschetz_action_matrix(const LefschetzBasis& lb, const SpWord& w) {
    IntMatrix m(lb.dim(), lb.dim());
    for (std::size_t c = 0; c < lb.dim(); ++c) {
        auto coords = lefschetz_coordinates(lb, sp_action(w, lb.vectors[c]));
        if (!coords) throw std::logic_error("word does not preserve V^(j)");
        for (std::size_t r = 0; r < lb.dim(); ++r) m.at(r, c) = (*coords)[r];
    }
    return m;
}

FpMatrix ModularLefschetz::action(const SpWord& w) const { return lefschetz_action_matrix(basis, w).mod(p); }

ModularLefschetz modular_lefschetz(std::uint32_t p, int j, int g, bool reverse_pivots) {
    require_odd_prime(p, "modular_lefschetz");
    ModularLefschetz ml;
    ml.p = p;
    ml.basis = lefschetz_basis(j, g);
    const std::size_t d = ml.basis.dim();
    FpMatrix gram(d, d, p);
    // distinct weight spaces are orthogonal
    for (const auto& blk : ml.basis.blocks) {
        const std::size_t sz = ml.basis.specht(blk).dim();
        for (std::size_t a = 0; a < sz; ++a)
            for (std::size_t b = a; b < sz; ++b) {
                const auto v = inner_product(ml.basis.vectors[blk.offset + a], ml.basis.vectors[blk.offset + b]);
                gram.set(blk.offset + a, blk.offset + b, v);
                gram.set(blk.offset + b, blk.offset + a, v);
            }
    }
    ml.quotient = RadicalQuotient(gram, reverse_pivots);
    return ml;
}

std::uint32_t modular_quotient_trace(std::uint32_t p, int j, const SpWord& w, int g) {
    const ModularLefschetz ml = modular_lefschetz(p, j, g);
    if (ml.dim() == 0) return 0;
    return ml.quotient.trace(ml.action(w));
}

AlexanderDecomposition alexander_trace(const SpWord& w, int g) {
    for (const auto& t : w)
        if (!t.is_group()) throw std::invalid_argument("alexander_trace: word must consist of group tokens");
    AlexanderDecomposition ad;
    for (Mono m = 0; m < (Mono(1) << (2 * g)); ++m) {
        const std::int64_t c = sp_action(w, ExteriorVector::basis(g, m)).coeff(m);
        if (c) ad.T.add_term(g - __builtin_popcount(m), c);
    }
    for (int j = 1; j <= g + 1; ++j) {
        const std::int64_t tj = lefschetz_action_matrix(lefschetz_basis(j, g), w).trace();
        ad.t.push_back(tj);
        ad.recombined += quantum_integer(j).scaled(tj);
    }
    return ad;
}

Theorem3Result theorem3_check(std::uint32_t p, const SpWord& w, int g, int sign) {
    require_odd_prime(p, "theorem3_check");
    if (sign != 1 && sign != -1) throw std::invalid_argument("theorem3_check: sign must be +1 or -1");
    const int P = static_cast<int>(p);
    const AlexanderDecomposition ad = alexander_trace(w, g);
    Theorem3Result r{cyclotomic_eval(ad.T, P, -sign, p), CyclotomicElem(P, p), {}};
    for (int k = 1; k <= P - 1; ++k) r.traces.push_back(k <= g + 1 ? modular_quotient_trace(p, k, w, g) : 0);
    for (int k = 1; k <= (P - 1) / 2; ++k) {
        const std::int64_t tk = r.traces[k - 1], tpk = r.traces[P - k - 1];
        const std::int64_t coef = sign == 1 ? ((k % 2 == 1 ? 1 : -1) * (tk + tpk)) : (tk - tpk);
        r.rhs = r.rhs + quantum_integer_at(k, P, 1, p).scaled(coef);
    }
    return r;
}

}  // namespace modres
