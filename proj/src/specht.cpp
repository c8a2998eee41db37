#include "modres/specht.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "modres/arith.hpp"

namespace modres {

Diagram2::Diagram2(int a_, int b_) : a(a_), b(b_) {
    if (b < 0 || a < b) throw std::invalid_argument("Diagram2: need a >= b >= 0");
}

Diagram2 Diagram2::from_weight(int n, int c) {
    if (c < 1 || c > n + 1 || (n + 1 - c) % 2 != 0)
        throw std::invalid_argument("weight c must satisfy 1 <= c <= n+1 and c = n+1 mod 2");
    const int b = (n + 1 - c) / 2;
    return Diagram2(n - b, b);
}

std::string Diagram2::to_string() const { return "[" + std::to_string(a) + "," + std::to_string(b) + "]"; }

bool Tableau2::is_standard() const {
    for (std::size_t i = 1; i < top.size(); ++i)
        if (top[i - 1] >= top[i]) return false;
    for (std::size_t i = 1; i < bottom.size(); ++i)
        if (bottom[i - 1] >= bottom[i]) return false;
    for (std::size_t i = 0; i < bottom.size(); ++i)
        if (top[i] >= bottom[i]) return false;
    return true;
}

Tableau2 Tableau2::from_bottom(int n, SignWord bottom) {
    Tableau2 t;
    for (int i = 1; i <= n; ++i) ((bottom >> (i - 1)) & 1 ? t.bottom : t.top).push_back(i);
    return t;
}

std::string Tableau2::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < top.size(); ++i) os << (i ? " " : "") << top[i];
    os << " / ";
    for (std::size_t i = 0; i < bottom.size(); ++i) os << (i ? " " : "") << bottom[i];
    os << ']';
    return os.str();
}

TensorVector tabloid_vector(const Tabloid2& t) { return TensorVector::basis(t.n, t.bottom); }

TensorVector polytabloid(const Tableau2& t) {
    const int n = static_cast<int>(t.top.size() + t.bottom.size());
    if (t.bottom.size() > t.top.size()) throw std::invalid_argument("polytabloid: bottom row longer than top");
    SignWord base = 0;
    std::vector<bool> seen(n + 1, false);
    auto check = [&](int x) {
        if (x < 1 || x > n || seen[x]) throw std::invalid_argument("polytabloid: labels must be a permutation of 1..n");
        seen[x] = true;
    };
    for (int x : t.top) check(x);
    for (int x : t.bottom) {
        check(x);
        base |= SignWord(1) << (x - 1);
    }
    const std::size_t b = t.bottom.size();
    TensorVector v(n);
    for (std::uint32_t s = 0; s < (1u << b); ++s) {
        SignWord w = base;
        for (std::size_t k = 0; k < b; ++k)
            if ((s >> k) & 1) {
                w &= ~(SignWord(1) << (t.bottom[k] - 1));
                w |= SignWord(1) << (t.top[k] - 1);
            }
        v.add(w, (__builtin_popcount(s) & 1) ? -1 : 1);
    }
    return v;
}

SpechtBasis specht_basis(int n, int c) {
    const Diagram2 d = Diagram2::from_weight(n, c);
    if (n > kMaxTensorLength) throw std::invalid_argument("specht_basis: n too large");
    SpechtBasis sb;
    sb.n = n;
    sb.c = c;
    sb.b = d.b;
    // b-subsets of 1..n in lexicographic order of their increasing sequences
    std::vector<int> cur(d.b);
    for (int i = 0; i < d.b; ++i) cur[i] = i + 1;
    while (true) {
        SignWord mask = 0;
        for (int x : cur) mask |= SignWord(1) << (x - 1);
        Tableau2 t = Tableau2::from_bottom(n, mask);
        if (t.is_standard()) {
            sb.lead_index.emplace(mask, sb.tableaux.size());
            sb.vectors.push_back(polytabloid(t));
            sb.tableaux.push_back(std::move(t));
        }
        int i = d.b - 1;
        while (i >= 0 && cur[i] == n - d.b + i + 1) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < d.b; ++j) cur[j] = cur[j - 1] + 1;
    }
    return sb;
}

namespace {
// Every non-leading tabloid of a standard polytabloid has a numerically smaller mask.
template <class Reduce>
bool triangular_reduce(const SpechtBasis& sb, TensorVector v, std::vector<std::int64_t>& coords, Reduce reduce) {
    coords.assign(sb.dim(), 0);
    while (!v.is_zero()) {
        auto top = std::prev(v.terms().end());
        auto it = sb.lead_index.find(top->first);
        if (it == sb.lead_index.end()) return false;
        const std::int64_t c = top->second;
        coords[it->second] = c;
        v -= sb.vectors[it->second].scaled(c);
        v = reduce(v);
    }
    return true;
}
}  // namespace

std::optional<std::vector<std::int64_t>> specht_coordinates(const SpechtBasis& sb, const TensorVector& v) {
    if (v.length() != sb.n) throw std::invalid_argument("specht_coordinates: length mismatch");
    std::vector<std::int64_t> coords;
    if (!triangular_reduce(sb, v, coords, [](TensorVector x) { return x; })) return std::nullopt;
    return coords;
}

std::optional<FpVec> specht_coordinates_mod(const SpechtBasis& sb, const TensorVector& v, std::uint32_t p) {
    if (v.length() != sb.n) throw std::invalid_argument("specht_coordinates_mod: length mismatch");
    std::vector<std::int64_t> coords;
    if (!triangular_reduce(sb, v.reduced_mod(p), coords, [p](const TensorVector& x) { return x.reduced_mod(p); }))
        return std::nullopt;
    FpVec out(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) out[i] = mod_p(coords[i], p);
    return out;
}

IntMatrix gram_matrix(const std::vector<TensorVector>& vs) {
    IntMatrix g(vs.size(), vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i; j < vs.size(); ++j) g.at(i, j) = g.at(j, i) = inner_product(vs[i], vs[j]);
    return g;
}

bool verify_specht_basis(const SpechtBasis& sb, std::uint32_t q) {
    const int n = sb.n;
    for (const auto& v : sb.vectors) {
        if (!apply_sl2(Sl2::F, v).is_zero()) return false;
        if (!(apply_sl2(Sl2::H, v) == v.scaled(1 - sb.c))) return false;
    }
    // weight space: words with b plus signs; F maps into words with b-1
    std::vector<SignWord> dom, cod;
    for (SignWord w = 0; w < (SignWord(1) << n); ++w) {
        const int pc = __builtin_popcount(w);
        if (pc == sb.b) dom.push_back(w);
        if (pc == sb.b - 1) cod.push_back(w);
    }
    std::map<SignWord, std::size_t> cod_index, dom_index;
    for (std::size_t i = 0; i < cod.size(); ++i) cod_index[cod[i]] = i;
    for (std::size_t i = 0; i < dom.size(); ++i) dom_index[dom[i]] = i;
    std::size_t kernel_dim = dom.size();
    if (!cod.empty()) {
        FpMatrix f(cod.size(), dom.size(), q);
        for (std::size_t j = 0; j < dom.size(); ++j)
            for (int k = 0; k < n; ++k)
                if ((dom[j] >> k) & 1) f.at(cod_index[dom[j] & ~(SignWord(1) << k)], j) = 1;
        kernel_dim = dom.size() - rank(f);
    }
    if (kernel_dim != sb.dim()) return false;
    FpMatrix basis(dom.size(), sb.dim(), q);
    for (std::size_t j = 0; j < sb.dim(); ++j)
        for (auto [w, c] : sb.vectors[j].terms()) basis.set(dom_index.at(w), j, c);
    return rank(basis) == sb.dim();
}

IntMatrix specht_action_matrix(const SpechtBasis& sb, const Permutation& sigma) {
    IntMatrix m(sb.dim(), sb.dim());
    for (std::size_t j = 0; j < sb.dim(); ++j) {
        auto coords = specht_coordinates(sb, perm_action(sigma, sb.vectors[j]));
        if (!coords) throw std::logic_error("Specht module not closed under the symmetric group");
        for (std::size_t i = 0; i < sb.dim(); ++i) m.at(i, j) = (*coords)[i];
    }
    return m;
}

std::int64_t ordinary_character(const Diagram2& tau, const Permutation& sigma) {
    if (sigma.size() != tau.n()) throw std::invalid_argument("ordinary_character: permutation size differs from n");
    const SpechtBasis sb = specht_basis(tau.n(), tau.c());
    std::int64_t tr = 0;
    for (std::size_t j = 0; j < sb.dim(); ++j) {
        auto coords = specht_coordinates(sb, perm_action(sigma, sb.vectors[j]));
        if (!coords) throw std::logic_error("Specht module not closed under the symmetric group");
        tr = checked_add(tr, (*coords)[j]);
    }
    return tr;
}

std::int64_t catalan(int n, int j) { return checked_sub(binomial(n, j), binomial(n, j - 1)); }

}  // namespace modres
