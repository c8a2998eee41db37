#include "modres/jm_extension.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "modres/arith.hpp"
#include "modres/dims_fusion.hpp"
#include "modres/resolution.hpp"

namespace modres {

IntMatrix j_matrix(int g) {
    IntMatrix m(2 * g, 2 * g);
    for (int i = 0; i < g; ++i) {
        m.at(g + i, i) = 1;   // a_i -> b_i
        m.at(i, g + i) = -1;  // b_i -> -a_i
    }
    return m;
}

ExteriorVector apply_J(const ExteriorVector& x) { return apply_h_matrix_automorphism(j_matrix(x.genus()), x); }

std::int64_t symplectic_pairing(const ExteriorVector& x, const ExteriorVector& y) {
    const int g = x.genus();
    if (y.genus() != g) throw std::invalid_argument("symplectic_pairing: genus mismatch");
    for (const auto* v : {&x, &y})
        for (const auto& [m, c] : v->terms())
            if (__builtin_popcount(m) != 1) throw std::invalid_argument("symplectic_pairing: arguments must lie in H");
    std::int64_t s = 0;
    for (int i = 1; i <= g; ++i) {
        s = checked_add(s, checked_mul(x.coeff(gen_a(g, i)), y.coeff(gen_b(g, i))));
        s = checked_sub(s, checked_mul(x.coeff(gen_b(g, i)), y.coeff(gen_a(g, i))));
    }
    return s;
}

std::optional<int> homogeneous_degree(const ExteriorVector& x) {
    std::optional<int> d;
    for (const auto& [m, c] : x.terms()) {
        const int k = __builtin_popcount(m);
        if (d && *d != k) return std::nullopt;
        d = k;
    }
    return d;
}

ExteriorVector nu(const ExteriorVector& x, const ExteriorVector& v) {
    if (!x.is_zero() && !homogeneous_degree(x)) throw std::invalid_argument("nu: x must be homogeneous");
    return wedge(x, v);
}

ExteriorVector mu(const ExteriorVector& x, const ExteriorVector& v) {
    if (!x.is_zero() && !homogeneous_degree(x)) throw std::invalid_argument("mu: x must be homogeneous");
    if (x.genus() != v.genus()) throw std::invalid_argument("mu: genus mismatch");
    const ExteriorVector jx = apply_J(x);
    ExteriorVector out(v.genus());
    // adjoint of Z -> X ^ Z: Y -> sign(X, Y\X) (Y\X) when X is contained in Y
    for (const auto& [xm, xc] : jx.terms())
        for (const auto& [ym, yc] : v.terms()) {
            if ((xm & ym) != xm) continue;
            const Mono z = ym & ~xm;
            out.add(z, checked_mul(checked_mul(xc, yc), wedge_sign(xm, z)));
        }
    return out;
}

// ---------------------------------------------------------------- nu and mu identities

namespace {
std::vector<Mono> monos_of_degree(int g, int m) {
    std::vector<Mono> out;
    for (Mono x = 0; x < (Mono(1) << (2 * g)); ++x)
        if (__builtin_popcount(x) == m) out.push_back(x);
    return out;
}

ExteriorVector random_homogeneous(std::mt19937_64& rng, int g, int m) {
    const auto ms = monos_of_degree(g, m);
    ExteriorVector x(g);
    if (ms.empty()) return x;
    while (x.is_zero()) {
        const int terms = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < terms; ++t) x.add(ms[rng() % ms.size()], static_cast<std::int64_t>(rng() % 5) - 2);
    }
    return x;
}

template <class A, class B>
bool same_operator(int g, A lhs, B rhs) {
    for (Mono m = 0; m < (Mono(1) << (2 * g)); ++m) {
        const auto v = ExteriorVector::basis(g, m);
        if (!(lhs(v) == rhs(v))) return false;
    }
    return true;
}

Check named(const std::string& name, bool ok, const std::string& det) { return Check{name, ok, det}; }
}  // namespace

std::vector<Check> lemma16_check(int g, std::uint64_t seed) {
    if (g < 1 || g > 4) throw std::invalid_argument("lemma16_check: need 1 <= g <= 4");
    std::mt19937_64 rng(seed);
    bool cov = true, hom = true, gens = true, anti = true, comm = true;
    const ExteriorVector w = omega(g);
    gens = same_operator(g, [&](const auto& v) { return nu(w, v); }, [](const auto& v) { return lefschetz_E(v); }) &&
           same_operator(g, [&](const auto& v) { return mu(w, v); }, [](const auto& v) { return lefschetz_F(v); });
    const int instances = 20;
    for (int m = 1; m <= 3; ++m)
        for (int t = 0; t < instances; ++t) {
            const ExteriorVector x = random_homogeneous(rng, g, m);
            const ExteriorVector y = random_homogeneous(rng, g, 1 + static_cast<int>(rng() % 3));
            SpWord word = random_group_word(rng, g, 4);
            const IntMatrix hinv = symplectic_inverse(word_h_matrix(word, g), g);
            const ExteriorVector gx = sp_action(word, x);
            cov = cov && same_operator(
                             g, [&](const auto& v) { return sp_action(word, nu(x, apply_h_matrix_automorphism(hinv, v))); },
                             [&](const auto& v) { return nu(gx, v); });
            cov = cov && same_operator(
                             g, [&](const auto& v) { return sp_action(word, mu(x, apply_h_matrix_automorphism(hinv, v))); },
                             [&](const auto& v) { return mu(gx, v); });
            const ExteriorVector xy = wedge(x, y);
            hom = hom && same_operator(g, [&](const auto& v) { return nu(xy, v); }, [&](const auto& v) { return nu(x, nu(y, v)); });
            hom = hom && same_operator(g, [&](const auto& v) { return mu(xy, v); }, [&](const auto& v) { return mu(y, mu(x, v)); });
            gens = gens && same_operator(g, [&](const auto& v) { return lefschetz_E(nu(x, v)); },
                                         [&](const auto& v) { return nu(x, lefschetz_E(v)); });
            gens = gens && same_operator(g, [&](const auto& v) { return lefschetz_F(mu(x, v)); },
                                         [&](const auto& v) { return mu(x, lefschetz_F(v)); });
            // items 4 and 5 are for x, y in H
            const ExteriorVector h1 = random_homogeneous(rng, g, 1), h2 = random_homogeneous(rng, g, 1);
            const std::int64_t pr = symplectic_pairing(h1, h2);
            anti = anti && same_operator(g, [&](const auto& v) { return mu(h1, nu(h2, v)) + nu(h2, mu(h1, v)); },
                                         [&](const auto& v) { return v.scaled(pr); });
            comm = comm && same_operator(g, [&](const auto& v) { return lefschetz_E(mu(h1, v)) - mu(h1, lefschetz_E(v)); },
                                         [&](const auto& v) { return nu(h1, v); });
            // adjoint of the first relation: with mu = nu(J .)^* and J^{-1} = -J the sign is +
            comm = comm && same_operator(g, [&](const auto& v) { return lefschetz_F(nu(h1, v)) - nu(h1, lefschetz_F(v)); },
                                         [&](const auto& v) { return mu(h1, v); });
        }
    const std::string d = "g=" + std::to_string(g) + ", m<=3, " + std::to_string(instances) + " instances per degree";
    return {named("nu_mu.covariance", cov, d), named("nu_mu.homomorphism", hom, d),
            named("nu_mu.generators", gens, d), named("nu_mu.anticommutator", anti, d),
            named("nu_mu.commutators", comm, d)};
}

// ---------------------------------------------------------------- quotient space

JmQuotientSpace::JmQuotientSpace(std::uint32_t p, int m, int g) : p_(p), m_(m), g_(g) {
    require_odd_prime(p, "JmQuotientSpace");
    if (g < 1 || g > kMaxGenus) throw std::invalid_argument("JmQuotientSpace: genus out of range");
    if (m < 0 || m > 2 * g) throw std::invalid_argument("JmQuotientSpace: degree out of range");
    monos_ = monos_of_degree(g, m);
    std::vector<FpVec> rows;
    if (m >= 2) {
        const ExteriorVector w = omega(g);
        for (Mono z : monos_of_degree(g, m - 2)) rows.push_back(coords(wedge(w, ExteriorVector::basis(g, z))));
    }
    FpMatrix sub(rows.size(), monos_.size(), p);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < monos_.size(); ++c) sub.at(r, c) = rows[r][c];
    RowEchelon re = row_reduce(sub);
    rref_ = re.rref;
    pivot_cols_ = re.pivot_cols;
    std::vector<bool> piv(monos_.size(), false);
    for (auto c : pivot_cols_) piv[c] = true;
    for (std::size_t c = 0; c < monos_.size(); ++c)
        if (!piv[c]) free_.push_back(monos_[c]);
}

FpVec JmQuotientSpace::coords(const ExteriorVector& x) const {
    FpVec v(monos_.size(), 0);
    for (const auto& [m, c] : x.terms()) {
        auto it = std::lower_bound(monos_.begin(), monos_.end(), m);
        if (it == monos_.end() || *it != m) throw std::invalid_argument("JmQuotientSpace: vector not of degree m");
        v[it - monos_.begin()] = mod_p(c, p_);
    }
    return v;
}

FpVec JmQuotientSpace::reduce(const FpVec& x) const {
    if (x.size() != monos_.size()) throw std::invalid_argument("JmQuotientSpace::reduce: size mismatch");
    FpVec v = x;
    for (std::size_t r = 0; r < pivot_cols_.size(); ++r) {
        const std::uint32_t f = v[pivot_cols_[r]];
        if (!f) continue;
        for (std::size_t c = 0; c < v.size(); ++c)
            v[c] = static_cast<std::uint32_t>((v[c] + std::uint64_t(p_ - f) * rref_.at(r, c)) % p_);
    }
    return v;
}

ExteriorVector JmQuotientSpace::lift(const FpVec& x) const {
    ExteriorVector v(g_);
    for (std::size_t c = 0; c < monos_.size(); ++c)
        if (x[c]) v.add(monos_[c], x[c]);
    return v;
}

FpVec JmQuotientSpace::act(const SpWord& w, const FpVec& x) const {
    for (const auto& t : w)
        if (!t.is_group()) throw std::invalid_argument("JmQuotientSpace::act: group tokens only");
    return reduce(coords(sp_action(w, lift(x))));
}

JmElement jm_identity(const JmQuotientSpace& q, std::int64_t a) {
    if (mod_p(a, q.prime()) == 0) throw std::invalid_argument("JM element: denominator divisible by p");
    return JmElement{FpVec(q.monomials().size(), 0), {}, a};
}

JmElement jm_abelian(const JmQuotientSpace& q, const ExteriorVector& x, std::int64_t a) {
    JmElement e = jm_identity(q, a);
    e.x = q.reduce(q.coords(x));
    return e;
}

JmElement jm_group(const JmQuotientSpace& q, const SpWord& w, std::int64_t a) {
    JmElement e = jm_identity(q, a);
    for (const auto& t : w)
        if (!t.is_group()) throw std::invalid_argument("jm_group: group tokens only");
    e.gamma = w;
    return e;
}

JmElement jm_multiply(const JmQuotientSpace& q, const JmElement& e1, const JmElement& e2) {
    if (e1.a != e2.a) throw std::invalid_argument("jm_multiply: elements of different JM_a");
    JmElement e = e1;
    const FpVec gx = q.act(e1.gamma, e2.x);
    for (std::size_t c = 0; c < e.x.size(); ++c) e.x[c] = (e.x[c] + gx[c]) % q.prime();
    e.x = q.reduce(e.x);
    e.gamma.insert(e.gamma.end(), e2.gamma.begin(), e2.gamma.end());
    return e;
}

JmElement jm_random(const JmQuotientSpace& q, std::mt19937_64& rng, std::int64_t a) {
    JmElement e = jm_identity(q, a);
    for (auto& c : e.x) c = static_cast<std::uint32_t>(rng() % q.prime());
    e.x = q.reduce(e.x);
    e.gamma = random_group_word(rng, q.genus(), 4);
    return e;
}

std::string jm_to_string(const JmQuotientSpace& q, const JmElement& e) {
    std::ostringstream os;
    os << "(" << q.lift(e.x).to_string();
    if (e.a != 1) os << " / " << e.a;
    os << ", " << word_to_string(e.gamma) << ")";
    return os.str();
}

std::string to_string(JmVariant v) {
    switch (v) {
        case JmVariant::Full: return "full";
        case JmVariant::Radical: return "radical";
        case JmVariant::Quotient: return "quotient";
    }
    return "?";
}

JmVariant parse_variant(const std::string& s) {
    if (s == "full") return JmVariant::Full;
    if (s == "radical") return JmVariant::Radical;
    if (s == "quotient") return JmVariant::Quotient;
    throw std::invalid_argument("unknown variant '" + s + "' (full, radical, quotient)");
}

// ---------------------------------------------------------------- block modules

BlockModule::BlockModule(std::uint32_t p, int j, int m, int g, JmVariant variant)
    : p_(p), j_(j), m_(m), g_(g), variant_(variant), space_(p, m, g), top_(modular_lefschetz(p, j, g)) {
    if (m < 1) throw std::invalid_argument("BlockModule: need m >= 1");
    if (j + m <= g + 1) bottom_ = modular_lefschetz(p, j + m, g);
    auto dim_of = [&](const ModularLefschetz& ml) -> std::size_t {
        switch (variant_) {
            case JmVariant::Full: return ml.basis.dim();
            case JmVariant::Radical: return ml.quotient.radical_dim();
            case JmVariant::Quotient: return ml.dim();
        }
        return 0;
    };
    top_dim_ = dim_of(top_);
    bottom_dim_ = bottom_ ? dim_of(*bottom_) : 0;
    for (Mono x : space_.monomials()) {
        if (!bottom_) {
            mu_basis_.emplace_back(0, top_dim_, p);
            continue;
        }
        const ExteriorVector xv = ExteriorVector::basis(g, x);
        const FpMatrix full = lefschetz_map_mod(top_.basis, bottom_->basis, p, [&](const ExteriorVector& v) { return mu(xv, v); });
        mu_basis_.push_back(restrict_between(full));
    }
}

FpMatrix BlockModule::restrict_top(const FpMatrix& full) const {
    switch (variant_) {
        case JmVariant::Full: return full;
        case JmVariant::Quotient: return top_.quotient.induced(full);
        case JmVariant::Radical: {
            const FpMatrix& r = top_.quotient.radical_basis();
            auto s = solve_many(r, full * r);
            if (!s) throw std::logic_error("BlockModule: action does not preserve the radical");
            return *s;
        }
    }
    return full;
}

FpMatrix BlockModule::restrict_bottom(const FpMatrix& full) const {
    switch (variant_) {
        case JmVariant::Full: return full;
        case JmVariant::Quotient: return bottom_->quotient.induced(full);
        case JmVariant::Radical: {
            const FpMatrix& r = bottom_->quotient.radical_basis();
            auto s = solve_many(r, full * r);
            if (!s) throw std::logic_error("BlockModule: action does not preserve the radical");
            return *s;
        }
    }
    return full;
}

FpMatrix BlockModule::restrict_between(const FpMatrix& full) const {
    switch (variant_) {
        case JmVariant::Full: return full;
        case JmVariant::Quotient: return induced_between(top_.quotient, bottom_->quotient, full);
        case JmVariant::Radical: {
            const FpMatrix& rs = top_.quotient.radical_basis();
            const FpMatrix& rd = bottom_->quotient.radical_basis();
            if (rs.cols() == 0) return FpMatrix(rd.cols(), 0, p_);
            auto s = solve_many(rd, full * rs);
            if (!s) throw std::logic_error("BlockModule: mu(x) does not map the radical into the radical");
            return *s;
        }
    }
    return full;
}

FpMatrix BlockModule::group_top(const SpWord& w) const { return restrict_top(top_.action(w)); }

FpMatrix BlockModule::group_bottom(const SpWord& w) const {
    if (!bottom_) return FpMatrix(0, 0, p_);
    return restrict_bottom(bottom_->action(w));
}

FpMatrix BlockModule::mu_matrix(const FpVec& x) const {
    if (x.size() != mu_basis_.size()) throw std::invalid_argument("BlockModule::mu_matrix: coordinate size mismatch");
    FpMatrix out(bottom_dim_, top_dim_, p_);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) out = out + mu_basis_[i].scaled(x[i]);
    return out;
}

FpMatrix BlockModule::action(const JmElement& e) const {
    const FpMatrix gt = group_top(e.gamma), gb = group_bottom(e.gamma);
    FpVec xs = e.x;
    const std::uint32_t ainv = inv_mod(static_cast<std::uint32_t>(mod_p(e.a, p_)), p_);
    for (auto& c : xs) c = static_cast<std::uint32_t>(std::uint64_t(c) * ainv % p_);
    const FpMatrix low = mu_matrix(xs) * gt;
    FpMatrix out(dim(), dim(), p_);
    for (std::size_t r = 0; r < top_dim_; ++r)
        for (std::size_t c = 0; c < top_dim_; ++c) out.at(r, c) = gt.at(r, c);
    for (std::size_t r = 0; r < bottom_dim_; ++r) {
        for (std::size_t c = 0; c < top_dim_; ++c) out.at(top_dim_ + r, c) = low.at(r, c);
        for (std::size_t c = 0; c < bottom_dim_; ++c) out.at(top_dim_ + r, top_dim_ + c) = gb.at(r, c);
    }
    return out;
}

FpVec BlockModule::apply(const JmElement& e, const FpVec& v) const {
    if (v.size() != dim()) throw std::invalid_argument("BlockModule::apply: dimension mismatch");
    return action(e).apply(v);
}

FpMatrix mu_induced(std::uint32_t p, int j, int m, int g, const ExteriorVector& x, JmVariant variant) {
    const auto d = homogeneous_degree(x);
    if (!x.is_zero() && (!d || *d != m)) throw std::invalid_argument("mu_induced: x must be homogeneous of degree m");
    const BlockModule mod(p, j, m, g, variant);
    return mod.mu_matrix(mod.space().coords(x));
}

// ---------------------------------------------------------------- induced maps and radicals

std::vector<Check> lemma17_check(std::uint32_t p, int k, int m, int g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Check> out;
    const std::string tag = "p=" + std::to_string(p) + " k=" + std::to_string(k) + " m=" + std::to_string(m) +
                            " g=" + std::to_string(g);

    // mu(omega ^ y) vanishes on ker F
    bool kills = true;
    if (m >= 2 && k + m <= g + 1) {
        const auto lb = lefschetz_basis(k, g);
        for (Mono z : monos_of_degree(g, m - 2)) {
            const ExteriorVector x = wedge(omega(g), ExteriorVector::basis(g, z));
            for (const auto& v : lb.vectors) kills = kills && mu(x, v).is_zero();
        }
    }
    out.push_back(named("induced.omega_kills_kerF", kills, tag));

    // covariance of the induced maps in every variant
    bool cov = true;
    for (JmVariant var : {JmVariant::Full, JmVariant::Radical, JmVariant::Quotient}) {
        const BlockModule mod(p, k, m, g, var);
        if (mod.bottom_dim() == 0 || mod.top_dim() == 0) continue;
        for (int t = 0; t < 5; ++t) {
            const ExteriorVector x = random_homogeneous(rng, g, m);
            const SpWord w = random_group_word(rng, g, 4);
            const FpMatrix lhs = mod.mu_matrix(mod.space().coords(sp_action(w, x))) * mod.group_top(w);
            const FpMatrix rhs = mod.group_bottom(w) * mod.mu_matrix(mod.space().coords(x));
            cov = cov && lhs == rhs;
        }
    }
    out.push_back(named("induced.covariance", cov, tag + " (full, radical, quotient)"));

    // mu(x) E^{l+m} w lies in im E^l, checked by rank over a large prime
    bool img_ok = true;
    const std::uint32_t q = 1000003;
    for (int l = 0; l <= 2; ++l)
        for (int t = 0; t < 6; ++t) {
            const int d = static_cast<int>(rng() % (2 * g + 1));
            if (d + 2 * (l + m) > 2 * g) continue;
            ExteriorVector v = random_homogeneous(rng, g, d);
            for (int s = 0; s < l + m; ++s) v = lefschetz_E(v);
            const ExteriorVector x = random_homogeneous(rng, g, 1 + static_cast<int>(rng() % std::min(m, 3)));
            const int xd = *homogeneous_degree(x);
            const ExteriorVector r = mu(x, v);
            const int rd = d + 2 * (l + m) - xd;
            // v lies in im E^{lp + xd}, so mu(x) v should lie in im E^{lp}
            const int lp = l + m - xd;
            const auto src = monos_of_degree(g, rd - 2 * lp), dst = monos_of_degree(g, rd);
            if (rd - 2 * lp < 0) {
                img_ok = img_ok && r.is_zero();
                continue;
            }
            FpMatrix a(dst.size(), src.size() + 1, q);
            for (std::size_t c = 0; c < src.size(); ++c) {
                ExteriorVector u = ExteriorVector::basis(g, src[c]);
                for (int s = 0; s < lp; ++s) u = lefschetz_E(u);
                for (std::size_t rr = 0; rr < dst.size(); ++rr) a.at(rr, c) = mod_p(u.coeff(dst[rr]), q);
            }
            const std::size_t base = rank(a);
            for (std::size_t rr = 0; rr < dst.size(); ++rr) a.at(rr, src.size()) = mod_p(r.coeff(dst[rr]), q);
            img_ok = img_ok && rank(a) == base;
        }
    out.push_back(named("induced.image_degrees", img_ok, tag));

    // radical of V_p^{(k)} equals V_p^{(k)} cap im E^{p-k}
    bool rad = true;
    std::ostringstream rd;
    for (int j : {k, k + m}) {
        if (j > g + 1 || j >= static_cast<int>(p)) continue;
        const ModularLefschetz ml = modular_lefschetz(p, j, g);
        const int deg = g - j + 1, e = static_cast<int>(p) - j;
        const auto dst = monos_of_degree(g, deg);
        const int sdeg = deg - 2 * e;
        FpMatrix im(dst.size(), 0, p);
        if (sdeg >= 0) {
            const auto src = monos_of_degree(g, sdeg);
            im = FpMatrix(dst.size(), src.size(), p);
            for (std::size_t c = 0; c < src.size(); ++c) {
                ExteriorVector u = ExteriorVector::basis(g, src[c]);
                for (int s = 0; s < e; ++s) u = lefschetz_E(u);
                for (std::size_t r = 0; r < dst.size(); ++r) im.set(r, c, u.coeff(dst[r]));
            }
        }
        FpMatrix vb(dst.size(), ml.basis.dim(), p);
        for (std::size_t c = 0; c < ml.basis.dim(); ++c)
            for (std::size_t r = 0; r < dst.size(); ++r) vb.set(r, c, ml.basis.vectors[c].coeff(dst[r]));
        auto hcat = [&](const FpMatrix& x, const FpMatrix& y) {
            FpMatrix z(x.rows(), x.cols() + y.cols(), p);
            for (std::size_t r = 0; r < x.rows(); ++r) {
                for (std::size_t c = 0; c < x.cols(); ++c) z.at(r, c) = x.at(r, c);
                for (std::size_t c = 0; c < y.cols(); ++c) z.at(r, x.cols() + c) = y.at(r, c);
            }
            return z;
        };
        const std::size_t ri = rank(im), rv = rank(vb);
        const std::size_t inter = rv + ri - rank(hcat(vb, im));
        const FpMatrix radm = vb * ml.quotient.radical_basis();
        const bool contained = rank(hcat(im, radm)) == ri;
        rad = rad && contained && inter == ml.quotient.radical_dim();
        rd << "j=" << j << ": radical " << ml.quotient.radical_dim() << ", intersection " << inter << "; ";
    }
    out.push_back(named("radical.radical_is_image", rad, tag + " " + rd.str()));

    // mu(x) maps the radical into the radical (construction throws otherwise)
    bool contain = true;
    try {
        const BlockModule mod(p, k, m, g, JmVariant::Radical);
        (void)mod;
    } catch (const std::logic_error&) {
        contain = false;
    }
    out.push_back(named("radical.radical_containment", contain, tag));
    return out;
}

// ---------------------------------------------------------------- non-splitness

bool equivariant_section_exists(const BlockModule& mod, const std::vector<JmElement>& gens) {
    const std::size_t dt = mod.top_dim(), db = mod.bottom_dim();
    if (db == 0 || dt == 0) return true;
    const std::uint32_t p = mod.prime();
    const std::size_t unknowns = db * dt;  // L(s, c) at s * dt + c
    FpMatrix a(gens.size() * unknowns, unknowns, p);
    FpVec rhs(gens.size() * unknowns, 0);
    std::size_t row = 0;
    for (const auto& e : gens) {
        const FpMatrix full = mod.action(e);
        // g_W L - L g_V = -(mu(x) g_V)
        for (std::size_t r = 0; r < db; ++r)
            for (std::size_t c = 0; c < dt; ++c, ++row) {
                for (std::size_t s = 0; s < db; ++s) {
                    auto& cell = a.at(row, s * dt + c);
                    cell = (cell + full.at(dt + r, dt + s)) % p;
                }
                for (std::size_t s = 0; s < dt; ++s) {
                    auto& cell = a.at(row, r * dt + s);
                    cell = (cell + p - full.at(s, c)) % p;
                }
                rhs[row] = (p - full.at(dt + r, c)) % p;
            }
    }
    return solve(a, rhs).has_value();
}

namespace {
std::vector<SpToken> sp_generators(int g) {
    SpWord gens;
    std::string s;
    for (int i = 1; i <= g; ++i) s += " S" + std::to_string(i) + " A" + std::to_string(i) + " B" + std::to_string(i);
    for (int i = 1; i < g; ++i) s += " P" + std::to_string(i) + " C" + std::to_string(i);
    return parse_word(s, g);
}
}  // namespace

WitnessReport nonsplit_witness(std::uint32_t p, int k, int g) {
    require_odd_prime(p, "nonsplit_witness");
    if (!(0 < k && k < static_cast<int>(p) - 3)) throw std::invalid_argument("nonsplit_witness: need 0 < k < p - 3");
    WitnessReport rep;
    rep.p = p;
    rep.k = k;
    rep.g = g;
    const BlockModule mod(p, k, 3, g, JmVariant::Quotient);
    rep.top_dim = mod.top_dim();
    rep.bottom_dim = mod.bottom_dim();
    rep.search_dim = mod.space().dim();
    if (rep.bottom_dim == 0 || rep.top_dim == 0) {
        rep.note = "a quotient factor is zero-dimensional; no witness can exist, increase g";
        return rep;
    }
    for (Mono x : mod.space().free_monomials()) {
        const FpMatrix mm = mod.mu_matrix(mod.space().coords(ExteriorVector::basis(g, x)));
        if (!mm.is_zero()) {
            rep.witness = x;
            rep.witness_rank = rank(mm);
            break;
        }
    }
    if (!rep.witness) {
        rep.note = "no basis class of wedge^3 H / omega ^ H induces a nonzero map; increase g";
        return rep;
    }
    std::vector<JmElement> gens;
    for (const auto& t : sp_generators(g)) gens.push_back(jm_group(mod.space(), {t}));
    std::vector<JmElement> control = gens;
    gens.push_back(jm_abelian(mod.space(), ExteriorVector::basis(g, *rep.witness)));
    control.push_back(jm_abelian(mod.space(), wedge(omega(g), ExteriorVector::basis(g, gen_a(g, 1)))));
    rep.section_exists = equivariant_section_exists(mod, gens);
    rep.control_section_exists = equivariant_section_exists(mod, control);
    rep.note = rep.section_exists ? "an equivariant section exists" : "no equivariant section: the extension does not split";
    return rep;
}

std::string WitnessReport::to_string() const {
    std::ostringstream os;
    os << "p=" << p << " k=" << k << " g=" << g << ": dim Vbar^(" << k << ")=" << top_dim << ", dim Vbar^(" << k + 3
       << ")=" << bottom_dim << ", search space " << search_dim << "\n";
    if (witness) {
        os << "  witness x = " << ExteriorVector::basis(g, *witness).to_string() << " (rank of induced map " << witness_rank
           << ")\n";
        os << "  section with witness: " << (section_exists ? "exists" : "none")
           << "; control (omega ^ a_1): " << (control_section_exists ? "exists" : "none") << "\n";
    }
    os << "  " << note << "\n";
    return os.str();
}

// ---------------------------------------------------------------- sequence of U-spaces

namespace {
StrandReport build_strand(std::uint32_t p, int label, int g) {
    StrandReport st;
    st.label = label;
    std::vector<std::vector<std::size_t>> dims_by_pos, ranks_by_pos;  // position 0 = quotient end
    for (int n = 0; n <= g; ++n) {
        if (n + 1 < label || (n + 1 - label) % 2 != 0) continue;
        const auto mult = static_cast<std::size_t>(checked_mul(binomial(g, n), checked_pow(2, g - n)));
        const ComplexOverFp cx = build_complex(p, n, label);
        const ExactnessReport er = verify_exactness(cx);
        st.composites_zero = st.composites_zero && er.composites_zero;
        st.exact = st.exact && er.exact;
        st.quotient_dim += mult * er.dim_quotient_from_complex;
        const std::size_t len = cx.dims.size();
        if (st.labels.size() < len) {
            st.labels.clear();
            for (std::size_t i = 0; i < len; ++i) st.labels.push_back(cx.spec.weights[len - 1 - i]);
            st.dims.resize(len, 0);
            st.ranks.resize(len > 0 ? len - 1 : 0, 0);
        }
        for (std::size_t i = 0; i < len; ++i) st.dims[i] += mult * cx.dims[len - 1 - i];
        for (std::size_t i = 0; i + 1 < len; ++i) st.ranks[i] += mult * er.nodes[len - 1 - i].dim_im;
    }
    std::reverse(st.labels.begin(), st.labels.end());
    std::reverse(st.dims.begin(), st.dims.end());
    std::reverse(st.ranks.begin(), st.ranks.end());
    st.expected_quotient_dim = static_cast<std::size_t>(verlinde_dim(static_cast<int>(p), label, g));
    return st;
}
}  // namespace

Sequence69Report sequence69_check(std::uint32_t p, int k, int g) {
    require_odd_prime(p, "sequence69_check");
    if (!(0 < k && k < static_cast<int>(p) - 3)) throw std::invalid_argument("sequence69_check: need 0 < k < p - 3");
    if (g < 1 || g > kMaxGenus) throw std::invalid_argument("sequence69_check: genus out of range");
    Sequence69Report rep;
    rep.p = p;
    rep.k = k;
    rep.g = g;
    rep.strands[0] = build_strand(p, k, g);
    rep.strands[1] = build_strand(p, k + 3, g);
    const std::size_t len = std::max(rep.strands[0].dims.size(), rep.strands[1].dims.size());
    rep.u_dims.assign(len, 0);
    for (const auto& st : rep.strands)
        for (std::size_t i = 0; i < st.dims.size(); ++i) rep.u_dims[len - st.dims.size() + i] += st.dims[i];
    for (const auto& st : rep.strands) {
        rep.composites_zero = rep.composites_zero && st.composites_zero;
        rep.exact = rep.exact && st.exact && st.quotient_dim == st.expected_quotient_dim;
    }
    return rep;
}

bool Sequence69Report::pass() const noexcept { return composites_zero && exact; }

std::string Sequence69Report::to_string() const {
    std::ostringstream os;
    os << "p=" << p << " k=" << k << " g=" << g << "\n";
    for (const auto& st : strands) {
        os << "  strand " << st.label << ":";
        for (std::size_t i = 0; i < st.labels.size(); ++i) os << " V^(" << st.labels[i] << ")[" << st.dims[i] << "]";
        os << " -> Vbar^(" << st.label << ")[" << st.quotient_dim << "]"
           << (st.exact ? " exact" : " NOT exact") << (st.composites_zero ? "" : ", composites nonzero") << "\n";
    }
    os << "  U dims:";
    for (auto d : u_dims) os << " " << d;
    os << "\n";
    return os.str();
}

}  // namespace modres
