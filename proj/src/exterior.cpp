#include "modres/exterior.hpp"

#include <sstream>
#include <stdexcept>

#include "modres/arith.hpp"

namespace modres {

int wedge_sign(Mono x, Mono y) {
    if (x & y) return 0;
    int inv = 0;
    for (Mono t = y; t; t &= t - 1) {
        const int v = __builtin_ctz(t);
        inv += __builtin_popcount(x >> (v + 1));
    }
    return inv & 1 ? -1 : 1;
}

ExteriorVector::ExteriorVector(int g) : g_(g) {
    if (g < 0 || g > kMaxGenus) throw std::invalid_argument("ExteriorVector: genus out of range");
}

ExteriorVector ExteriorVector::basis(int g, Mono m, std::int64_t c) {
    ExteriorVector v(g);
    if ((m >> (2 * g)) != 0) throw std::invalid_argument("ExteriorVector: monomial outside genus");
    v.add(m, c);
    return v;
}

std::int64_t ExteriorVector::coeff(Mono m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

void ExteriorVector::add(Mono m, std::int64_t c) {
    if (!c) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second = checked_add(it->second, c);
        if (!it->second) terms_.erase(it);
    }
}

ExteriorVector& ExteriorVector::operator+=(const ExteriorVector& o) {
    if (o.g_ != g_) throw std::invalid_argument("ExteriorVector: genus mismatch");
    for (auto [m, c] : o.terms_) add(m, c);
    return *this;
}

ExteriorVector ExteriorVector::operator+(const ExteriorVector& o) const {
    ExteriorVector r(*this);
    r += o;
    return r;
}

ExteriorVector ExteriorVector::operator-(const ExteriorVector& o) const { return *this + o.scaled(-1); }

ExteriorVector ExteriorVector::scaled(std::int64_t s) const {
    ExteriorVector r(g_);
    for (auto [m, c] : terms_) r.add(m, checked_mul(c, s));
    return r;
}

std::string ExteriorVector::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [m, c] : terms_) {
        os << (first ? "" : " + ") << c << "*";
        first = false;
        if (!m) {
            os << "1";
            continue;
        }
        bool f2 = true;
        for (int i = 0; i < 2 * g_; ++i)
            if ((m >> i) & 1) {
                os << (f2 ? "" : "^") << (i < g_ ? 'a' : 'b') << (i % g_) + 1;
                f2 = false;
            }
    }
    return os.str();
}

ExteriorVector wedge(const ExteriorVector& x, const ExteriorVector& y) {
    if (x.genus() != y.genus()) throw std::invalid_argument("wedge: genus mismatch");
    ExteriorVector r(x.genus());
    for (auto [m1, c1] : x.terms())
        for (auto [m2, c2] : y.terms()) {
            const int s = wedge_sign(m1, m2);
            if (s) r.add(m1 | m2, checked_mul(checked_mul(c1, c2), s));
        }
    return r;
}

std::int64_t inner_product(const ExteriorVector& x, const ExteriorVector& y) {
    if (x.genus() != y.genus()) throw std::invalid_argument("inner_product: genus mismatch");
    std::int64_t s = 0;
    for (auto [m, c] : x.terms()) {
        const std::int64_t d = y.coeff(m);
        if (d) s = checked_add(s, checked_mul(c, d));
    }
    return s;
}

ExteriorVector omega(int g) {
    ExteriorVector w(g);
    for (int i = 1; i <= g; ++i) w.add(gen_a(g, i) | gen_b(g, i), 1);  // a_i ^ b_i is already sorted
    return w;
}

ExteriorVector lefschetz_E(const ExteriorVector& v) { return wedge(v, omega(v.genus())); }

ExteriorVector lefschetz_F(const ExteriorVector& v) {
    const int g = v.genus();
    ExteriorVector r(g);
    for (auto [m, c] : v.terms())
        for (int i = 1; i <= g; ++i) {
            const Mono pair = gen_a(g, i) | gen_b(g, i);
            if ((m & pair) != pair) continue;
            const Mono rest = m & ~pair;
            r.add(rest, checked_mul(c, wedge_sign(rest, pair)));
        }
    return r;
}

ExteriorVector lefschetz_H(const ExteriorVector& v) {
    ExteriorVector r(v.genus());
    for (auto [m, c] : v.terms()) r.add(m, checked_mul(c, __builtin_popcount(m) - v.genus()));
    return r;
}

IntMatrix symplectic_form(int g) {
    IntMatrix o(2 * g, 2 * g);
    for (int i = 0; i < g; ++i) {
        o.at(i, g + i) = 1;
        o.at(g + i, i) = -1;
    }
    return o;
}

bool is_symplectic(const IntMatrix& m, int g) {
    if (m.rows() != static_cast<std::size_t>(2 * g) || m.cols() != m.rows()) return false;
    const IntMatrix o = symplectic_form(g);
    return m.transpose() * o * m == o;
}

SpToken token_e(int i) {
    SpToken t;
    t.kind = SpToken::Kind::LieE;
    t.index = i;
    t.label = "e" + std::to_string(i);
    return t;
}

SpToken token_f(int i) {
    SpToken t;
    t.kind = SpToken::Kind::LieF;
    t.index = i;
    t.label = "f" + std::to_string(i);
    return t;
}

SpToken token_S(int j) {
    SpToken t;
    t.kind = SpToken::Kind::S;
    t.index = j;
    t.label = "S" + std::to_string(j);
    return t;
}

SpToken token_perm(const Permutation& sigma, std::string label) {
    SpToken t;
    t.kind = SpToken::Kind::Perm;
    t.perm = sigma;
    t.label = label.empty() ? "perm" + sigma.to_string() : std::move(label);
    return t;
}

SpToken token_matrix(const IntMatrix& m, int g, std::string label) {
    if (!is_symplectic(m, g)) throw std::invalid_argument("token_matrix: matrix is not integral symplectic");
    SpToken t;
    t.kind = SpToken::Kind::Matrix;
    t.matrix = m;
    t.label = label.empty() ? "M" : std::move(label);
    return t;
}

SpToken token_transvection(const std::vector<std::int64_t>& v, int g, std::string label) {
    if (v.size() != static_cast<std::size_t>(2 * g)) throw std::invalid_argument("token_transvection: bad vector");
    const IntMatrix o = symplectic_form(g);
    IntMatrix m = IntMatrix::identity(2 * g);
    // column x = e_c: add (e_c, v) v
    for (int c = 0; c < 2 * g; ++c) {
        std::int64_t f = 0;
        for (int r = 0; r < 2 * g; ++r) f = checked_add(f, checked_mul(o.at(c, r), v[r]));
        for (int r = 0; r < 2 * g; ++r) m.at(r, c) = checked_add(m.at(r, c), checked_mul(f, v[r]));
    }
    return token_matrix(m, g, std::move(label));
}

IntMatrix token_h_matrix(const SpToken& t, int g) {
    IntMatrix m(2 * g, 2 * g);
    auto a = [g](int i) { (void)g; return i - 1; };
    auto b = [g](int i) { return g + i - 1; };
    switch (t.kind) {
        case SpToken::Kind::LieE:
        case SpToken::Kind::LieF: {
            const int i = t.index;
            if (i < 1 || i > g) throw std::invalid_argument("Lie token index out of range");
            if (i < g) {
                m.at(a(i), a(i + 1)) = 1;   // a_{i+1} -> a_i
                m.at(b(i + 1), b(i)) = -1;  // b_i -> -b_{i+1}
            } else {
                m.at(a(g), b(g)) = 1;  // b_g -> a_g
            }
            return t.kind == SpToken::Kind::LieE ? m : m.transpose();
        }
        case SpToken::Kind::S: {
            const int j = t.index;
            if (j < 1 || j > g) throw std::invalid_argument("S token index out of range");
            m = IntMatrix::identity(2 * g);
            m.at(a(j), a(j)) = 0;
            m.at(b(j), b(j)) = 0;
            m.at(b(j), a(j)) = -1;  // a_j -> -b_j
            m.at(a(j), b(j)) = 1;   // b_j -> a_j
            return m;
        }
        case SpToken::Kind::Perm: {
            if (t.perm.size() != g) throw std::invalid_argument("permutation token has wrong size");
            for (int i = 0; i < g; ++i) {
                m.at(t.perm(i), i) = 1;
                m.at(g + t.perm(i), g + i) = 1;
            }
            return m;
        }
        case SpToken::Kind::Matrix:
            if (t.matrix.rows() != static_cast<std::size_t>(2 * g)) throw std::invalid_argument("matrix token has wrong size");
            return t.matrix;
    }
    return m;
}

IntMatrix word_h_matrix(const SpWord& w, int g) {
    IntMatrix m = IntMatrix::identity(2 * g);
    for (const auto& t : w) {
        if (!t.is_group()) throw std::invalid_argument("word_h_matrix: Lie token in group word");
        m = m * token_h_matrix(t, g);
    }
    return m;
}

IntMatrix symplectic_inverse(const IntMatrix& m, int g) {
    // M^T O M = O  =>  M^{-1} = O^{-1} M^T O, and O^{-1} = -O
    const IntMatrix o = symplectic_form(g);
    IntMatrix neg(2 * g, 2 * g);
    for (int i = 0; i < 2 * g; ++i)
        for (int j = 0; j < 2 * g; ++j) neg.at(i, j) = -o.at(i, j);
    return neg * m.transpose() * o;
}

namespace {
std::vector<std::vector<std::pair<int, std::int64_t>>> columns_of(const IntMatrix& m) {
    std::vector<std::vector<std::pair<int, std::int64_t>>> cols(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (m.at(r, c)) cols[c].emplace_back(static_cast<int>(r), m.at(r, c));
    return cols;
}

ExteriorVector apply_derivation(const IntMatrix& x, const ExteriorVector& v) {
    const auto cols = columns_of(x);
    ExteriorVector r(v.genus());
    for (auto [m, c] : v.terms()) {
        for (Mono t = m; t; t &= t - 1) {
            const int l = __builtin_ctz(t);
            const Mono prefix = m & ((Mono(1) << l) - 1);
            const Mono suffix = m & ~((Mono(2) << l) - 1);
            for (auto [gen, coef] : cols[l]) {
                const Mono bit = Mono(1) << gen;
                const int s1 = wedge_sign(prefix, bit);
                if (!s1) continue;
                const int s2 = wedge_sign(prefix | bit, suffix);
                if (!s2) continue;
                r.add(prefix | bit | suffix, checked_mul(checked_mul(c, coef), s1 * s2));
            }
        }
    }
    return r;
}
}  // namespace

ExteriorVector apply_h_matrix_automorphism(const IntMatrix& mat, const ExteriorVector& v) {
    const auto cols = columns_of(mat);
    ExteriorVector r(v.genus());
    for (auto [m, c] : v.terms()) {
        std::map<Mono, std::int64_t> state{{0, c}};
        for (Mono t = m; t; t &= t - 1) {
            const int l = __builtin_ctz(t);
            std::map<Mono, std::int64_t> next;
            for (auto [sm, sc] : state)
                for (auto [gen, coef] : cols[l]) {
                    const Mono bit = Mono(1) << gen;
                    const int s = wedge_sign(sm, bit);
                    if (!s) continue;
                    auto& slot = next[sm | bit];
                    slot = checked_add(slot, checked_mul(checked_mul(sc, coef), s));
                }
            state.clear();
            for (auto [k, val] : next)
                if (val) state.emplace(k, val);
        }
        for (auto [k, val] : state) r.add(k, val);
    }
    return r;
}

ExteriorVector apply_token(const SpToken& t, const ExteriorVector& v) {
    const IntMatrix m = token_h_matrix(t, v.genus());
    return t.is_group() ? apply_h_matrix_automorphism(m, v) : apply_derivation(m, v);
}

ExteriorVector sp_action(const SpWord& w, const ExteriorVector& v) {
    ExteriorVector r = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = apply_token(*it, r);
    return r;
}

SpWord parse_word(const std::string& s, int g) {
    SpWord w;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty() || cur == "1") return;  // "1" is the empty word
        const char kind = cur[0];
        int idx = 0;
        try {
            std::size_t used = 0;
            idx = std::stoi(cur.substr(1), &used);
            if (used != cur.size() - 1) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad word token '" + cur + "'");
        }
        auto need = [&](int hi) {
            if (idx < 1 || idx > hi) throw std::invalid_argument("token '" + cur + "' index out of range for genus " + std::to_string(g));
        };
        std::vector<std::int64_t> v(2 * g, 0);
        switch (kind) {
            case 'S': need(g); w.push_back(token_S(idx)); break;
            case 'e': need(g); w.push_back(token_e(idx)); break;
            case 'f': need(g); w.push_back(token_f(idx)); break;
            case 'P': {
                need(g - 1);
                std::vector<int> img(g);
                for (int i = 0; i < g; ++i) img[i] = i;
                std::swap(img[idx - 1], img[idx]);
                w.push_back(token_perm(Permutation(img), cur));
                break;
            }
            case 'A': need(g); v[idx - 1] = 1; w.push_back(token_transvection(v, g, cur)); break;
            case 'B': need(g); v[g + idx - 1] = 1; w.push_back(token_transvection(v, g, cur)); break;
            case 'C':
                need(g - 1);
                v[idx - 1] = 1;
                v[idx] = 1;
                w.push_back(token_transvection(v, g, cur));
                break;
            default: throw std::invalid_argument("unknown word token '" + cur + "'");
        }
        cur.clear();
    };
    for (char ch : s) {
        if (ch == ' ' || ch == '.' || ch == ',') flush();
        else cur.push_back(ch);
    }
    flush();
    return w;
}

std::string word_to_string(const SpWord& w) {
    std::string s;
    for (const auto& t : w) s += (s.empty() ? "" : ".") + t.label;
    return s.empty() ? "1" : s;
}

SpWord random_group_word(std::mt19937_64& rng, int g, int max_len) {
    const int len = static_cast<int>(rng() % (max_len + 1));
    std::string s;
    for (int i = 0; i < len; ++i) {
        const int kinds = g >= 2 ? 5 : 3;
        const int k = static_cast<int>(rng() % kinds);
        const char letter = "SABPC"[k];
        const int hi = (letter == 'P' || letter == 'C') ? g - 1 : g;
        s += std::string(s.empty() ? "" : ".") + letter + std::to_string(1 + rng() % hi);
    }
    return parse_word(s, g);
}

}  // namespace modres
