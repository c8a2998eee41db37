#include <algorithm>
#include <set>
#include <sstream>

#include "modres/arith.hpp"
#include "modres/fn_tqft.hpp"

namespace modres {

namespace {
std::string wstr(const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

Check make(const std::string& name, bool pass, const std::string& details) { return Check{name, pass, details}; }

// Relabel a tableau with labels in `labels` (sorted) to 1..n by rank.
Tableau2 relabel(const Tableau2& t, const std::vector<int>& labels) {
    auto rank_of = [&](int x) {
        auto it = std::lower_bound(labels.begin(), labels.end(), x);
        if (it == labels.end() || *it != x) throw std::logic_error("relabel: label outside the zero set");
        return static_cast<int>(it - labels.begin()) + 1;
    };
    Tableau2 r;
    for (int x : t.top) r.top.push_back(rank_of(x));
    for (int x : t.bottom) r.bottom.push_back(rank_of(x));
    return r;
}
}  // namespace

std::vector<Check> lemma2_check(int g) {
    bool equiv = true, iso = true, section = true, cover = true;
    std::ostringstream why;
    std::size_t total = 0;
    for (const auto& lambda : all_weights(g)) {
        const auto nset = zero_set(lambda);
        const int n = static_cast<int>(nset.size());
        total += std::size_t(1) << n;
        std::vector<ExteriorVector> images;
        for (SignWord w = 0; w < (SignWord(1) << n); ++w) {
            const TensorVector x = TensorVector::basis(n, w);
            const ExteriorVector ux = upsilon(lambda, x);
            images.push_back(ux);
            if (!(upsilon(lambda, apply_sl2(Sl2::E, x)) == lefschetz_E(ux)) ||
                !(upsilon(lambda, apply_sl2(Sl2::F, x)) == lefschetz_F(ux)) ||
                !(upsilon(lambda, apply_sl2(Sl2::H, x)) == lefschetz_H(ux))) {
                equiv = false;
                why << "equivariance fails at " << wstr(lambda) << "; ";
            }
            auto back = upsilon_inverse(lambda, ux);
            if (!back || !(*back == x)) iso = false;
        }
        for (std::size_t a = 0; a < images.size(); ++a)
            for (std::size_t b = 0; b < images.size(); ++b)
                if (inner_product(images[a], images[b]) != (a == b ? 1 : 0)) iso = false;
        // pi_N maps {g-n+1..g} onto N and the rest onto the complement, both increasingly
        std::vector<int> comp;
        for (int i = 1; i <= g; ++i)
            if (lambda[i - 1] != 0) comp.push_back(i);
        std::vector<int> pi(g);
        for (int i = 0; i < g - n; ++i) pi[i] = comp[i] - 1;
        for (int i = 0; i < n; ++i) pi[g - n + i] = nset[i] - 1;
        const Permutation pin(pi);
        Weight moved(g);
        for (int i = 0; i < g; ++i) moved[i] = lambda[pin(i)];
        const SpWord tok{token_perm(pin.inverse())};
        for (SignWord w = 0; w < (SignWord(1) << n); ++w) {
            const TensorVector x = TensorVector::basis(n, w);
            if (!(sp_action(tok, upsilon(lambda, x)) == upsilon(moved, x))) {
                section = false;
                why << "section property fails at " << wstr(lambda) << "; ";
            }
        }
    }
    cover = total == (std::size_t(1) << (2 * g));
    const std::string gs = "g=" + std::to_string(g);
    return {make("upsilon.equivariance", equiv, gs + " " + why.str()),
            make("upsilon.isometry", iso, gs),
            make("upsilon.section", section, gs),
            make("upsilon.weight_spaces_cover", cover, gs + " total=" + std::to_string(total))};
}

std::vector<Check> lemma3_check(int g) {
    bool ok = true;
    std::ostringstream why;
    std::size_t cases = 0;
    for (const auto& lambda : all_weights(g)) {
        const auto nset = zero_set(lambda);
        const int n = static_cast<int>(nset.size());
        for (int i = 1; i <= g; ++i) {
            Weight target = lambda;
            if (i < g) {
                target[i - 1] += 1;
                target[i] -= 1;
            } else {
                target[g - 1] += 2;
            }
            bool valid = true;
            for (int x : target) valid = valid && x >= -1 && x <= 1;
            const SpWord e{token_e(i)};
            for (SignWord w = 0; w < (SignWord(1) << n); ++w) {
                ++cases;
                const TensorVector x = TensorVector::basis(n, w);
                const ExteriorVector img = sp_action(e, upsilon(lambda, x));
                if (!valid) {
                    if (!img.is_zero()) {
                        ok = false;
                        why << "nonzero image off the weight lattice at " << wstr(lambda) << " i=" << i << "; ";
                    }
                    continue;
                }
                auto got = upsilon_inverse(target, img);
                if (!got) {
                    ok = false;
                    why << "image leaves W(lambda+alpha) at " << wstr(lambda) << " i=" << i << "; ";
                    continue;
                }
                TensorVector expect(static_cast<int>(zero_set(target).size()));
                if (i == g) {
                    if (lambda[g - 1] == -1) expect = x;
                } else {
                    const int li = lambda[i - 1], lj = lambda[i];
                    if (li == 0 && lj == 1) {
                        expect = x;
                    } else if (li == -1 && lj == 0) {
                        expect = x.scaled(-1);
                    } else if (li == -1 && lj == 1) {
                        const auto tn = zero_set(target);
                        const int k = static_cast<int>(std::find(tn.begin(), tn.end(), i) - tn.begin()) + 1;
                        expect = coev(k, x);
                    } else if (li == 0 && lj == 0) {
                        const int k = static_cast<int>(std::find(nset.begin(), nset.end(), i) - nset.begin()) + 1;
                        expect = ev(k, x).scaled(-1);
                    }
                }
                if (!(*got == expect)) {
                    ok = false;
                    why << "table mismatch at " << wstr(lambda) << " i=" << i << "; ";
                }
            }
        }
    }
    return {make("weight_table.cases", ok, "g=" + std::to_string(g) + " cases=" + std::to_string(cases) + " " + why.str())};
}

namespace {
struct Prediction {
    std::int64_t coeff = 0;
    Tableau2 s;
};

// Position of label x: (row 0 = top, 1 = bottom; column); column < b means a height-2 column.
std::pair<int, int> locate(const Tableau2& t, int x) {
    for (std::size_t k = 0; k < t.top.size(); ++k)
        if (t.top[k] == x) return {0, static_cast<int>(k)};
    for (std::size_t k = 0; k < t.bottom.size(); ++k)
        if (t.bottom[k] == x) return {1, static_cast<int>(k)};
    return {-1, -1};
}

void erase_column(Tableau2& t, int k) {
    t.top.erase(t.top.begin() + k);
    t.bottom.erase(t.bottom.begin() + k);
}

Prediction predict_rule(const Tableau2& t, int i, int li, int lj) {
    Prediction pr;
    pr.s = t;
    const int b = static_cast<int>(t.bottom.size());
    auto replace = [&](int from, int to) {
        for (auto& x : pr.s.top)
            if (x == from) x = to;
        for (auto& x : pr.s.bottom)
            if (x == from) x = to;
    };
    if (li == 0 && lj == 1) {  // rule 1
        replace(i, i + 1);
        pr.coeff = 1;
    } else if (li == -1 && lj == 0) {  // rule 2
        replace(i + 1, i);
        pr.coeff = -1;
    } else if (li == -1 && lj == 1) {  // rule 3: new column (i over i+1)
        pr.s.top.insert(pr.s.top.begin() + b, i);
        pr.s.bottom.push_back(i + 1);
        pr.coeff = 1;
    } else if (li == 0 && lj == 0) {  // rule 4
        auto [ri, ci] = locate(t, i);
        auto [rj, cj] = locate(t, i + 1);
        const bool col_i = ci < b || ri == 1, col_j = cj < b || rj == 1;
        if (!col_i && !col_j) return pr;  // (a)
        Tableau2 s = t;
        std::int64_t sign = 1;
        auto flip = [&](int k) {
            std::swap(s.top[k], s.bottom[k]);
            sign = -sign;
        };
        if (col_i && col_j && ci == cj) {  // (b): same column
            if (s.top[ci] != i) flip(ci);
            erase_column(s, ci);
            pr.s = s;
            pr.coeff = 2 * sign;
        } else if (col_i && col_j) {  // (c): columns (k over i), (l over i+1) -> (k over l); printed order carries the opposite sign
            if (s.bottom[ci] != i) flip(ci);
            if (s.bottom[cj] != i + 1) flip(cj);
            const int kk = s.top[ci], ll = s.top[cj];
            erase_column(s, std::max(ci, cj));
            erase_column(s, std::min(ci, cj));
            s.top.insert(s.top.begin() + static_cast<long>(s.bottom.size()), kk);
            s.bottom.push_back(ll);
            pr.s = s;
            pr.coeff = sign;
        } else if (col_i) {  // (d): column (i over k) deleted, single [i+1] becomes [k]
            if (s.top[ci] != i) flip(ci);
            const int kk = s.bottom[ci];
            erase_column(s, ci);
            for (auto& x : s.top)
                if (x == i + 1) x = kk;
            pr.s = s;
            pr.coeff = sign;
        } else {  // (e): column (k over i+1) deleted, single [i] becomes [k]
            if (s.bottom[cj] != i + 1) flip(cj);
            const int kk = s.top[cj];
            erase_column(s, cj);
            for (auto& x : s.top)
                if (x == i) x = kk;
            pr.s = s;
            pr.coeff = sign;
        }
    }
    return pr;
}
}  // namespace

std::vector<Check> lemma6_check(int g) {
    bool ok = true;
    std::ostringstream why;
    std::size_t cases = 0, rule4b = 0;
    for (const auto& lambda : all_weights(g)) {
        const auto nset = zero_set(lambda);
        const int n = static_cast<int>(nset.size());
        for (int i = 1; i < g; ++i) {
            const int li = lambda[i - 1], lj = lambda[i];
            Weight target = lambda;
            target[i - 1] += 1;
            target[i] -= 1;
            if (target[i - 1] > 1 || target[i] < -1) continue;
            const auto tset = zero_set(target);
            const SpWord e{token_e(i)};
            for (int j = 1; j <= n + 1; ++j) {
                if ((n + 1 - j) % 2 != 0) continue;
                const int b = (n + 1 - j) / 2, a = n - b;
                std::vector<int> labels = nset;
                do {
                    Tableau2 t;
                    t.top.assign(labels.begin(), labels.begin() + a);
                    t.bottom.assign(labels.begin() + a, labels.end());
                    ++cases;
                    const ExteriorVector img = sp_action(e, upsilon(lambda, polytabloid(relabel(t, nset))));
                    auto got = upsilon_inverse(target, img);
                    const Prediction pr = predict_rule(t, i, li, lj);
                    if (li == 0 && lj == 0 && pr.coeff != 0 && (pr.coeff == 2 || pr.coeff == -2)) ++rule4b;
                    TensorVector expect(static_cast<int>(tset.size()));
                    if (pr.coeff) expect = polytabloid(relabel(pr.s, tset)).scaled(pr.coeff);
                    if (!got || !(*got == expect)) {
                        ok = false;
                        why << "rule mismatch at " << wstr(lambda) << " i=" << i << " t=" << t.to_string() << "; ";
                    }
                } while (std::next_permutation(labels.begin(), labels.end()));
            }
        }
    }
    return {make("lefschetz.rules", ok,
                 "g=" + std::to_string(g) + " cases=" + std::to_string(cases) + " rule4b=" + std::to_string(rule4b) + " " +
                     why.str().substr(0, 400))};
}

Check handle_check(int g) {
    bool ok = true;
    for (Mono m = 0; m < (Mono(1) << (2 * g)); ++m) {
        const ExteriorVector v = ExteriorVector::basis(g, m);
        const ExteriorVector hp = handle_plus(v);
        if (!(handle_minus(hp) == v)) ok = false;
        if (!(handle_plus(lefschetz_E(v)) == lefschetz_E(hp))) ok = false;
        if (!(handle_plus(lefschetz_F(v)) == lefschetz_F(hp))) ok = false;
    }
    // H+ Upsilon_lambda = Upsilon_{lambda, +1}
    for (const auto& lambda : all_weights(g)) {
        Weight up = lambda;
        up.push_back(1);
        const int n = static_cast<int>(zero_set(lambda).size());
        for (SignWord w = 0; w < (SignWord(1) << n); ++w) {
            const TensorVector x = TensorVector::basis(n, w);
            if (!(handle_plus(upsilon(lambda, x)) == upsilon(up, x))) ok = false;
        }
    }
    // adjointness on random pairs of basis vectors
    for (Mono m = 0; m < (Mono(1) << (2 * g)); ++m)
        for (Mono m2 = 0; m2 < (Mono(1) << (2 * g + 2)); m2 += 7) {
            const auto a = ExteriorVector::basis(g, m), b = ExteriorVector::basis(g + 1, m2);
            if (inner_product(handle_plus(a), b) != inner_product(a, handle_minus(b))) ok = false;
        }
    return Check{"handle.identity", ok, "g=" + std::to_string(g)};
}

Check weyl_transitivity_check(int g) {
    SpWord gens;
    for (int j = 1; j <= g; ++j) gens.push_back(token_S(j));
    for (int i = 1; i < g; ++i) {
        std::vector<int> img(g);
        for (int t = 0; t < g; ++t) img[t] = t;
        std::swap(img[i - 1], img[i]);
        gens.push_back(token_perm(Permutation(img)));
    }
    auto rep = [g](const Weight& w) {
        Mono m = 0;
        for (int i = 1; i <= g; ++i)
            if (w[i - 1] == 1) m |= gen_a(g, i);
            else if (w[i - 1] == -1) m |= gen_b(g, i);
        return ExteriorVector::basis(g, m);
    };
    bool ok = true;
    std::map<int, std::size_t> counts;
    for (const auto& w : all_weights(g)) ++counts[static_cast<int>(zero_set(w).size())];
    for (int n = 0; n <= g; ++n) {
        if (counts[n] != static_cast<std::size_t>(binomial(g, n) * checked_pow(2, g - n))) ok = false;
        Weight start(g, 0);
        for (int i = 0; i < g - n; ++i) start[i] = 1;
        std::set<Weight> seen{start};
        std::vector<Weight> todo{start};
        while (!todo.empty()) {
            const Weight w = todo.back();
            todo.pop_back();
            for (const auto& t : gens) {
                const auto parts = weight_decompose(apply_token(t, rep(w)));
                if (parts.size() != 1) {
                    ok = false;
                    continue;
                }
                if (seen.insert(parts.begin()->first).second) todo.push_back(parts.begin()->first);
            }
        }
        if (seen.size() != counts[n]) ok = false;
    }
    return Check{"weyl.transitive", ok, "g=" + std::to_string(g)};
}

Check cyclic_generation_check(std::uint32_t p, int g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SpWord gens;
    for (int i = 1; i <= g; ++i) {
        gens.push_back(token_e(i));
        gens.push_back(token_f(i));
        gens.push_back(token_S(i));
    }
    for (int i = 1; i < g; ++i) {
        std::vector<int> img(g);
        for (int t = 0; t < g; ++t) img[t] = t;
        std::swap(img[i - 1], img[i]);
        gens.push_back(token_perm(Permutation(img)));
    }
    bool ok = true;
    std::ostringstream det;
    for (int j = 1; j <= g + 1; ++j) {
        const ModularLefschetz ml = modular_lefschetz(p, j, g);
        const std::size_t d = ml.dim();
        if (d == 0) continue;
        std::vector<FpMatrix> mats;
        for (const auto& t : gens) {
            const FpMatrix a = ml.action({t});
            if (!ml.quotient.preserves_radical(a)) ok = false;
            mats.push_back(ml.quotient.induced(a));
        }
        for (int trial = 0; trial < 10; ++trial) {
            FpVec v(d, 0);
            while (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; }))
                for (auto& x : v) x = rng() % p;
            std::vector<FpVec> span{v};
            std::size_t r = 1;
            for (std::size_t idx = 0; idx < span.size() && r < d; ++idx)
                for (const auto& m : mats) {
                    FpVec w = m.apply(span[idx]);
                    auto cand = span;
                    cand.push_back(w);
                    const std::size_t r2 = rank(FpMatrix::from_columns(cand, d, p));
                    if (r2 > r) {
                        span.push_back(w);
                        r = r2;
                    }
                }
            if (r != d) ok = false;
        }
        det << "dim Vbar^(" << j << ")=" << d << " ";
    }
    return Check{"fn_tqft.cyclic_generation", ok, "p=" + std::to_string(p) + " g=" + std::to_string(g) + " " + det.str()};
}

}  // namespace modres
