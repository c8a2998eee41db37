#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "modres/tensor.hpp"

using namespace modres;

namespace {
TensorVector random_vector(std::mt19937_64& rng, int n, int terms = 6) {
    TensorVector v(n);
    for (int i = 0; i < terms; ++i) v.add(static_cast<SignWord>(rng() % (1u << n)), static_cast<int>(rng() % 9) - 4);
    return v;
}

Permutation random_perm(std::mt19937_64& rng, int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(img);
}

// Dense Kronecker-product oracle for E on (Z^2)^n, basis index = sign word.
std::vector<std::int64_t> dense_e(const std::vector<std::int64_t>& x, int n) {
    // e acts on one factor: e(e-) = e+, i.e. index bit 0 -> 1
    std::vector<std::int64_t> y(x.size(), 0);
    for (int slot = 0; slot < n; ++slot) {
        const std::size_t stride = std::size_t(1) << slot;
        for (std::size_t idx = 0; idx < x.size(); ++idx)
            if (!(idx & stride)) y[idx | stride] += x[idx];
    }
    return y;
}
}  // namespace

TEST_CASE("E agrees with a dense Kronecker oracle") {
    std::mt19937_64 rng(1);
    for (int n = 1; n <= 7; ++n) {
        auto v = random_vector(rng, n);
        std::vector<std::int64_t> x(1u << n, 0);
        for (auto [w, c] : v.terms()) x[w] = c;
        auto y = dense_e(x, n);
        auto ev_ = apply_sl2(Sl2::E, v);
        for (SignWord w = 0; w < (1u << n); ++w) CHECK(ev_.coeff(w) == y[w]);
    }
}

TEST_CASE("sl2 relations and adjointness") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + trial % 8;
        auto v = random_vector(rng, n), w = random_vector(rng, n);
        auto E = [](const TensorVector& x) { return apply_sl2(Sl2::E, x); };
        auto F = [](const TensorVector& x) { return apply_sl2(Sl2::F, x); };
        auto H = [](const TensorVector& x) { return apply_sl2(Sl2::H, x); };
        CHECK(E(F(v)) - F(E(v)) == H(v));
        CHECK(H(E(v)) - E(H(v)) == E(v).scaled(2));
        CHECK(H(F(v)) - F(H(v)) == F(v).scaled(-2));
        CHECK(inner_product(E(v), w) == inner_product(v, F(w)));
        CHECK(inner_product(H(v), w) == inner_product(v, H(w)));
        auto s = random_perm(rng, n), t = random_perm(rng, n);
        CHECK(perm_action(s * t, v) == perm_action(s, perm_action(t, v)));
        CHECK(perm_action(s * t, v, true) == perm_action(s, perm_action(t, v, true), true));
        CHECK(perm_action(s, E(v)) == E(perm_action(s, v)));
        CHECK(perm_action(s, F(v)) == F(perm_action(s, v)));
        CHECK(inner_product(perm_action(s, v), perm_action(s, w)) == inner_product(v, w));
        CHECK(apply_e_power(3, v) == E(E(E(v))));
    }
}

TEST_CASE("cup and cap relations") {
    std::mt19937_64 rng(3);
    for (int n = 0; n <= 7; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            auto v = n ? random_vector(rng, n) : TensorVector::basis(0, 0, 3);
            for (int k = 1; k <= n + 1; ++k) {
                auto c = coev(k, v);
                CHECK(c.length() == n + 2);
                CHECK(ev(k, c) == v.scaled(-2));
                if (k + 1 <= n + 1) CHECK(ev(k + 1, c) == v);
                if (k - 1 >= 1) CHECK(ev(k - 1, c) == v);
                // coev image is sl2-invariant
                CHECK(apply_sl2(Sl2::E, coev(k, TensorVector::basis(n, 0))) ==
                      coev(k, apply_sl2(Sl2::E, TensorVector::basis(n, 0))));
                auto w = random_vector(rng, n + 2, 10);
                CHECK(inner_product(c, w) == -inner_product(v, ev(k, w)));
            }
        }
    }
    // the cup itself
    auto cup = coev(1, TensorVector::basis(0, 0));
    CHECK(cup.coeff(0b10) == 1);
    CHECK(cup.coeff(0b01) == -1);
    CHECK_THROWS(ev(0, cup));
    CHECK_THROWS(coev(2, TensorVector(0)));
}
