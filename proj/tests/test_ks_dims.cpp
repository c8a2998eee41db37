#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "modres/arith.hpp"
#include "modres/dims_fusion.hpp"
#include "modres/ks_oracle.hpp"
#include "modres/resolution.hpp"

using namespace modres;

TEST_CASE("interval sets normalize") {
    IntervalSet a({{2, 3}, {0, 1}, {1, 2}});
    CHECK(a.intervals() == std::vector<std::pair<int, int>>{{0, 3}});
    CHECK(IntervalSet({{0, 2}, {4, 5}}).minus_prefix(1).intervals() == std::vector<std::pair<int, int>>{{1, 2}, {4, 5}});
    CHECK(IntervalSet({{2, 3}}).union_prefix(2) == IntervalSet({{0, 3}}));
    CHECK(IntervalSet().to_string() == "{}");
}

TEST_CASE("admissible sets: worked examples") {
    auto c22 = make_ks_context(Diagram2(2, 2), 3);
    auto a = admissible_sets(c22).admissible;
    REQUIRE(a.size() == 2);
    CHECK(a[0].empty());
    CHECK(a[1] == IntervalSet({{0, 1}}));
    auto f = composition_factors(c22);
    CHECK(f == std::vector<Diagram2>{Diagram2(2, 2), Diagram2(4, 0)});
    auto c31 = make_ks_context(Diagram2(3, 1), 3);
    CHECK(admissible_sets(c31).admissible.size() == 1);
    CHECK(c31.digits == std::vector<int>{0, 1});
    CHECK(c31.k_tau == 1);
}

namespace {
// Oracle: every subset of positions 0..B-1 decomposes uniquely into maximal runs; keep those
// whose runs are admissible. Independent of the recursive enumeration.
std::vector<IntervalSet> brute_admissible(const KsContext& ctx, int B) {
    std::vector<IntervalSet> out;
    for (std::uint32_t m = 0; m < (1u << B); ++m) {
        std::vector<std::pair<int, int>> runs;
        for (int i = 0; i < B; ++i) {
            if (!((m >> i) & 1)) continue;
            if (!runs.empty() && runs.back().second == i)
                runs.back().second = i + 1;
            else
                runs.emplace_back(i, i + 1);
        }
        IntervalSet I(runs);
        if (is_admissible(I, ctx) && delta(I, ctx) <= ctx.tau.b) out.push_back(I);
    }
    std::sort(out.begin(), out.end());
    return out;
}
}  // namespace

TEST_CASE("admissible enumeration against a subset oracle and the Gram radical") {
    for (int p : {3, 5, 7})
        for (int n = 0; n <= 12; ++n)
            for (int b = 0; 2 * b <= n; ++b) {
                Diagram2 t(n - b, b);
                auto ctx = make_ks_context(t, p);
                auto A = admissible_sets(ctx).admissible;
                CHECK(A == brute_admissible(ctx, ctx.endpoint_bound() + 3));
                std::int64_t total = 0;
                for (const auto& I : A) total += static_cast<std::int64_t>(simple_quotient(p, nu(I, ctx)).dim());
                CHECK(total == catalan(n, b));
                CHECK(ks_recursive_dim(t, p) == static_cast<std::int64_t>(simple_quotient(p, t).dim()));
            }
}

TEST_CASE("phi bijection on seeded contexts") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const int p = std::vector<int>{3, 5, 7}[rng() % 3];
        const int c0 = 1 + static_cast<int>(rng() % (p - 1));
        const int c = c0 + p * (1 + static_cast<int>(rng() % (p * p * p)));
        const int b = static_cast<int>(rng() % 400);
        auto rep = phi_bijection(make_ks_context(Diagram2(b + c - 1, b), p));
        CHECK(rep.pass());
    }
    CHECK_THROWS(phi_bijection(make_ks_context(Diagram2(2, 1), 3)));  // c0 = 2 but a - b = 1
    CHECK_THROWS(phi_bijection(make_ks_context(Diagram2(5, 0), 3)));  // c = 6 divisible by p
}

TEST_CASE("d_k^n formula, recursion and boundary values") {
    CHECK(d_dim(3, 4, 1) == 1);
    for (int p : {3, 5, 7, 11})
        for (int n = 0; n <= 14; ++n) {
            if (n % 2 == 1) CHECK(d_dim(p, n, 0) == 0);
            if (n % 2 == 0) CHECK(d_dim(p, n, p) == 0);
            for (int k = 1; k < p; ++k) {
                if ((n + 2 - k) % 2 != 0) continue;
                const std::int64_t lhs = d_dim(p, n + 1, k);
                const std::int64_t rhs = d_dim(p, n, k - 1) + d_dim(p, n, k + 1);
                CHECK(lhs == rhs);
            }
        }
    for (int p : {3, 5, 7})
        for (int n = 0; n <= 12; ++n)
            for (int k = 1; k < p && k <= n + 1; ++k)
                if ((n + 1 - k) % 2 == 0)
                    CHECK(d_dim(p, n, k) == static_cast<std::int64_t>(simple_quotient(p, Diagram2::from_weight(n, k)).dim()));
}

TEST_CASE("Fibonacci numbers and the five-periodic sums") {
    CHECK(fibonacci(-1) == 1);
    CHECK(fibonacci(-2) == -1);
    CHECK(fibonacci(10) == 55);
    CHECK(fib_catalan_sums(1).odd_a == 2);
    for (int r = 0; r <= 12; ++r) {
        auto s = fib_catalan_sums(r);
        CHECK(s.odd_a == fibonacci(2 * r + 1));
        CHECK(s.odd_b == fibonacci(2 * r + 1));
        if (r >= 1) {
            CHECK(s.even_a == fibonacci(2 * r));
            CHECK(s.even_b == fibonacci(2 * r));
        }
    }
}

TEST_CASE("fusion algebra") {
    for (int p : {3, 5, 7, 11, 13}) {
        FusionAlgebra A(p);
        for (int j = 1; j < p; ++j)
            for (int k = 1; k < p; ++k) {
                auto x = A.multiply(A.label(j), A.label(k));
                CHECK(x == A.multiply(A.label(k), A.label(j)));
                for (auto m : x.mult) CHECK(m >= 0);
                for (int l = 1; l < p; ++l)
                    CHECK(A.multiply(A.multiply(A.label(j), A.label(k)), A.label(l)) ==
                          A.multiply(A.label(j), A.multiply(A.label(k), A.label(l))));
            }
        CHECK(A.multiply(A.unit(), A.label(p - 1)) == A.label(p - 1));
        for (int k = 1; k < p; ++k) CHECK(A.multiply(A.label(p - 1), A.label(k)) == A.label(p - k));
        for (int k = 2; k < p - 1; ++k)
            CHECK(A.multiply(A.label(2), A.label(k)) == A.add(A.label(k + 1), A.label(k - 1)));
        CHECK(A.big_f_star() == A.scale(A.big_f(), 2));
    }
    FusionAlgebra A5(5);
    CHECK(A5.power(A5.small_f(), 2).mult == std::vector<std::int64_t>{5, 4, 1, 0});
    CHECK(A5.power(A5.small_f(), 3).mult == std::vector<std::int64_t>{14, 14, 6, 1});
}

TEST_CASE("Verlinde dimensions and closed forms") {
    for (int p : {3, 5, 7})
        for (int g = 0; g <= 5; ++g)
            for (int k = 1; k < p; ++k) CHECK(verlinde_dim(p, k, g) == verlinde_dim_from_d(p, k, g));
    CHECK(lemma15_dims(2) == std::array<std::int64_t, 4>{5, 4, 1, 0});
    CHECK(lemma15_dims(3) == std::array<std::int64_t, 4>{14, 14, 6, 1});
    for (int g = 0; g <= 8; ++g) {
        auto d = lemma15_dims(g);
        for (int k = 1; k <= 4; ++k) CHECK(d[k - 1] == verlinde_dim(5, k, g));
        FusionAlgebra A(5);
        CHECK(A.power(A.big_f(), g)[1] == d[0] + d[3]);
    }
}

TEST_CASE("R_p polynomials and Perron norms") {
    CHECK(tschebycheff_R(5).to_string() == "f");
    CHECK(tschebycheff_R(7).to_string() == "2f^2 - 7f + 7");
    CHECK(tschebycheff_R(9).to_string() == "2f^3 - 9f^2 + 9f + 3");
    CHECK(tschebycheff_R(11).to_string() == "3f^4 - 22f^3 + 55f^2 - 55f + 22");
    CHECK(tschebycheff_R(13).to_string() == "3f^5 - 26f^4 + 78f^3 - 91f^2 + 26f + 13");
    CHECK(tschebycheff_R(3).to_string() == "1");
    for (int p : {3, 5, 7, 11, 13}) {
        auto n = perron_norms(p);
        CHECK(std::abs(n.big_power - n.big_closed) < 1e-9);
        CHECK(std::abs(n.small_power - n.small_closed) < 1e-9);
        CHECK(std::abs(tschebycheff_R(p).evaluate(n.small_closed) - n.big_closed) < 1e-9);
    }
    CHECK(std::abs(perron_norms(5).small_closed - 3.6180339887) < 1e-9);
    CHECK(std::abs(perron_norms(3).small_closed - 3) < 1e-12);
    CHECK(std::abs(perron_norms(3).big_closed - 1) < 1e-12);
}

TEST_CASE("quantum dimension identity") {
    for (int p : {3, 5, 7, 11})
        for (int n = 0; n <= 12; ++n) CHECK(quantum_dim_identity(p, n).pass);
}
