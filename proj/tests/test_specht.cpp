#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "modres/arith.hpp"
#include "modres/specht.hpp"

using namespace modres;

namespace {
// Number of b-subsets of {0..n-1} fixed setwise by sigma.
std::int64_t fixed_subsets(const Permutation& s, int b) {
    const int n = s.size();
    std::int64_t cnt = 0;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        if (__builtin_popcount(m) != b) continue;
        std::uint32_t img = 0;
        for (int i = 0; i < n; ++i)
            if ((m >> i) & 1) img |= 1u << s(i);
        cnt += img == m;
    }
    return cnt;
}

// Two-row Young rule: chi^{[a,b]} = perm char of b-subsets minus that of (b-1)-subsets.
std::int64_t young_rule_character(const Diagram2& d, const Permutation& s) {
    return fixed_subsets(s, d.b) - (d.b ? fixed_subsets(s, d.b - 1) : 0);
}
}  // namespace

TEST_CASE("diagram and weight conventions") {
    CHECK(Diagram2::from_weight(4, 1) == Diagram2(2, 2));
    CHECK(Diagram2::from_weight(4, 5) == Diagram2(4, 0));
    CHECK(Diagram2(3, 1).c() == 3);
    CHECK_THROWS(Diagram2(1, 2));
    CHECK_THROWS(Diagram2::from_weight(4, 2));
    CHECK(catalan(6, 6) == -5);
    CHECK(catalan(4, 5) == -1);
    CHECK(catalan(4, 2) == 2);
}

TEST_CASE("polytabloids") {
    Tableau2 t{{1, 2}, {3}};
    auto v = polytabloid(t);
    // (1 - (1 3)) e_{--+} = e_{--+} - e_{+--}
    CHECK(v.size() == 2);
    CHECK(v.coeff(0b100) == 1);
    CHECK(v.coeff(0b001) == -1);
    CHECK(tabloid_vector({3, 0b100}) == TensorVector::basis(3, 0b100));
    // swapping whole columns fixes e_t; flipping a column negates it
    Tableau2 a{{1, 2}, {3, 4}}, b{{2, 1}, {4, 3}}, c{{3, 2}, {1, 4}};
    CHECK(polytabloid(a) == polytabloid(b));
    CHECK(polytabloid(c) == polytabloid(a).scaled(-1));
}

TEST_CASE("Specht bases: dimension, span and ordering") {
    for (int n = 0; n <= 12; ++n)
        for (int c = 1 + (n % 2 == 0 ? 0 : 1); c <= n + 1; c += 2) {
            auto sb = specht_basis(n, c);
            CHECK(sb.dim() == static_cast<std::size_t>(catalan(n, (n + 1 - c) / 2)));
            if (n <= 10) CHECK(verify_specht_basis(sb));
            for (std::size_t i = 1; i < sb.tableaux.size(); ++i)
                CHECK(std::lexicographical_compare(sb.tableaux[i - 1].bottom.begin(), sb.tableaux[i - 1].bottom.end(),
                                                   sb.tableaux[i].bottom.begin(), sb.tableaux[i].bottom.end()));
            for (std::size_t j = 0; j < sb.dim(); ++j) {
                auto coords = specht_coordinates(sb, sb.vectors[j]);
                REQUIRE(coords);
                for (std::size_t i = 0; i < sb.dim(); ++i) CHECK((*coords)[i] == (i == j ? 1 : 0));
            }
        }
    auto s = specht_basis(4, 1);
    REQUIRE(s.dim() == 2);
    CHECK(s.tableaux[0].bottom == std::vector<int>{2, 4});
    CHECK(s.tableaux[1].bottom == std::vector<int>{3, 4});
}

TEST_CASE("coordinates of arbitrary polytabloids reconstruct exactly") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 9;
        const int b = static_cast<int>(rng() % (n / 2 + 1));
        std::vector<int> labels(n);
        for (int i = 0; i < n; ++i) labels[i] = i + 1;
        std::shuffle(labels.begin(), labels.end(), rng);
        Tableau2 t;
        t.top.assign(labels.begin(), labels.begin() + (n - b));
        t.bottom.assign(labels.begin() + (n - b), labels.end());
        auto sb = specht_basis(n, n - 2 * b + 1);
        auto v = polytabloid(t);
        auto coords = specht_coordinates(sb, v);
        REQUIRE(coords);
        TensorVector back(n);
        for (std::size_t i = 0; i < sb.dim(); ++i) back += sb.vectors[i].scaled((*coords)[i]);
        CHECK(back == v);
        auto m = specht_coordinates_mod(sb, v, 5);
        REQUIRE(m);
        for (std::size_t i = 0; i < sb.dim(); ++i) CHECK((*m)[i] == mod_p((*coords)[i], 5));
    }
    // a vector outside the span
    auto sb = specht_basis(2, 1);
    CHECK_FALSE(specht_coordinates(sb, TensorVector::basis(2, 0b01)));
}

TEST_CASE("ordinary characters against the two-row Young rule") {
    CHECK(ordinary_character(Diagram2(2, 1), Permutation::identity(3)) == 2);
    CHECK(ordinary_character(Diagram2(2, 1), Permutation::from_cycles(3, {{1, 2}})) == 0);
    CHECK(ordinary_character(Diagram2(2, 1), Permutation::from_cycles(3, {{1, 2, 3}})) == -1);
    for (int n = 1; n <= 9; ++n) {
        auto classes = partitions(n);
        std::vector<Diagram2> shapes;
        for (int b = 0; 2 * b <= n; ++b) shapes.emplace_back(n - b, b);
        std::vector<std::vector<std::int64_t>> table;
        for (const auto& d : shapes) {
            std::vector<std::int64_t> row;
            for (const auto& ct : classes) {
                auto s = Permutation::from_cycle_type(ct);
                const auto chi = ordinary_character(d, s);
                CHECK(chi == young_rule_character(d, s));
                row.push_back(chi);
            }
            table.push_back(row);
        }
        long long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        for (std::size_t x = 0; x < shapes.size(); ++x)
            for (std::size_t y = 0; y < shapes.size(); ++y) {
                long long s = 0;
                for (std::size_t c = 0; c < classes.size(); ++c) s += class_size(classes[c]) * table[x][c] * table[y][c];
                CHECK(s == (x == y ? fact : 0));
            }
    }
}

TEST_CASE("action matrices are homomorphisms and preserve the Gram form") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + trial % 6;
        const int b = 1 + static_cast<int>(rng() % (n / 2));
        auto sb = specht_basis(n, n - 2 * b + 1);
        std::vector<int> i1(n), i2(n);
        for (int i = 0; i < n; ++i) i1[i] = i2[i] = i;
        std::shuffle(i1.begin(), i1.end(), rng);
        std::shuffle(i2.begin(), i2.end(), rng);
        Permutation s(i1), t(i2);
        auto ms = specht_action_matrix(sb, s), mt = specht_action_matrix(sb, t);
        CHECK(specht_action_matrix(sb, s * t) == ms * mt);
        auto g = gram_matrix(sb.vectors);
        CHECK(ms.transpose() * g * ms == g);
    }
}
