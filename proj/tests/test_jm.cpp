#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "modres/arith.hpp"
#include "modres/dims_fusion.hpp"
#include "modres/jm_extension.hpp"

using namespace modres;

namespace {
bool passes(const std::vector<Check>& cs) {
    bool ok = true;
    for (const auto& c : cs) {
        if (!c.pass) MESSAGE(c.name << ": " << c.details);
        ok = ok && c.pass;
    }
    return ok;
}

ExteriorVector A(int g, int i) { return ExteriorVector::basis(g, gen_a(g, i)); }
ExteriorVector B(int g, int i) { return ExteriorVector::basis(g, gen_b(g, i)); }
}  // namespace

TEST_CASE("nu and mu on small examples") {
    // J is symplectic and J^2 = -1
    for (int g = 1; g <= 3; ++g) {
        const IntMatrix j = j_matrix(g);
        CHECK(is_symplectic(j, g));
        CHECK(j * j + IntMatrix::identity(2 * g) == IntMatrix(2 * g, 2 * g));
    }
    CHECK(symplectic_pairing(A(2, 1), B(2, 1)) == 1);
    CHECK(symplectic_pairing(B(2, 1), A(2, 1)) == -1);
    CHECK(symplectic_pairing(A(2, 1), B(2, 2)) == 0);
    // g = 1: mu(a1) nu(b1) + nu(b1) mu(a1) = I
    for (Mono m = 0; m < 4; ++m) {
        const auto v = ExteriorVector::basis(1, m);
        CHECK(mu(A(1, 1), nu(B(1, 1), v)) + nu(B(1, 1), mu(A(1, 1), v)) == v);
    }
    // mu is the adjoint of nu(Jx), checked entrywise
    for (int g = 1; g <= 2; ++g)
        for (Mono x = 1; x < (Mono(1) << (2 * g)); ++x) {
            const auto xv = ExteriorVector::basis(g, x).scaled(3);
            for (Mono u = 0; u < (Mono(1) << (2 * g)); ++u)
                for (Mono v = 0; v < (Mono(1) << (2 * g)); ++v) {
                    const auto uu = ExteriorVector::basis(g, u), vv = ExteriorVector::basis(g, v);
                    CHECK(inner_product(mu(xv, uu), vv) == inner_product(uu, wedge(apply_J(xv), vv)));
                }
        }
    CHECK_THROWS(mu(A(2, 1) + wedge(A(2, 1), B(2, 2)), A(2, 2)));
    // [E, mu(a1)] = nu(a1) on wedge^* H_1(Sigma_2)
    for (Mono m = 0; m < 16; ++m) {
        const auto v = ExteriorVector::basis(2, m);
        CHECK(lefschetz_E(mu(A(2, 1), v)) - mu(A(2, 1), lefschetz_E(v)) == nu(A(2, 1), v));
    }
}

TEST_CASE("nu and mu identities") {
    for (int g = 1; g <= 3; ++g) CHECK(passes(lemma16_check(g, 1000 + g)));
}

TEST_CASE("quotient of wedge^m H by omega ^ wedge^{m-2} H") {
    for (int g = 1; g <= 4; ++g)
        for (int m = 0; m <= std::min(3, 2 * g); ++m) {
            const JmQuotientSpace q(5, m, g);
            const std::int64_t expect = binomial(2 * g, m) - (m >= 2 ? binomial(2 * g, m - 2) : 0);
            CHECK(static_cast<std::int64_t>(q.dim()) == std::max<std::int64_t>(expect, 0));
        }
    const JmQuotientSpace q(5, 3, 3);
    CHECK(q.dim() == 14);
    // omega ^ y reduces to zero; reduction is idempotent and Sp-equivariant
    for (Mono y : {gen_a(3, 1), gen_b(3, 2), gen_a(3, 3)}) {
        const FpVec r = q.reduce(q.coords(wedge(omega(3), ExteriorVector::basis(3, y))));
        CHECK(std::all_of(r.begin(), r.end(), [](auto c) { return c == 0; }));
    }
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        FpVec x(q.monomials().size());
        for (auto& c : x) c = rng() % 5;
        const FpVec r = q.reduce(x);
        CHECK(q.reduce(r) == r);
        const SpWord w = random_group_word(rng, 3, 4);
        CHECK(q.act(w, x) == q.act(w, r));
    }
}

TEST_CASE("induced maps and radical submodules") {
    CHECK(passes(lemma17_check(5, 1, 3, 3, 11)));
    CHECK(passes(lemma17_check(7, 2, 3, 4, 12)));
    CHECK(passes(lemma17_check(7, 1, 2, 3, 13)));
    CHECK(passes(lemma17_check(5, 1, 1, 3, 14)));
    // p = 3 has nonzero radicals already at g = 4
    CHECK(passes(lemma17_check(3, 1, 1, 4, 15)));
    const BlockModule rad(3, 1, 1, 4, JmVariant::Radical);
    CHECK(rad.top_dim() == 1);
    CHECK(rad.bottom_dim() == 8);
    const auto& q = rad.space();
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10; ++t) {
        const JmElement e1 = jm_random(q, rng), e2 = jm_random(q, rng);
        CHECK(rad.action(jm_multiply(q, e1, e2)) == rad.action(e1) * rad.action(e2));
    }
}

TEST_CASE("mu_induced examples") {
    // omega ^ y induces zero
    const auto x = wedge(omega(3), A(3, 2));
    CHECK(mu_induced(5, 1, 3, 3, x, JmVariant::Full).is_zero());
    CHECK(mu_induced(5, 1, 3, 3, wedge(wedge(A(3, 1), A(3, 2)), A(3, 3)), JmVariant::Quotient).rows() == 1);
    CHECK_THROWS(mu_induced(5, 1, 3, 3, A(3, 1), JmVariant::Full));
    CHECK(parse_variant("radical") == JmVariant::Radical);
    CHECK_THROWS(parse_variant("other"));
}

TEST_CASE("block action is a representation") {
    for (JmVariant var : {JmVariant::Full, JmVariant::Quotient, JmVariant::Radical}) {
        const BlockModule mod(5, 1, 3, 3, var);
        const auto& q = mod.space();
        std::mt19937_64 rng(42);
        CHECK(mod.action(jm_identity(q)) == FpMatrix::identity(mod.dim(), 5));
        for (int t = 0; t < 50; ++t) {
            const JmElement e1 = jm_random(q, rng), e2 = jm_random(q, rng);
            const FpMatrix lhs = mod.action(jm_multiply(q, e1, e2));
            CHECK(lhs == mod.action(e1) * mod.action(e2));
            // bottom factor invariant: upper-right block zero
            for (std::size_t r = 0; r < mod.top_dim(); ++r)
                for (std::size_t c = mod.top_dim(); c < mod.dim(); ++c) CHECK(lhs.at(r, c) == 0);
        }
        const JmElement x = jm_abelian(q, wedge(wedge(A(3, 1), B(3, 2)), A(3, 3)));
        const JmElement xi = jm_abelian(q, wedge(wedge(A(3, 1), B(3, 2)), A(3, 3)).scaled(-1));
        CHECK(mod.action(jm_multiply(q, x, xi)) == FpMatrix::identity(mod.dim(), 5));
    }
    // denominators: (x/2) twice equals x
    const BlockModule mod(5, 1, 3, 3, JmVariant::Quotient);
    const auto& q = mod.space();
    const auto xv = wedge(wedge(A(3, 1), A(3, 2)), B(3, 3));
    const JmElement half = jm_abelian(q, xv, 2);
    const FpMatrix twice = mod.action(half) * mod.action(half);
    CHECK(twice == mod.action(jm_abelian(q, xv)));
    CHECK_THROWS(jm_identity(q, 5));
    CHECK_THROWS(jm_multiply(q, half, jm_identity(q)));
    // g = 2 has a zero bottom factor
    const BlockModule small(5, 1, 3, 2, JmVariant::Quotient);
    CHECK(small.bottom_dim() == 0);
}

TEST_CASE("non-split witness") {
    const WitnessReport none = nonsplit_witness(5, 1, 2);
    CHECK(!none.found());
    CHECK(none.bottom_dim == 0);
    const WitnessReport w = nonsplit_witness(5, 1, 3);
    CHECK(w.top_dim == 14);
    CHECK(w.bottom_dim == 1);
    CHECK(w.search_dim == 14);
    REQUIRE(w.found());
    CHECK(w.nonsplit());
    // the class of omega ^ y never witnesses
    const BlockModule mod(5, 1, 3, 3, JmVariant::Quotient);
    for (Mono y = 0; y < 64; ++y)
        if (__builtin_popcount(y) == 1)
            CHECK(mod.mu_matrix(mod.space().coords(wedge(omega(3), ExteriorVector::basis(3, y)))).is_zero());
    // without the abelian generator the group-only extension splits
    std::vector<JmElement> gens{jm_group(mod.space(), parse_word("S1", 3)), jm_group(mod.space(), parse_word("A2", 3))};
    CHECK(equivariant_section_exists(mod, gens));
    CHECK_THROWS(nonsplit_witness(5, 2, 3));
}

TEST_CASE("two-strand sequence of U-spaces") {
    const Sequence69Report r = sequence69_check(5, 1, 3);
    CHECK(r.pass());
    CHECK(r.strands[0].quotient_dim == 14);
    CHECK(r.strands[1].quotient_dim == 1);
    for (std::uint32_t p : {7u, 11u})
        for (int k = 1; k < static_cast<int>(p) - 3; ++k)
            for (int g = 1; g <= 4; ++g) {
                const auto rep = sequence69_check(p, k, g);
                CHECK_MESSAGE(rep.pass(), rep.to_string());
                for (const auto& st : rep.strands)
                    if (st.label <= g + 1)
                        CHECK(static_cast<std::int64_t>(st.quotient_dim) == verlinde_dim(static_cast<int>(p), st.label, g));
            }
    // long strands
    for (int g : {6, 8}) {
        const auto rep = sequence69_check(5, 1, g);
        CHECK_MESSAGE(rep.pass(), rep.to_string());
        if (g == 8) CHECK(rep.strands[0].dims.size() >= 2);
    }
    // boundary: k = p - 4 puts the second strand at p - 1
    CHECK(sequence69_check(7, 3, 3).strands[1].label == 6);
    CHECK_THROWS(sequence69_check(5, 2, 3));
}
